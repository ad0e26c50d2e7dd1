#include "dioph/polynomial.hpp"

#include <fstream>
#include <sstream>

#include "dioph/errors.hpp"

namespace dioph {

unsigned Poly::degree_s() const {
    if (!homogeneous_degree) throw DomainError("polynomial is not homogeneous");
    return *homogeneous_degree;
}

Poly sphere_form(int d) {
    if (d < 1) throw DomainError("sphere form needs d >= 1");
    Poly f;
    f.dim = d;
    for (int i = 0; i < d; ++i) {
        std::vector<unsigned> e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = 2;
        f.terms.emplace(std::move(e), Rational(1));
    }
    f.homogeneous_degree = 2;
    return f;
}

namespace {

void derive_homogeneity(Poly& f) {
    std::optional<unsigned> deg;
    for (const auto& [e, c] : f.terms) {
        unsigned total = 0;
        for (unsigned s : e) total += s;
        if (!deg) deg = total;
        else if (*deg != total) {
            f.homogeneous_degree = std::nullopt;
            return;
        }
    }
    if (deg && *deg > 0) f.homogeneous_degree = deg;
    else f.homogeneous_degree = std::nullopt;
}

} // namespace

Poly parse_poly(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Poly f;
    long declared_s = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (declared_s < 0) {
            long d = 0, s = -1;
            if (!(ls >> d >> s))
                throw ParseError("poly line " + std::to_string(lineno) + ": expected header \"d s\"");
            if (d < 1 || s < 0)
                throw ParseError("poly header: need d >= 1 and s >= 0");
            std::string rest;
            if (ls >> rest) throw ParseError("poly header: trailing tokens");
            f.dim = static_cast<int>(d);
            declared_s = s;
            continue;
        }
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != static_cast<size_t>(f.dim) + 1)
            throw ParseError("poly line " + std::to_string(lineno) + ": expected " +
                             std::to_string(f.dim) + " exponents and a coefficient");
        std::vector<unsigned> e(static_cast<size_t>(f.dim));
        unsigned total = 0;
        for (int i = 0; i < f.dim; ++i) {
            const std::string& s = tok[static_cast<size_t>(i)];
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("poly line " + std::to_string(lineno) + ": bad exponent '" + s + "'");
            e[static_cast<size_t>(i)] = static_cast<unsigned>(std::stoul(s));
            total += e[static_cast<size_t>(i)];
        }
        if (declared_s > 0 && total != static_cast<unsigned>(declared_s))
            throw ParseError("poly line " + std::to_string(lineno) +
                             ": exponent tuple degree != declared s");
        Rational c = parse_rational(tok.back());
        if (f.terms.count(e))
            throw ParseError("poly line " + std::to_string(lineno) + ": duplicate exponent tuple");
        if (c != 0) f.terms.emplace(std::move(e), std::move(c));
    }
    if (declared_s < 0) throw ParseError("poly text: missing header");
    if (f.terms.empty()) throw ParseError("poly text: no terms");
    derive_homogeneity(f);
    return f;
}

bool is_sphere_alias(const std::string& spec) {
    return spec.rfind("sphere:", 0) == 0;
}

Poly load_poly(const std::string& spec) {
    if (is_sphere_alias(spec)) {
        std::string arg = spec.substr(7);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad sphere alias: " + spec);
        return sphere_form(std::stoi(arg));
    }
    std::ifstream in(spec);
    if (!in) throw DomainError("cannot open polynomial file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_poly(buf.str());
}

Rational eval_rational(const Poly& f, const std::vector<Rational>& x) {
    if (x.size() != static_cast<size_t>(f.dim))
        throw DomainError("eval_rational: dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : f.terms) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= pow_rational(x[i], e[i]);
        acc += term;
    }
    return acc;
}

Ball eval_ball(const Poly& f, const std::vector<Ball>& x) {
    if (x.size() != static_cast<size_t>(f.dim))
        throw DomainError("eval_ball: dimension mismatch");
    Ball acc = Ball::exact(Rational(0));
    for (const auto& [e, c] : f.terms) {
        Ball term = Ball::exact(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * ball_pow(x[i], e[i]);
        acc = acc + term;
    }
    return acc;
}

RealExpr poly_expr(const Poly& f, const std::vector<RealExpr>& xi) {
    if (xi.size() != static_cast<size_t>(f.dim))
        throw DomainError("poly_expr: dimension mismatch");
    RealExpr acc = RealExpr::constant(Rational(0));
    for (const auto& [e, c] : f.terms) {
        RealExpr term = RealExpr::constant(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = RealExpr::mul(term, RealExpr::pow(xi[i], e[i]));
        acc = RealExpr::add(acc, term);
    }
    return acc;
}

Rational eval_at_integers(const Poly& f, const std::vector<Integer>& a) {
    if (a.size() != static_cast<size_t>(f.dim))
        throw DomainError("eval_at_integers: dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : f.terms) {
        Integer m(1);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= pow_integer(a[i], e[i]);
        acc += c * Rational(m);
    }
    return acc;
}

Integer common_denominator(const Poly& f) {
    Integer d(1);
    for (const auto& [e, c] : f.terms) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
        d = l;
    }
    return d;
}

FormConstants constants(const Poly& f, const std::optional<Rational>& k_exact) {
    if (!f.is_homogeneous()) throw DomainError("constants: polynomial is not homogeneous");
    FormConstants fc;
    fc.D = common_denominator(f);
    Rational k(0);
    for (const auto& [e, c] : f.terms) k += abs(c);
    fc.K_upper = k;
    if (k_exact) {
        if (*k_exact > fc.K_upper)
            throw DomainError("constants: supplied exact K exceeds the certified upper bound");
        if (*k_exact <= 0) throw DomainError("constants: exact K must be positive");
        fc.K_exact = *k_exact;
    }
    return fc;
}

} // namespace dioph

#include "dioph/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace dioph {

Rational rat_normalize(const Integer& n, const Integer& d) {
    if (d == 0) throw DivisionByZero();
    Rational q;
    mpq_set_num(q.get_mpq_t(), n.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), d.get_mpz_t());
    q.canonicalize();
    return q;
}

Rational rat_normalize(long n, long d) {
    return rat_normalize(Integer(n), Integer(d));
}

Integer floor_to_integer(const Rational& x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer ceil_to_integer(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Rational pow_rational(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), x.get_den_mpz_t(), e);
    // powers of a canonical fraction are canonical
    return r;
}

Integer pow_integer(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

Rational pow2_inverse(unsigned long bits) {
    Rational r;
    mpz_set_ui(r.get_num().get_mpz_t(), 1);
    mpz_ui_pow_ui(r.get_den().get_mpz_t(), 2, bits);
    return r;
}

Rational dyadic_floor(const Rational& x, unsigned long bits) {
    Integer scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), x.get_num_mpz_t(), bits);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    return rat_normalize(q, den);
}

Rational dyadic_ceil(const Rational& x, unsigned long bits) {
    Integer scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), x.get_num_mpz_t(), bits);
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    return rat_normalize(q, den);
}

Integer kth_root_floor(const Integer& n, unsigned long k) {
    if (n < 0) throw DomainError("kth_root_floor: negative operand");
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer kth_root_ceil(const Integer& n, unsigned long k) {
    if (n < 0) throw DomainError("kth_root_ceil: negative operand");
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) r += 1;
    return r;
}

bool is_perfect_kth_power(const Integer& n, unsigned long k, Integer* root) {
    if (n < 0) return false;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exact && root) *root = r;
    return exact != 0;
}

Rational kth_root_lower(const Rational& x, unsigned long k, unsigned long w) {
    if (x < 0) throw DomainError("kth_root_lower: negative operand");
    // floor(x * 2^(kw)) then integer k-th root; error at most 2^(1-w).
    Integer scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), x.get_num_mpz_t(), k * w);
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Integer m = kth_root_floor(t, k);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, w);
    return rat_normalize(m, den);
}

Rational kth_root_upper(const Rational& x, unsigned long k, unsigned long w) {
    if (x < 0) throw DomainError("kth_root_upper: negative operand");
    Integer scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), x.get_num_mpz_t(), k * w);
    Integer t;
    mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Integer m = kth_root_ceil(t, k);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, w);
    return rat_normalize(m, den);
}

namespace {

// Number of decimal digits of |n|, n != 0.
long decimal_digits(const Integer& n) {
    // sizeinbase can overestimate by one
    long est = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
    Integer p = pow_integer(10, static_cast<unsigned long>(est - 1));
    Integer a = abs(n);
    if (a < p) return est - 1;
    return est;
}

} // namespace

std::string decimal_string(const Rational& x, int sig, bool round_up) {
    if (sig < 1) throw DomainError("decimal_string: sig must be positive");
    if (x == 0) return "0";
    const bool negative = x < 0;
    Rational a = abs(x);
    const Integer& n = a.get_num();
    const Integer& d = a.get_den();

    // E = floor(log10(a)): largest E with 10^E <= a.
    long e = decimal_digits(n) - decimal_digits(d);
    // correct the estimate by exact comparison
    auto ge_pow10 = [&](long k) {
        // a >= 10^k ?
        if (k >= 0) return n >= d * pow_integer(10, static_cast<unsigned long>(k));
        return n * pow_integer(10, static_cast<unsigned long>(-k)) >= d;
    };
    while (!ge_pow10(e)) --e;
    while (ge_pow10(e + 1)) ++e;

    // scale so the result has exactly `sig` digits: M = a * 10^(sig-1-E)
    long shift = sig - 1 - e;
    Integer num = n, den = d;
    if (shift >= 0) num *= pow_integer(10, static_cast<unsigned long>(shift));
    else den *= pow_integer(10, static_cast<unsigned long>(-shift));
    // outward direction on the signed value: +inf means magnitude up for
    // positives, magnitude down for negatives
    bool mag_up = (round_up != negative);
    Integer m;
    if (mag_up) mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (m == pow_integer(10, static_cast<unsigned long>(sig))) {
        m = pow_integer(10, static_cast<unsigned long>(sig - 1));
        ++e;
    }
    if (m == 0) {
        // rounded to zero from below: keep an exact zero only if x was zero
        return negative ? "-0" : "0";
    }

    std::string digits = m.get_str();
    std::string out;
    if (negative) out.push_back('-');
    if (e >= 0 && e <= 24) {
        if (static_cast<long>(digits.size()) <= e) {
            out += digits;
            out.append(static_cast<size_t>(e + 1 - static_cast<long>(digits.size())), '0');
        } else {
            out += digits.substr(0, static_cast<size_t>(e + 1));
            std::string frac = digits.substr(static_cast<size_t>(e + 1));
            if (!frac.empty()) {
                out.push_back('.');
                out += frac;
            }
        }
    } else if (e < 0 && e >= -6) {
        out += "0.";
        out.append(static_cast<size_t>(-e - 1), '0');
        out += digits;
    } else {
        out += digits.substr(0, 1);
        if (digits.size() > 1) {
            out.push_back('.');
            out += digits.substr(1);
        }
        out.push_back('e');
        out += std::to_string(e);
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    // trim
    size_t b = 0, eend = text.size();
    while (b < eend && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (eend > b && std::isspace(static_cast<unsigned char>(text[eend - 1]))) --eend;
    text = text.substr(b, eend - b);
    if (text.empty()) throw ParseError("empty rational literal");

    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        if (mpz_set_str(num.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
            mpz_set_str(den.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
            throw ParseError("bad rational literal: " + s);
        return rat_normalize(num, den);
    }

    // decimal / scientific form
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtol(s.c_str() + epos + 1, nullptr, 10);
        s = s.substr(0, epos);
    }
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_point) throw ParseError("bad rational literal: " + std::string(text));
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i]);
            if (seen_point) ++frac_digits;
            seen_digit = true;
        } else {
            throw ParseError("bad rational literal: " + std::string(text));
        }
    }
    if (!seen_digit) throw ParseError("bad rational literal: " + std::string(text));
    Integer num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    long net = exp10 - frac_digits;
    Integer den = 1;
    if (net >= 0) num *= pow_integer(10, static_cast<unsigned long>(net));
    else den = pow_integer(10, static_cast<unsigned long>(-net));
    return rat_normalize(num, den);
}

} // namespace dioph

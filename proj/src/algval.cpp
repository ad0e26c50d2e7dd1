#include "dioph/algval.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

namespace {

std::vector<unsigned long> distinct_primes(unsigned long k) {
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            out.push_back(p);
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) out.push_back(k);
    return out;
}

// rad = t^p for rational t? (rad canonical, > 0)
bool perfect_power(const Rational& rad, unsigned long p, Rational* root) {
    Integer rn, rd;
    if (!is_perfect_kth_power(rad.get_num(), p, &rn)) return false;
    if (!is_perfect_kth_power(rad.get_den(), p, &rd)) return false;
    if (root) *root = rat_normalize(rn, rd);
    return true;
}

// Reduce (k, rad) with rad > 0 so that x^k - rad is irreducible over Q.
// (rad positive and free of p-th power parts for every prime p | k.)
void normalize_radical(unsigned long& k, Rational& rad) {
    bool changed = true;
    while (changed && k > 1) {
        changed = false;
        for (unsigned long p : distinct_primes(k)) {
            Rational t;
            if (perfect_power(rad, p, &t)) {
                rad = t;
                k /= p;
                changed = true;
                break;
            }
        }
    }
}

using QPoly = std::vector<Rational>; // ascending coefficients

int degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// polynomial division with remainder over Q
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    int db = degree(b);
    if (db < 0) throw std::logic_error("poly_divmod: zero divisor");
    r = a;
    q.assign(a.size(), Rational(0));
    for (int i = degree(r); i >= db; i = degree(r)) {
        Rational f = r[static_cast<size_t>(i)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    }
}

} // namespace

void AlgVal::trim() {
    if (k_ == 1) return;
    bool pure = true;
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) { pure = false; break; }
    if (pure) {
        Rational v = c_[0];
        k_ = 1;
        rad_ = 0;
        c_.assign(1, v);
    }
}

AlgVal AlgVal::rational(const Rational& v) {
    AlgVal a;
    a.k_ = 1;
    a.rad_ = 0;
    a.c_.assign(1, v);
    return a;
}

std::optional<AlgVal> AlgVal::make_root(const Rational& rad_in, unsigned long k) {
    if (k < 1) return std::nullopt;
    if (rad_in < 0) return std::nullopt;
    if (rad_in == 0) return rational(Rational(0));
    unsigned long kk = k;
    Rational rad = rad_in;
    normalize_radical(kk, rad);
    if (kk == 1) return rational(rad);
    AlgVal a;
    a.k_ = kk;
    a.rad_ = rad;
    a.c_.assign(kk, Rational(0));
    a.c_[1] = 1;
    return a;
}

bool AlgVal::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

AlgVal AlgVal::negated() const {
    AlgVal r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

// Try to rewrite b in a's field: find e in [1, k) and rational t with
// b.rad = t^k * a.rad^e, so that rho_b = t * rho_a^e.
bool AlgVal::embed_into(const AlgVal& a, AlgVal& b) {
    const unsigned long k = a.k();
    for (unsigned long e = 1; e < k; ++e) {
        Rational q = b.radicand() / pow_rational(a.radicand(), e);
        Integer qn, qd;
        if (!is_perfect_kth_power(q.get_num(), k, &qn)) continue;
        if (!is_perfect_kth_power(q.get_den(), k, &qd)) continue;
        Rational t = rat_normalize(qn, qd);
        // rho_b^j = t^j * rho_a^(e*j); reduce exponent mod k against rad_a
        std::vector<Rational> nc(k, Rational(0));
        Rational tj(1);
        for (unsigned long j = 0; j < k; ++j) {
            const Rational& cj = b.coeffs()[j];
            if (cj != 0) {
                unsigned long m = e * j;
                Rational scale = cj * tj * pow_rational(a.radicand(), m / k);
                nc[m % k] += scale;
            }
            tj *= t;
        }
        AlgVal r;
        r = a; // copy field
        r.c_ = std::move(nc);
        // keep field descriptors, replace coefficients
        b = std::move(r);
        return true;
    }
    return false;
}

bool AlgVal::unify(AlgVal& a, AlgVal& b) {
    if (a.k_ == 1 && b.k_ == 1) return true;
    if (a.k_ == 1) {
        Rational v = a.c_[0];
        a.k_ = b.k_;
        a.rad_ = b.rad_;
        a.c_.assign(b.k_, Rational(0));
        a.c_[0] = v;
        return true;
    }
    if (b.k_ == 1) return unify(b, a);
    if (a.k_ == b.k_) {
        if (a.rad_ == b.rad_) return true;
        if (embed_into(a, b)) return true;
        if (embed_into(b, a)) return true;
    }
    return false;
}

bool AlgVal::compatible(const AlgVal& a, const AlgVal& b) {
    AlgVal x = a, y = b;
    return unify(x, y);
}

std::optional<AlgVal> AlgVal::add(const AlgVal& a, const AlgVal& b) {
    AlgVal x = a, y = b;
    if (!unify(x, y)) return std::nullopt;
    for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
    x.trim();
    return x;
}

std::optional<AlgVal> AlgVal::sub(const AlgVal& a, const AlgVal& b) {
    return add(a, b.negated());
}

std::optional<AlgVal> AlgVal::mul(const AlgVal& a, const AlgVal& b) {
    AlgVal x = a, y = b;
    if (!unify(x, y)) return std::nullopt;
    if (x.k_ == 1) return rational(x.c_[0] * y.c_[0]);
    const unsigned long k = x.k_;
    std::vector<Rational> conv(2 * k - 1, Rational(0));
    for (unsigned long i = 0; i < k; ++i) {
        if (x.c_[i] == 0) continue;
        for (unsigned long j = 0; j < k; ++j) {
            if (y.c_[j] == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    // reduce rho^m = rad * rho^(m-k) for m >= k
    for (unsigned long m = 2 * k - 2; m >= k; --m) {
        if (conv[m] != 0) conv[m - k] += conv[m] * x.rad_;
    }
    AlgVal r = x;
    r.c_.assign(conv.begin(), conv.begin() + k);
    r.trim();
    return r;
}

std::optional<AlgVal> AlgVal::div(const AlgVal& a, const AlgVal& b) {
    if (b.is_zero()) return std::nullopt;
    AlgVal x = a, y = b;
    if (!unify(x, y)) return std::nullopt;
    if (y.k_ == 1) {
        AlgVal r = x;
        for (auto& c : r.c_) c /= y.c_[0];
        r.trim();
        return r;
    }
    const unsigned long k = y.k_;
    // invert y modulo x^k - rad (a field: the modulus is irreducible)
    QPoly modulus(k + 1, Rational(0));
    modulus[0] = -y.rad_;
    modulus[k] = 1;
    QPoly old_r = modulus, r = y.c_;
    r.resize(k + 1, Rational(0));
    QPoly old_t(k + 1, Rational(0)), t(k + 1, Rational(0));
    t[0] = 1;
    while (degree(r) >= 0) {
        QPoly q, rem;
        poly_divmod(old_r, r, q, rem);
        old_r = r;
        r = rem;
        // new_t = old_t - q*t
        QPoly nt = old_t;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t.size() && i + j < nt.size(); ++j)
                nt[i + j] -= q[i] * t[j];
        }
        old_t = t;
        t = nt;
    }
    // old_r is a nonzero constant gcd
    if (degree(old_r) != 0) throw std::logic_error("AlgVal::div: modulus not irreducible");
    AlgVal inv = y;
    inv.c_.assign(k, Rational(0));
    for (size_t i = 0; i < inv.c_.size() && i < old_t.size(); ++i)
        inv.c_[i] = old_t[i] / old_r[0];
    return mul(x, inv);
}

std::optional<AlgVal> AlgVal::root(const AlgVal& a, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return a;
    if (!a.is_rational()) return std::nullopt;
    const Rational& v = a.rational_value();
    if (v == 0) return rational(Rational(0));
    if (v < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = make_root(-v, k);
        if (!r) return std::nullopt;
        return r->negated();
    }
    return make_root(v, k);
}

Ball AlgVal::enclosure(unsigned long p) const {
    if (k_ == 1) return Ball::exact(c_[0]);
    Rational target = pow2_inverse(p);
    for (unsigned long w = p + 16;; w *= 2) {
        Ball rho = ball_root(Ball::exact(rad_), k_, w);
        Ball acc = Ball::exact(c_[0]);
        Ball rp = Ball::exact(Rational(1));
        for (unsigned long j = 1; j < k_; ++j) {
            rp = rp * rho;
            if (c_[j] != 0) acc = acc + c_[j] * rp;
        }
        if (acc.radius <= target) return acc;
        if (w > (1ul << 22))
            throw std::logic_error("AlgVal::enclosure: no convergence");
    }
}

int AlgVal::sign() const {
    if (is_zero()) return 0;
    if (k_ == 1) return sgn(c_[0]);
    for (unsigned long p = 64;; p *= 2) {
        Ball b = enclosure(p);
        if (b.lo() > 0) return 1;
        if (b.hi() < 0) return -1;
        if (p > (1ul << 22))
            throw std::logic_error("AlgVal::sign: nonzero value did not separate");
    }
}

int AlgVal::compare(const AlgVal& b) const {
    auto d = sub(*this, b);
    if (!d) throw DomainError("AlgVal::compare: incompatible radicals");
    return d->sign();
}

std::optional<AlgVal> fold_algebraic(const ExprNode& n) {
    switch (n.kind) {
    case ExprKind::Constant:
        return AlgVal::rational(n.value);
    case ExprKind::Negate: {
        auto a = fold_algebraic(*n.lhs);
        if (!a) return std::nullopt;
        return a->negated();
    }
    case ExprKind::Add: {
        auto a = fold_algebraic(*n.lhs), b = fold_algebraic(*n.rhs);
        if (!a || !b) return std::nullopt;
        return AlgVal::add(*a, *b);
    }
    case ExprKind::Sub: {
        auto a = fold_algebraic(*n.lhs), b = fold_algebraic(*n.rhs);
        if (!a || !b) return std::nullopt;
        return AlgVal::sub(*a, *b);
    }
    case ExprKind::Mul: {
        auto a = fold_algebraic(*n.lhs), b = fold_algebraic(*n.rhs);
        if (!a || !b) return std::nullopt;
        return AlgVal::mul(*a, *b);
    }
    case ExprKind::Div: {
        auto a = fold_algebraic(*n.lhs), b = fold_algebraic(*n.rhs);
        if (!a || !b) return std::nullopt;
        return AlgVal::div(*a, *b);
    }
    case ExprKind::Root: {
        auto a = fold_algebraic(*n.lhs);
        if (!a) return std::nullopt;
        return AlgVal::root(*a, n.root_index);
    }
    }
    return std::nullopt;
}

std::optional<AlgVal> fold_algebraic(const RealExpr& e) {
    if (!e.valid()) return std::nullopt;
    return fold_algebraic(e.node());
}

} // namespace dioph

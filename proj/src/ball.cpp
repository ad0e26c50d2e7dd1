#include "dioph/ball.hpp"

#include <algorithm>

namespace dioph {

Ball::Ball(Rational c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    if (radius < 0) throw DomainError("Ball: negative radius");
}

Ball Ball::from_endpoints(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("Ball: lo > hi");
    Rational c = (lo + hi) / 2;
    return Ball(c, hi - c);
}

bool Ball::contains(const Rational& v) const {
    return lo() <= v && v <= hi();
}

bool Ball::contains(const Ball& other) const {
    return lo() <= other.lo() && other.hi() <= hi();
}

bool Ball::intersects(const Ball& other) const {
    return lo() <= other.hi() && other.lo() <= hi();
}

Ball operator+(const Ball& a, const Ball& b) {
    return Ball(a.center + b.center, a.radius + b.radius);
}

Ball operator-(const Ball& a, const Ball& b) {
    return Ball(a.center - b.center, a.radius + b.radius);
}

Ball operator-(const Ball& a) { return Ball(-a.center, a.radius); }

Ball operator*(const Rational& s, const Ball& b) {
    return Ball(s * b.center, abs(s) * b.radius);
}

Ball operator*(const Ball& a, const Ball& b) {
    if (a.is_exact()) return a.center * b;
    if (b.is_exact()) return b.center * a;
    // endpoint products give the tight interval
    Rational p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    Rational p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Ball::from_endpoints(lo, hi);
}

Ball ball_div(const Ball& a, const Ball& b) {
    if (b.contains(Rational(0)))
        throw DomainError("ball_div: divisor encloses zero");
    Rational rlo = 1 / b.hi(), rhi = 1 / b.lo();
    return a * Ball::from_endpoints(rlo, rhi);
}

Ball ball_abs(const Ball& a) {
    Rational lo = a.lo(), hi = a.hi();
    if (lo >= 0) return a;
    if (hi <= 0) return -a;
    Rational mlo = -lo;
    return Ball::from_endpoints(Rational(0), std::max(mlo, hi));
}

Ball ball_pow(const Ball& a, unsigned long e) {
    if (e == 0) return Ball::exact(Rational(1));
    if (e == 1) return a;
    Rational lo = a.lo(), hi = a.hi();
    Rational plo = pow_rational(lo, e), phi = pow_rational(hi, e);
    if (e % 2 == 1 || lo >= 0) return Ball::from_endpoints(plo, phi);
    if (hi <= 0) return Ball::from_endpoints(phi, plo);
    // even power of a straddling interval
    return Ball::from_endpoints(Rational(0), std::max(plo, phi));
}

Ball ball_max(const Ball& a, const Ball& b) {
    return Ball::from_endpoints(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Ball ball_min(const Ball& a, const Ball& b) {
    return Ball::from_endpoints(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Ball ball_root(const Ball& a, unsigned long k, unsigned long w) {
    Rational lo = a.lo(), hi = a.hi();
    if (k % 2 == 0) {
        if (lo < 0) throw DomainError("ball_root: even root of negative interval");
        return Ball::from_endpoints(kth_root_lower(lo, k, w), kth_root_upper(hi, k, w));
    }
    // odd roots are monotone over the whole line; pull signs out
    Rational rlo = lo >= 0 ? kth_root_lower(lo, k, w) : -kth_root_upper(-lo, k, w);
    Rational rhi = hi >= 0 ? kth_root_upper(hi, k, w) : -kth_root_lower(-hi, k, w);
    return Ball::from_endpoints(rlo, rhi);
}

} // namespace dioph

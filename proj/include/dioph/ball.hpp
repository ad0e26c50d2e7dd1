#pragma once

#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

/// Certified enclosure of a real number: the represented value x satisfies
/// |x - center| <= radius. All operations are exact rational arithmetic on
/// the endpoints, so enclosures never silently lose containment.
struct Ball {
    Rational center;
    Rational radius; // >= 0

    Ball() : center(0), radius(0) {}
    Ball(Rational c, Rational r);

    static Ball exact(const Rational& v) { return Ball(v, Rational(0)); }
    static Ball from_endpoints(const Rational& lo, const Rational& hi);

    Rational lo() const { return center - radius; }
    Rational hi() const { return center + radius; }
    bool is_exact() const { return radius == 0; }

    bool contains(const Rational& v) const;
    bool contains(const Ball& other) const;
    bool intersects(const Ball& other) const;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Rational& s, const Ball& b);

/// Endpoint-reciprocal division; the caller must ensure 0 is outside b.
Ball ball_div(const Ball& a, const Ball& b);

Ball ball_abs(const Ball& a);
Ball ball_pow(const Ball& a, unsigned long e);
/// Enclosure of max/min over the represented values.
Ball ball_max(const Ball& a, const Ball& b);
Ball ball_min(const Ball& a, const Ball& b);

/// Directed k-th root of an enclosure. Preconditions handled by the caller:
/// for even k the interval must be >= 0. Endpoint error at most 2^(1-w).
Ball ball_root(const Ball& a, unsigned long k, unsigned long w);

} // namespace dioph

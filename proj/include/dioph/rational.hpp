#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "dioph/errors.hpp"

namespace dioph {

using Integer = mpz_class;

// Reduced fraction with positive denominator; GMP keeps the canonical form
// as long as values are built through the functions below.
using Rational = mpq_class;

/// Reduced fraction equal to n/d with positive denominator. Throws
/// DivisionByZero when d == 0.
Rational rat_normalize(const Integer& n, const Integer& d);
Rational rat_normalize(long n, long d);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_to_integer(const Rational& x);
Integer ceil_to_integer(const Rational& x);

/// x^e for e >= 0.
Rational pow_rational(const Rational& x, unsigned long e);
Integer pow_integer(const Integer& x, unsigned long e);

/// 2^-bits as an exact rational.
Rational pow2_inverse(unsigned long bits);

/// Largest (resp. smallest) multiple of 2^-bits that is <= x (resp. >= x).
Rational dyadic_floor(const Rational& x, unsigned long bits);
Rational dyadic_ceil(const Rational& x, unsigned long bits);

/// floor(n^(1/k)) for n >= 0.
Integer kth_root_floor(const Integer& n, unsigned long k);
/// Smallest integer m with m^k >= n, for n >= 0.
Integer kth_root_ceil(const Integer& n, unsigned long k);
/// True iff n == r^k for some integer r (returned through *root if non-null).
bool is_perfect_kth_power(const Integer& n, unsigned long k, Integer* root = nullptr);

/// Dyadic lower/upper bounds on x^(1/k) for x >= 0: the result differs from
/// the exact root by at most 2^(1-w).
Rational kth_root_lower(const Rational& x, unsigned long k, unsigned long w);
Rational kth_root_upper(const Rational& x, unsigned long k, unsigned long w);

/// Decimal rendering with `sig` significant digits, rounded toward -inf
/// (round_up = false) or +inf (round_up = true). Both directions return the
/// exact decimal they print, so parsing the string back recovers a rational
/// bound on x.
std::string decimal_string(const Rational& x, int sig, bool round_up);

/// Parses "123", "-4/5", "0.25", "1.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);

} // namespace dioph

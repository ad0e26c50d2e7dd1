#pragma once

#include <optional>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/rational.hpp"
#include "dioph/real_expr.hpp"

namespace dioph {

/// Exact value in a single radical extension Q(rad^(1/k)), stored as
/// coefficients of 1, rho, ..., rho^(k-1) with rho = rad^(1/k) > 0.
///
/// The radicand is normalized so that x^k - rad is irreducible over Q
/// (no p-th power parts for primes p | k), which makes the representation a
/// field: the zero test is exact and sign evaluation terminates. k == 1
/// means the value is plain rational.
///
/// Arithmetic is partial: operations mixing incompatible radicals return
/// nullopt and callers fall back to certified enclosures.
class AlgVal {
  public:
    AlgVal() : k_(1), rad_(0), c_{Rational(0)} {}

    static AlgVal rational(const Rational& v);
    /// rad^(1/k) normalized; nullopt for even roots of negatives.
    static std::optional<AlgVal> make_root(const Rational& rad, unsigned long k);

    unsigned long k() const { return k_; }
    const Rational& radicand() const { return rad_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_rational() const { return k_ == 1; }
    const Rational& rational_value() const { return c_[0]; }
    bool is_zero() const;

    AlgVal negated() const;

    static std::optional<AlgVal> add(const AlgVal& a, const AlgVal& b);
    static std::optional<AlgVal> sub(const AlgVal& a, const AlgVal& b);
    static std::optional<AlgVal> mul(const AlgVal& a, const AlgVal& b);
    /// nullopt when b is exactly zero or the fields are incompatible.
    static std::optional<AlgVal> div(const AlgVal& a, const AlgVal& b);
    static std::optional<AlgVal> root(const AlgVal& a, unsigned long k);

    /// Exact sign (-1, 0, +1). Terminates because nonzero field elements
    /// separate from 0 at finite precision.
    int sign() const;
    int compare(const AlgVal& b) const; // pre: same-field or rational mix

    /// Certified enclosure with radius <= 2^-p.
    Ball enclosure(unsigned long p) const;

    /// True when exact arithmetic between the two values is available.
    static bool compatible(const AlgVal& a, const AlgVal& b);

  private:
    unsigned long k_;
    Rational rad_;
    std::vector<Rational> c_; // size k_

    static bool unify(AlgVal& a, AlgVal& b);
    static bool embed_into(const AlgVal& a, AlgVal& b);
    void trim();
};

/// Folds an expression tree into the normal form when possible.
std::optional<AlgVal> fold_algebraic(const RealExpr& e);
std::optional<AlgVal> fold_algebraic(const ExprNode& n);

} // namespace dioph

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/rational.hpp"
#include "dioph/real_expr.hpp"

namespace dioph {

/// Polynomial in `dim` variables with rational coefficients. Terms map an
/// exponent tuple (s_1,...,s_d) to a nonzero coefficient. homogeneous_degree
/// is set iff every stored tuple has the same positive total degree.
struct Poly {
    int dim = 0;
    std::map<std::vector<unsigned>, Rational> terms;
    std::optional<unsigned> homogeneous_degree;

    bool is_homogeneous() const { return homogeneous_degree.has_value(); }
    unsigned degree_s() const; // requires homogeneity
};

/// x_1^2 + ... + x_d^2.
Poly sphere_form(int d);

/// Text format: first line "d s" (s = 0 for no homogeneity claim), then one
/// term per line "s_1 ... s_d num[/den]". '#' starts a comment.
Poly parse_poly(std::string_view text);

/// "sphere:d" builtin alias or a path to a poly file.
Poly load_poly(const std::string& spec);
bool is_sphere_alias(const std::string& spec);

Rational eval_rational(const Poly& f, const std::vector<Rational>& x);
Ball eval_ball(const Poly& f, const std::vector<Ball>& x);
RealExpr poly_expr(const Poly& f, const std::vector<RealExpr>& xi);

/// Exact value of f at the integer vector a: for homogeneous f this equals
/// q^s f(a/q) when |a| has denominator q. Returned as a rational.
Rational eval_at_integers(const Poly& f, const std::vector<Integer>& a);

/// D = common denominator of the coefficients; K_upper = sum of |coefficients|
/// (a certified bound for sup |f| on the Euclidean unit sphere); K_exact is an
/// optional user-supplied exact supremum, validated against K_upper.
struct FormConstants {
    Integer D;
    Rational K_upper;
    std::optional<Rational> K_exact;

    /// The bound actually used in verifications: exact value when supplied.
    const Rational& k_bar() const { return K_exact ? *K_exact : K_upper; }
};

FormConstants constants(const Poly& f, const std::optional<Rational>& k_exact = std::nullopt);

/// Common denominator alone (valid for non-homogeneous polynomials too).
Integer common_denominator(const Poly& f);

} // namespace dioph

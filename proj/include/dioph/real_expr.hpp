#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/rational.hpp"

namespace dioph {

// Precision ladder for certified comparisons: start at 64 bits, double on
// overlap, give up at the cap (an overlap there usually means a rational
// dependence excluded by hypothesis).
inline constexpr unsigned long kComparePrecStart = 64;
inline constexpr unsigned long kComparePrecCap = 4096;

enum class ExprKind : unsigned char { Constant, Negate, Add, Sub, Mul, Div, Root };

struct ExprNode {
    ExprKind kind;
    Rational value;          // Constant
    unsigned long root_index = 0; // Root: k >= 2
    std::shared_ptr<const ExprNode> lhs, rhs;
};

/// Immutable radical expression tree denoting a real number. Values are
/// shared; all operations build new nodes.
class RealExpr {
  public:
    RealExpr() = default;

    static RealExpr constant(const Rational& v);
    static RealExpr integer(long v) { return constant(Rational(v)); }
    static RealExpr negate(const RealExpr& e);
    static RealExpr add(const RealExpr& a, const RealExpr& b);
    static RealExpr sub(const RealExpr& a, const RealExpr& b);
    static RealExpr mul(const RealExpr& a, const RealExpr& b);
    static RealExpr div(const RealExpr& a, const RealExpr& b);
    static RealExpr root(unsigned long k, const RealExpr& e);
    static RealExpr sqrt(const RealExpr& e) { return root(2, e); }
    static RealExpr pow(const RealExpr& e, unsigned long n);

    bool valid() const { return node_ != nullptr; }
    const ExprNode& node() const { return *node_; }
    std::shared_ptr<const ExprNode> ptr() const { return node_; }

    /// Grammar-compatible rendering (for messages and reproducibility).
    std::string to_string() const;

  private:
    explicit RealExpr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const ExprNode> node_;
};

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := INT | INT '/' INT | 'sqrt(' expr ')' | 'root(' INT ',' expr ')'
///           | '(' expr ')' | '-' factor
RealExpr parse_real_expr(std::string_view text);

/// Comma-separated list of expressions.
std::vector<RealExpr> parse_target_list(std::string_view text);

/// Certified enclosure of the denoted real with radius <= 2^-p.
/// Throws IndeterminateSign when a divisor or even-root radicand straddles 0
/// at the working-precision cap, PrecisionExhausted when the radius target is
/// unreachable, DivisionByZero / DomainError on provably ill-formed input.
Ball ball_eval(const RealExpr& e, unsigned long p);

enum class Ordering { Less, Greater, Equal, Undecided };

/// Certified three-way comparison. Less/Greater are backed by disjoint exact
/// enclosures; Equal is returned only with an exact proof of equality.
Ordering ball_compare(const RealExpr& x, const RealExpr& y,
                      unsigned long p_max = kComparePrecCap);

/// Exact rational value when the tree simplifies in the single-radical
/// normal form (constants folded, perfect k-th powers extracted). nullopt
/// does NOT certify irrationality.
std::optional<Rational> as_rational(const RealExpr& e);

} // namespace dioph

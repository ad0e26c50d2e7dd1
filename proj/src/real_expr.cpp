#include "dioph/real_expr.hpp"

#include <cctype>

#include "dioph/algval.hpp"
#include "dioph/errors.hpp"

namespace dioph {

namespace {

std::shared_ptr<const ExprNode> make_node(ExprNode n) {
    return std::make_shared<const ExprNode>(std::move(n));
}

} // namespace

RealExpr RealExpr::constant(const Rational& v) {
    ExprNode n;
    n.kind = ExprKind::Constant;
    n.value = v;
    return RealExpr(make_node(std::move(n)));
}

RealExpr RealExpr::negate(const RealExpr& e) {
    ExprNode n;
    n.kind = ExprKind::Negate;
    n.lhs = e.ptr();
    return RealExpr(make_node(std::move(n)));
}

#define DIOPH_BINOP(NAME, KIND)                                   \
    RealExpr RealExpr::NAME(const RealExpr& a, const RealExpr& b) { \
        ExprNode n;                                               \
        n.kind = ExprKind::KIND;                                  \
        n.lhs = a.ptr();                                          \
        n.rhs = b.ptr();                                          \
        return RealExpr(make_node(std::move(n)));                 \
    }

DIOPH_BINOP(add, Add)
DIOPH_BINOP(sub, Sub)
DIOPH_BINOP(mul, Mul)
DIOPH_BINOP(div, Div)
#undef DIOPH_BINOP

RealExpr RealExpr::root(unsigned long k, const RealExpr& e) {
    if (k < 2) throw DomainError("root index must be >= 2");
    ExprNode n;
    n.kind = ExprKind::Root;
    n.root_index = k;
    n.lhs = e.ptr();
    return RealExpr(make_node(std::move(n)));
}

RealExpr RealExpr::pow(const RealExpr& e, unsigned long n) {
    if (n == 0) return constant(Rational(1));
    RealExpr r = e;
    for (unsigned long i = 1; i < n; ++i) r = mul(r, e);
    return r;
}

namespace {

std::string rational_text(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string node_text(const ExprNode& n) {
    switch (n.kind) {
    case ExprKind::Constant: {
        if (n.value < 0) return "(" + rational_text(n.value) + ")";
        return rational_text(n.value);
    }
    case ExprKind::Negate:
        return "-" + node_text(*n.lhs);
    case ExprKind::Add:
        return "(" + node_text(*n.lhs) + "+" + node_text(*n.rhs) + ")";
    case ExprKind::Sub:
        return "(" + node_text(*n.lhs) + "-" + node_text(*n.rhs) + ")";
    case ExprKind::Mul:
        return "(" + node_text(*n.lhs) + "*" + node_text(*n.rhs) + ")";
    case ExprKind::Div:
        return "(" + node_text(*n.lhs) + "/" + node_text(*n.rhs) + ")";
    case ExprKind::Root:
        if (n.root_index == 2) return "sqrt(" + node_text(*n.lhs) + ")";
        return "root(" + std::to_string(n.root_index) + "," + node_text(*n.lhs) + ")";
    }
    return "?";
}

} // namespace

std::string RealExpr::to_string() const {
    if (!node_) return "<empty>";
    return node_text(*node_);
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in expression");
    }

    Integer parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos));
        return Integer(std::string(s.substr(start, pos - start)), 10);
    }

    bool lookahead_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) != w) return false;
        pos += w.size();
        return true;
    }

    RealExpr parse_expr() {
        RealExpr acc = parse_term();
        for (;;) {
            if (consume('+')) acc = RealExpr::add(acc, parse_term());
            else if (consume('-')) acc = RealExpr::sub(acc, parse_term());
            else return acc;
        }
    }

    RealExpr parse_term() {
        RealExpr acc = parse_factor();
        for (;;) {
            if (consume('*')) acc = RealExpr::mul(acc, parse_factor());
            else if (consume('/')) acc = RealExpr::div(acc, parse_factor());
            else return acc;
        }
    }

    RealExpr parse_factor() {
        skip_ws();
        if (consume('-')) return RealExpr::negate(parse_factor());
        if (lookahead_word("sqrt")) {
            expect('(');
            RealExpr e = parse_expr();
            expect(')');
            return RealExpr::root(2, e);
        }
        if (lookahead_word("root")) {
            expect('(');
            Integer k = parse_int();
            if (k < 2 || !k.fits_ulong_p())
                throw ParseError("root index must be an integer >= 2");
            expect(',');
            RealExpr e = parse_expr();
            expect(')');
            return RealExpr::root(k.get_ui(), e);
        }
        if (consume('(')) {
            RealExpr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer n = parse_int();
            // INT '/' INT rational literal (leaves a/b/c as (a/b)/c)
            size_t save = pos;
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                size_t slash = pos;
                ++pos;
                skip_ws();
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    Integer d = parse_int();
                    return RealExpr::constant(rat_normalize(n, d));
                }
                pos = slash;
            } else {
                pos = save;
            }
            return RealExpr::constant(Rational(n));
        }
        throw ParseError("unexpected character at position " + std::to_string(pos) +
                         " in expression");
    }
};

} // namespace

RealExpr parse_real_expr(std::string_view text) {
    Parser p{text};
    RealExpr e = p.parse_expr();
    if (!p.eof())
        throw ParseError("trailing input at position " + std::to_string(p.pos) +
                         " in expression");
    return e;
}

std::vector<RealExpr> parse_target_list(std::string_view text) {
    std::vector<RealExpr> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(parse_real_expr(text.substr(start, i - start)));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

enum class RefineReason { DivisorStraddlesZero, RadicandStraddlesZero };

struct RefineNeeded {
    RefineReason reason;
};

Ball eval_node(const ExprNode& n, unsigned long w) {
    switch (n.kind) {
    case ExprKind::Constant:
        return Ball::exact(n.value);
    case ExprKind::Negate:
        return -eval_node(*n.lhs, w);
    case ExprKind::Add:
        return eval_node(*n.lhs, w) + eval_node(*n.rhs, w);
    case ExprKind::Sub:
        return eval_node(*n.lhs, w) - eval_node(*n.rhs, w);
    case ExprKind::Mul:
        return eval_node(*n.lhs, w) * eval_node(*n.rhs, w);
    case ExprKind::Div: {
        Ball a = eval_node(*n.lhs, w);
        Ball b = eval_node(*n.rhs, w);
        if (b.contains(Rational(0))) {
            if (auto f = fold_algebraic(*n.rhs); f && f->is_zero())
                throw DivisionByZero("division by zero in expression");
            throw RefineNeeded{RefineReason::DivisorStraddlesZero};
        }
        return ball_div(a, b);
    }
    case ExprKind::Root: {
        Ball a = eval_node(*n.lhs, w);
        if (n.root_index % 2 == 0 && a.lo() < 0) {
            if (a.hi() < 0)
                throw DomainError("even root of a negative value");
            if (auto f = fold_algebraic(*n.lhs)) {
                int s = f->sign();
                if (s < 0) throw DomainError("even root of a negative value");
                if (s == 0) return Ball::exact(Rational(0));
                // provably positive: the enclosure is just too coarse
                throw RefineNeeded{RefineReason::RadicandStraddlesZero};
            }
            throw RefineNeeded{RefineReason::RadicandStraddlesZero};
        }
        return ball_root(a, n.root_index, w);
    }
    }
    throw std::logic_error("eval_node: bad kind");
}

unsigned long work_cap(unsigned long p) {
    unsigned long c = 16 * p + 1024;
    return c < 8192 ? 8192 : c;
}

} // namespace

Ball ball_eval(const RealExpr& e, unsigned long p) {
    if (!e.valid()) throw DomainError("ball_eval: empty expression");
    Rational target = pow2_inverse(p);
    const unsigned long cap = work_cap(p);
    RefineReason last = RefineReason::RadicandStraddlesZero;
    bool refine_seen = false;
    for (unsigned long w = p + 16;; w *= 2) {
        try {
            Ball b = eval_node(e.node(), w);
            if (b.radius <= target) return b;
            refine_seen = false;
        } catch (const RefineNeeded& r) {
            refine_seen = true;
            last = r.reason;
        }
        if (w >= cap) {
            if (refine_seen) {
                if (last == RefineReason::DivisorStraddlesZero)
                    throw IndeterminateSign("indeterminate sign: divisor enclosure straddles 0 at the precision cap");
                throw IndeterminateSign("indeterminate sign: even-root radicand enclosure straddles 0 at the precision cap");
            }
            throw PrecisionExhausted("precision exhausted: radius 2^-" + std::to_string(p) +
                                     " unreachable for " + e.to_string());
        }
    }
}

std::optional<Rational> as_rational(const RealExpr& e) {
    auto f = fold_algebraic(e);
    if (f && f->is_rational()) return f->rational_value();
    return std::nullopt;
}

Ordering ball_compare(const RealExpr& x, const RealExpr& y, unsigned long p_max) {
    auto fx = fold_algebraic(x);
    auto fy = fold_algebraic(y);
    if (fx && fy && AlgVal::compatible(*fx, *fy)) {
        int c = fx->compare(*fy);
        if (c < 0) return Ordering::Less;
        if (c > 0) return Ordering::Greater;
        return Ordering::Equal;
    }
    for (unsigned long p = kComparePrecStart; p <= p_max; p *= 2) {
        Ball bx = ball_eval(x, p);
        Ball by = ball_eval(y, p);
        if (bx.hi() < by.lo()) return Ordering::Less;
        if (bx.lo() > by.hi()) return Ordering::Greater;
    }
    return Ordering::Undecided;
}

} // namespace dioph

#include "doctest.h"

#include <vector>

#include "dioph/algval.hpp"
#include "dioph/real_expr.hpp"

using namespace dioph;

namespace {

std::vector<RealExpr> corpus() {
    return {
        parse_real_expr("sqrt(2)"),
        parse_real_expr("3/7"),
        parse_real_expr("sqrt(9/4)"),
        parse_real_expr("(1+sqrt(5))/2"),
        parse_real_expr("root(3,2)"),
        parse_real_expr("root(3,2)*root(3,2)"),
        parse_real_expr("sqrt(2)-sqrt(2)"),
        parse_real_expr("1/(1+sqrt(2))"),
        parse_real_expr("sqrt(1/2)+sqrt(1/2)"),
        parse_real_expr("-sqrt(7)+22/7"),
    };
}

} // namespace

TEST_CASE("parser handles the grammar and rejects junk") {
    CHECK(as_rational(parse_real_expr("2/4")) == Rational(1, 2));
    CHECK(as_rational(parse_real_expr("1/3 + 1/6")) == Rational(1, 2));
    CHECK(as_rational(parse_real_expr("-(3-1)")) == Rational(-2));
    CHECK(as_rational(parse_real_expr("2*3/4")) == Rational(3, 2));
    CHECK(as_rational(parse_real_expr("1/2/2")) == Rational(1, 4));
    CHECK(as_rational(parse_real_expr(" ( 1 + 2 ) * 3 ")) == Rational(9));
    CHECK_THROWS_AS(parse_real_expr("sqrt(2"), ParseError);
    CHECK_THROWS_AS(parse_real_expr("root(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_real_expr("2 +"), ParseError);
    CHECK_THROWS_AS(parse_real_expr(""), ParseError);
    CHECK_THROWS_AS(parse_real_expr("1 2"), ParseError);

    auto v = parse_target_list("sqrt(2),sqrt(3),1/2");
    CHECK(v.size() == 3);
    auto w = parse_target_list("root(3,2)");
    CHECK(w.size() == 1);
}

TEST_CASE("ball_eval examples") {
    // sqrt(2) at p=64, containment checked against a much finer enclosure
    Ball b = ball_eval(parse_real_expr("sqrt(2)"), 64);
    CHECK(b.radius <= pow2_inverse(64));
    Ball fine = ball_eval(parse_real_expr("sqrt(2)"), 256);
    CHECK(b.intersects(fine));
    CHECK(b.contains(fine));

    Ball r = ball_eval(parse_real_expr("3/7"), 10);
    CHECK(r.is_exact());
    CHECK(r.center == Rational(3, 7));

    Ball ps = ball_eval(parse_real_expr("sqrt(9/4)"), 32);
    CHECK(ps.contains(Rational(3, 2)));
}

TEST_CASE("ball_eval error paths") {
    CHECK_THROWS_AS(ball_eval(parse_real_expr("1/(sqrt(2)-sqrt(2))"), 32), DivisionByZero);
    CHECK_THROWS_AS(ball_eval(parse_real_expr("sqrt(0-2)"), 32), DomainError);
    // provably-zero radicand is fine: sqrt(0) = 0
    Ball z = ball_eval(parse_real_expr("sqrt(sqrt(2)-sqrt(2))"), 32);
    CHECK(z.contains(Rational(0)));
    // exactly zero but not provable in the single-radical form: the radicand
    // enclosure straddles 0 at every precision
    CHECK_THROWS_AS(
        ball_eval(parse_real_expr("sqrt((sqrt(2)+sqrt(3))-sqrt(2)-sqrt(3))"), 32),
        IndeterminateSign);
}

TEST_CASE("ball_compare examples") {
    CHECK(ball_compare(parse_real_expr("sqrt(2)"), parse_real_expr("3/2")) == Ordering::Less);
    CHECK(ball_compare(parse_real_expr("1/2"), parse_real_expr("2/4")) == Ordering::Equal);
    CHECK(ball_compare(parse_real_expr("sqrt(2)"),
                       parse_real_expr("141421356/100000000")) == Ordering::Greater);
    // proven algebraic equality
    CHECK(ball_compare(parse_real_expr("sqrt(8)/2"), parse_real_expr("sqrt(2)")) ==
          Ordering::Equal);
}

TEST_CASE("as_rational examples") {
    CHECK(as_rational(parse_real_expr("sqrt(9/4)")) == Rational(3, 2));
    CHECK_FALSE(as_rational(parse_real_expr("sqrt(2)")).has_value());
    CHECK(as_rational(parse_real_expr("1/3+1/6")) == Rational(1, 2));
    CHECK(as_rational(parse_real_expr("sqrt(2)*sqrt(2)")) == Rational(2));
    CHECK(as_rational(parse_real_expr("root(3,2)*root(3,2)*root(3,2)")) == Rational(2));
    CHECK(as_rational(parse_real_expr("sqrt(1/2)*sqrt(1/2)+sqrt(1/2)*sqrt(1/2)")) == Rational(1));
    CHECK_FALSE(as_rational(parse_real_expr("root(3,2)*root(3,2)")).has_value());
    CHECK_FALSE(as_rational(parse_real_expr("sqrt(2)+sqrt(3)")).has_value());
}

TEST_CASE("containment and monotone refinement over the corpus") {
    for (const auto& e : corpus()) {
        for (unsigned long p : {32ul, 64ul, 128ul}) {
            Ball a = ball_eval(e, p);
            Ball b = ball_eval(e, 4 * p);
            CHECK(a.radius <= pow2_inverse(p));
            CHECK(a.intersects(b));
            Ball c = ball_eval(e, 2 * p);
            CHECK(c.radius <= a.radius);
        }
    }
}

TEST_CASE("ball_compare is antisymmetric and equality-safe on the corpus") {
    auto exprs = corpus();
    for (size_t i = 0; i < exprs.size(); ++i) {
        for (size_t j = 0; j < exprs.size(); ++j) {
            Ordering ab = ball_compare(exprs[i], exprs[j], 512);
            Ordering ba = ball_compare(exprs[j], exprs[i], 512);
            if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
            if (ab == Ordering::Greater) CHECK(ba == Ordering::Less);
            if (ab == Ordering::Equal) CHECK(ba == Ordering::Equal);
            auto ri = as_rational(exprs[i]), rj = as_rational(exprs[j]);
            if (ri && rj && *ri == *rj) CHECK(ab == Ordering::Equal);
        }
    }
}

TEST_CASE("algebraic fold distinguishes equal values across representations") {
    auto a = fold_algebraic(parse_real_expr("sqrt(1/2)"));
    auto b = fold_algebraic(parse_real_expr("sqrt(2)/2"));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(AlgVal::compatible(*a, *b));
    CHECK(a->compare(*b) == 0);

    auto c = fold_algebraic(parse_real_expr("root(3,4)"));
    auto d = fold_algebraic(parse_real_expr("root(3,2)*root(3,2)"));
    REQUIRE(c);
    REQUIRE(d);
    CHECK(c->compare(*d) == 0);

    auto e = fold_algebraic(parse_real_expr("root(3,16)"));
    auto f = fold_algebraic(parse_real_expr("2*root(3,2)"));
    REQUIRE(e);
    REQUIRE(f);
    CHECK(e->compare(*f) == 0);
}

TEST_CASE("AlgVal division and sign") {
    auto phi = fold_algebraic(parse_real_expr("(1+sqrt(5))/2"));
    REQUIRE(phi);
    auto inv = AlgVal::div(AlgVal::rational(Rational(1)), *phi);
    REQUIRE(inv);
    // 1/phi = phi - 1
    auto expect = AlgVal::sub(*phi, AlgVal::rational(Rational(1)));
    REQUIRE(expect);
    CHECK(inv->compare(*expect) == 0);
    CHECK(phi->sign() == 1);
    CHECK(phi->negated().sign() == -1);
    CHECK(AlgVal::rational(Rational(0)).sign() == 0);
}

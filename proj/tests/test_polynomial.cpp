#include "doctest.h"

#include <random>

#include "dioph/polynomial.hpp"

using namespace dioph;

namespace {

// inverse stereographic projection: rational u in R^(d-1) -> rational unit
// sphere point (used as an independent generator for the K-bound property)
std::vector<Rational> sphere_point_from(const std::vector<Rational>& u) {
    Rational U(0);
    for (const auto& v : u) U += v * v;
    std::vector<Rational> x;
    x.push_back((U - 1) / (U + 1));
    for (const auto& v : u) x.push_back(2 * v / (U + 1));
    return x;
}

Poly pell_form() {
    // x1^2 - 2 x2^2
    return parse_poly("2 2\n2 0 1\n0 2 -2\n");
}

} // namespace

TEST_CASE("parse_poly on the format examples") {
    Poly sphere = parse_poly("2 2\n2 0 1\n0 2 1\n");
    CHECK(sphere.dim == 2);
    CHECK(sphere.homogeneous_degree == 2u);
    CHECK(sphere.terms.size() == 2);
    CHECK(sphere.terms == sphere_form(2).terms);

    Poly pell = pell_form();
    CHECK(pell.homogeneous_degree == 2u);
    CHECK(pell.terms.at({0, 2}) == Rational(-2));

    // no homogeneity claim: mixed degrees allowed, flag derived as absent
    Poly mixed = parse_poly("2 0\n2 0 1\n0 2 1\n1 0 1\n");
    CHECK_FALSE(mixed.homogeneous_degree.has_value());

    // s = 0 with uniform tuples still derives the degree
    Poly derived = parse_poly("2 0\n2 0 1\n0 2 1\n");
    CHECK(derived.homogeneous_degree == 2u);

    CHECK_THROWS_AS(parse_poly("2 2\n2 0 1\n1 0 1\n"), ParseError); // degree mismatch
    CHECK_THROWS_AS(parse_poly("2 2\n2 0 1\n2 0 1\n"), ParseError); // duplicate tuple
    CHECK_THROWS_AS(parse_poly("2 2\n2 1\n"), ParseError);          // short line
    CHECK_THROWS_AS(parse_poly("0 2\n"), ParseError);               // bad header
    CHECK_THROWS_AS(parse_poly("# nothing\n"), ParseError);

    CHECK(load_poly("sphere:3").terms == sphere_form(3).terms);
    CHECK(is_sphere_alias("sphere:2"));
    CHECK_FALSE(is_sphere_alias("af/sphere.txt"));
}

TEST_CASE("eval_rational examples") {
    Poly sphere = sphere_form(2);
    CHECK(eval_rational(sphere, {Rational(3, 5), Rational(4, 5)}) == Rational(1));
    CHECK(eval_rational(pell_form(), {Rational(3, 2), Rational(1, 2)}) == Rational(7, 4));
    CHECK(eval_rational(sphere, {Rational(0), Rational(0)}) == Rational(0));
    CHECK_THROWS_AS(eval_rational(sphere, {Rational(1)}), DomainError);
}

TEST_CASE("eval_ball examples") {
    Poly sphere = sphere_form(2);
    Ball exact = eval_ball(sphere, {Ball::exact(Rational(3, 5)), Ball::exact(Rational(4, 5))});
    CHECK(exact.is_exact());
    CHECK(exact.center == 1);

    // balls around (sqrt(1/2), sqrt(1/2)): the exact identity 1/2 + 1/2 = 1 is inside
    Ball h = ball_eval(parse_real_expr("sqrt(1/2)"), 64);
    Ball v = eval_ball(sphere, {h, h});
    CHECK(v.contains(Rational(1)));

    // zero-radius vector equals eval_rational
    Ball w = eval_ball(pell_form(), {Ball::exact(Rational(3, 2)), Ball::exact(Rational(1, 2))});
    CHECK(w.is_exact());
    CHECK(w.center == Rational(7, 4));
}

TEST_CASE("constants: D, K_upper, K_exact") {
    auto fc = constants(sphere_form(2), Rational(1));
    CHECK(fc.D == 1);
    CHECK(fc.K_upper == 2);
    CHECK(fc.K_exact == Rational(1));
    CHECK(fc.k_bar() == 1);

    auto fc3 = constants(sphere_form(3));
    CHECK(fc3.K_upper == 3);
    CHECK(fc3.k_bar() == 3);

    Poly third = parse_poly("2 2\n2 0 1\n0 2 1/3\n");
    CHECK(constants(third).D == 3);

    CHECK(constants(pell_form()).K_upper == 3);
    CHECK_THROWS_AS(constants(pell_form(), Rational(4)), DomainError);
    CHECK_THROWS_AS(constants(parse_poly("1 0\n1 1\n0 2\n")), DomainError); // non-homogeneous
}

TEST_CASE("homogeneity property: f(lambda x) = lambda^s f(x) exactly") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    auto rnd = [&] { return rat_normalize(num(rng), den(rng)); };
    for (const Poly& f : {sphere_form(3), pell_form()}) {
        unsigned s = f.degree_s();
        for (int it = 0; it < 50; ++it) {
            std::vector<Rational> x;
            for (int i = 0; i < f.dim; ++i) x.push_back(rnd());
            Rational lam = rnd();
            std::vector<Rational> lx;
            for (const auto& v : x) lx.push_back(lam * v);
            CHECK(eval_rational(f, lx) == pow_rational(lam, s) * eval_rational(f, x));
        }
    }
}

TEST_CASE("denominator property: D q^s f(a/q) is an integer") {
    std::mt19937 rng(999);
    std::uniform_int_distribution<long> ai(-20, 20), qi(1, 30);
    Poly f = parse_poly("2 2\n2 0 1/6\n1 1 3/4\n0 2 -2/9\n");
    FormConstants fc = constants(f);
    unsigned s = f.degree_s();
    for (int it = 0; it < 200; ++it) {
        long q = qi(rng);
        std::vector<Rational> x = {rat_normalize(ai(rng), q), rat_normalize(ai(rng), q)};
        Rational v = Rational(fc.D) * pow_rational(Rational(q), s) * eval_rational(f, x);
        CHECK(is_integer(v));
    }
}

TEST_CASE("K-bound soundness on 1000 rational unit-sphere points") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 30);
    for (int d : {2, 3}) {
        Poly f = d == 2 ? pell_form() : parse_poly("3 2\n2 0 0 1\n0 2 0 -1/2\n0 0 2 1/4\n1 1 0 2\n");
        FormConstants fc = constants(f);
        Poly sph = sphere_form(d);
        int count = 0;
        while (count < 500) {
            std::vector<Rational> u;
            for (int i = 0; i + 1 < d; ++i) u.push_back(rat_normalize(num(rng), den(rng)));
            auto x = sphere_point_from(u);
            REQUIRE(eval_rational(sph, x) == 1);
            CHECK(abs(eval_rational(f, x)) <= fc.K_upper);
            ++count;
        }
    }
}

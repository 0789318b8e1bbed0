#include <doctest.h>

#include "fixtures.hpp"
#include "tcone/errors.hpp"
#include "tcone/gb.hpp"

using namespace tcone;

TEST_CASE("elimination") {
    // parametrized curve (t, t^2, t^3) with t in slot 0
    auto gens = parse_polynomial_list("x2 - x1^2, x3 - x1^3", 3);
    auto elim = eliminate(Ideal{3, gens}, 1);
    auto ord = MonomialOrder::grevlex(3);
    CHECK(in_ideal(parse_polynomial("x2^3 - x3^2", 3), elim.gens, ord));
    for (const auto& f : elim.gens)
        for (const auto& t : f.terms()) CHECK(t.m.e[0] == 0);

    CHECK_THROWS_AS(eliminate(Ideal{3, gens}, 0), Error);
    CHECK_THROWS_AS(eliminate(Ideal{3, gens}, 3), Error);
}

TEST_CASE("intersection") {
    Ideal x = fixtures::parse_ideal("x1", 2);
    Ideal y = fixtures::parse_ideal("x2", 2);
    CHECK(ideal_equal(intersect(x, y), fixtures::parse_ideal("x1*x2", 2)));

    // (x1, x2) ∩ (x2, x3) = (x2, x1*x3)
    Ideal a = fixtures::parse_ideal("x1, x2", 3);
    Ideal b = fixtures::parse_ideal("x2, x3", 3);
    CHECK(ideal_equal(intersect(a, b), fixtures::parse_ideal("x2, x1*x3", 3)));

    // intersection with the whole ring gives the ideal back
    Ideal one = fixtures::parse_ideal("1", 3);
    CHECK(ideal_equal(intersect(a, one), a));
}

TEST_CASE("colon ideals") {
    // (x1*x2) : x1 = (x2)
    CHECK(ideal_equal(colon(fixtures::parse_ideal("x1*x2", 2), parse_polynomial("x1", 2)),
                      fixtures::parse_ideal("x2", 2)));
    // (x1^2, x1*x2) : x1 = (x1, x2)
    CHECK(ideal_equal(colon(fixtures::parse_ideal("x1^2, x1*x2", 2), parse_polynomial("x1", 2)),
                      fixtures::parse_ideal("x1, x2", 2)));
    // colon by a non-zerodivisor on the ideal is the ideal itself
    Ideal p = fixtures::parse_ideal("x1^2 - x2*x3", 3);
    CHECK(ideal_equal(colon(p, parse_polynomial("x3", 3)), p));

    // membership contract: f * (I : f) lies inside I
    Ideal q = colon(fixtures::parse_ideal("x1^2*x3, x2^2", 3), parse_polynomial("x3", 3));
    auto ord = MonomialOrder::grevlex(3);
    auto gb = buchberger(fixtures::parse_ideal("x1^2*x3, x2^2", 3).gens, ord);
    for (const auto& g : q.gens)
        CHECK(in_ideal(g * parse_polynomial("x3", 3), gb, ord));

    CHECK_THROWS_AS(colon(p, Polynomial::zero()), Error);
}

TEST_CASE("saturation") {
    // (x1 - x1*x2) : x2^inf  contains  x1 (strip the x2 factor entirely)
    Ideal s = saturate(fixtures::parse_ideal("x1*x2 - x1*x2^2", 2), parse_polynomial("x2", 2));
    CHECK(ideal_equal(s, fixtures::parse_ideal("x1*x2 - x1", 2)));

    // already saturated ideals are fixed points
    Ideal p = fixtures::parse_ideal("x1^2 - x2*x3", 3);
    CHECK(ideal_equal(saturate(p, parse_polynomial("x3", 3)), p));
}

TEST_CASE("ideal equality is presentation independent") {
    Ideal a = fixtures::parse_ideal("x1 + x2, x1 - x2", 2);
    Ideal b = fixtures::parse_ideal("x1, x2", 2);
    Ideal c = fixtures::parse_ideal("x1, x2^2", 2);
    CHECK(ideal_equal(a, b));
    CHECK_FALSE(ideal_equal(a, c));
}

TEST_CASE("minimal generating sets of ideals") {
    // redundant generator x1^2*x2 is dropped
    auto min = minimalize_generators(
        parse_polynomial_list("x1^2, x1^2*x2, x2", 2), 2);
    REQUIRE(min.size() == 2);
    CHECK(min[0] == parse_polynomial("x2", 2));
    CHECK(min[1] == parse_polynomial("x1^2", 2));

    // weighted variant: selection sorted by weighted degree
    std::vector<long long> w = {2, 3};
    auto minw = minimalize_generators(
        parse_polynomial_list("x2^2 - x1^3, x1*x2^2 - x1^4", 2), 2, w);
    REQUIRE(minw.size() == 1);
    CHECK(minw[0] == parse_polynomial("x1^3 - x2^2", 2).monic(MonomialOrder::grevlex(2)));

    // zero polynomials are ignored
    auto z = minimalize_generators({Polynomial::zero()}, 2);
    CHECK(z.empty());
}

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcone/errors.hpp"
#include "tcone/tangent_cone.hpp"

using namespace tcone;

namespace {

NumericalSemigroup sg(std::initializer_list<Elem> gens) {
    return NumericalSemigroup::from_candidates(std::vector<Elem>(gens));
}

}  // namespace

TEST_CASE("defining ideals of small semigroup rings") {
    // numerical monoid generated by 2 and 3: kernel is x1^3 - x2^2
    Ideal I = toric_ideal(sg({2, 3}));
    REQUIRE(I.gens.size() == 1);
    CHECK(I.gens[0] == parse_polynomial("x1^3 - x2^2", 2));

    // scaling the tuple does not change the kernel
    CHECK(ideal_equal(toric_ideal_of({4, 6}), I));
    CHECK(ideal_equal(toric_ideal_of({10, 15}), I));

    // non-minimal tuples are allowed: (1,2,3) cuts out the monomial curve
    Ideal C = toric_ideal_of({1, 2, 3});
    auto ord = MonomialOrder::grevlex(3);
    CHECK(in_ideal(parse_polynomial("x1^2 - x2", 3), C.gens, ord));
    CHECK(in_ideal(parse_polynomial("x1*x2 - x3", 3), C.gens, ord));
    CHECK(in_ideal(parse_polynomial("x2^2 - x1*x3", 3), C.gens, ord));
    CHECK_FALSE(in_ideal(parse_polynomial("x1^2 - x3", 3), C.gens, ord));

    CHECK_THROWS_AS(toric_ideal_of({}), Error);
    CHECK_THROWS_AS(toric_ideal_of({4, 0}), Error);
}

TEST_CASE("binomial membership by weight balance") {
    std::vector<Elem> a = {8, 12, 13, 18, 35};
    CHECK(binomial_in_toric(parse_polynomial("x3^2 - x1*x4", 5), a));
    CHECK(binomial_in_toric(parse_polynomial("x2^3 - x4^2", 5), a));
    CHECK(binomial_in_toric(parse_polynomial("7*x1^3 - 7*x2^2", 5), a));
    CHECK_FALSE(binomial_in_toric(parse_polynomial("x1*x2 - x3*x4", 5), a));
    CHECK(binomial_in_toric(Polynomial::zero(), a));

    CHECK_THROWS_AS(binomial_in_toric(parse_polynomial("x1 + x2", 5), a), Error);
    CHECK_THROWS_AS(binomial_in_toric(parse_polynomial("x1^2 - x2 + x3", 5), a), Error);

    // every element of a defining-ideal basis is weight balanced
    for (const auto& f : toric_ideal(sg({8, 12, 13, 18, 35})).gens)
        CHECK(binomial_in_toric(f, a));
}

TEST_CASE("guiding example: defining ideal and initial forms") {
    NumericalSemigroup H = sg({8, 12, 13, 18, 35});
    Ideal I = toric_ideal(H);
    CHECK(ideal_equal(I, fixtures::parse_ideal(fixtures::kGoldenToric, 5)));

    Ideal istar = initial_forms_ideal(I);
    CHECK(ideal_equal(istar, fixtures::parse_ideal(fixtures::kGoldenInitial, 5)));
    REQUIRE(istar.gens.size() == 8);
    CHECK(generated_by_quadrics(istar));

    CHECK(h_vector(H, istar) == std::vector<long long>{1, 4, 2, 1});
    CHECK_FALSE(cohen_macaulay(H, istar));
    CHECK(quadratic_gb_revlex(istar));

    CHECK_THROWS_AS(artinian_reduction(H, istar), Error);
}

TEST_CASE("initial forms agree with the flat-family oracle") {
    std::vector<std::vector<Elem>> tuples = {
        {3, 4, 5}, {4, 5, 6, 7}, {5, 6, 7, 8, 9}, {2, 7}, {8, 12, 13, 18, 35},
    };
    for (const auto& t : tuples) {
        Ideal I = toric_ideal_of(t);
        Ideal istar = initial_forms_ideal(I);
        CHECK(ideal_equal(istar, oracle::tangent_cone_by_dilation(I)));
    }
}

TEST_CASE("artinian reduction of a CM cone") {
    NumericalSemigroup H = sg({5, 6, 7, 8, 9});
    Ideal istar = initial_forms_ideal(toric_ideal(H));
    CHECK(cohen_macaulay(H, istar));
    CHECK(h_vector(H, istar) == std::vector<long long>{1, 4});

    Ideal red = artinian_reduction(H, istar);
    CHECK(red.nvars == 4);
    // h = (1,4): the quotient vanishes in degree 2, so all ten quadrics occur
    auto gb = buchberger(red.gens, MonomialOrder::grevlex(4));
    CHECK(gb.size() == 10);
    for (const auto& f : gb) CHECK(f.degree() == 2);
}

TEST_CASE("full analysis of hand-checked cones") {
    TangentCone tc = analyze_tangent_cone(sg({8, 12, 13, 18, 35}));
    CHECK(tc.quadratic);
    CHECK(tc.h == std::vector<long long>{1, 4, 2, 1});
    CHECK_FALSE(tc.cm);
    CHECK(tc.qgb_revlex);

    TangentCone sm = analyze_tangent_cone(sg({2, 3}));
    CHECK(sm.quadratic);  // the initial form of x1^3 - x2^2 is the quadric x2^2
    CHECK(sm.h == std::vector<long long>{1, 1});
    CHECK(sm.cm);
    CHECK(sm.qgb_revlex);

    TangentCone cu = analyze_tangent_cone(sg({3, 4}));
    CHECK_FALSE(cu.quadratic);  // initial form x2^3
    CHECK(cu.h == std::vector<long long>{1, 1, 1});
    CHECK(cu.cm);

    TangentCone mx = analyze_tangent_cone(sg({5, 6, 7, 8, 9}));
    CHECK(mx.quadratic);
    CHECK(mx.cm);
    CHECK(mx.qgb_revlex);
}

TEST_CASE("exhaustive revlex priority scan") {
    Ideal istar = initial_forms_ideal(toric_ideal(sg({8, 12, 13, 18, 35})));
    auto prio = quadratic_gb_revlex_any(istar);
    REQUIRE(prio.has_value());
    auto gb = buchberger(istar.gens, MonomialOrder::grevlex_perm(5, *prio));
    for (const auto& f : gb) CHECK(f.degree() <= 2);

    CHECK_THROWS_AS(quadratic_gb_revlex(toric_ideal(sg({2, 3}))), Error);
}

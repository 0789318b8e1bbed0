#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "tcone/classify.hpp"
#include "tcone/errors.hpp"
#include "tcone/tangent_cone.hpp"

using namespace tcone;

namespace {

NumericalSemigroup sg(std::initializer_list<Elem> gens) {
    return NumericalSemigroup::from_candidates(std::vector<Elem>(gens));
}

Ideal maximal_ideal(int nvars) {
    Ideal m{nvars, {}};
    for (int v = 0; v < nvars; ++v) m.gens.push_back(Polynomial::variable(v));
    return m;
}

// gcd-normalized prefix <a_1..a_i> of a construction-order generator list
NumericalSemigroup prefix_semigroup(const std::vector<Elem>& order, int i) {
    std::vector<Elem> pre(order.begin(), order.begin() + i);
    Elem g = pre[0];
    for (Elem v : pre) g = std::gcd(g, v);
    for (Elem& v : pre) v /= g;
    return NumericalSemigroup::from_candidates(pre);
}

}  // namespace

TEST_CASE("family templates produce the advertised generators") {
    FamilyParams one{FamilyKind::I, 3, 3, 1};
    CHECK(family_generators(one) == std::vector<Elem>{8, 12, 18, 13, 35});
    CHECK(family_member(one).generators() == std::vector<Elem>(fixtures::kGoldenGens.begin(),
                                                               fixtures::kGoldenGens.end()));

    FamilyParams two{FamilyKind::II, 1, 3, 1};
    CHECK(family_generators(two) == std::vector<Elem>{8, 12, 10, 15, 29});
    NumericalSemigroup H = family_member(two);
    CHECK(H.generators() == std::vector<Elem>{8, 10, 12, 15, 29});

    // both families consist of quadratic semigroups with non-CM tangent cone
    auto tc = analyze_tangent_cone(H);
    CHECK(tc.quadratic);
    CHECK_FALSE(tc.cm);
    CHECK(tc.qgb_revlex);
    CHECK(tc.h == std::vector<long long>{1, 4, 2, 1});

    // defaults: kind I with (u,u',u'') = (1,3,1)
    CHECK(family_generators(FamilyParams{}) == std::vector<Elem>{8, 12, 10, 9, 23});

    // u'' = 0 is a kind II member but a kind I degeneracy
    CHECK(family_generators({FamilyKind::II, 1, 3, 0}) == std::vector<Elem>{8, 12, 10, 11, 25});
    CHECK(family_member({FamilyKind::II, 1, 3, 0}).generators() ==
          std::vector<Elem>{8, 10, 11, 12, 25});

    CHECK_THROWS_WITH_AS(family_generators({FamilyKind::I, 3, 2, 1}),
                         doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(family_generators({FamilyKind::I, 3, 1, 1}),
                         doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(family_generators({FamilyKind::I, 1, 3, 0}),
                         doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(family_generators({FamilyKind::II, 0, 3, 1}),
                         doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(family_generators({FamilyKind::II, 1, 3, -2}),
                         doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("family members over a parameter grid are quadratic, non-CM, and classify back") {
    for (FamilyKind kind : {FamilyKind::I, FamilyKind::II})
        for (long long up = 3; up <= 5; up += 2)
            for (long long u = 1; u <= 4; ++u)
                for (long long udp = kind == FamilyKind::I ? 1 : 0; udp <= 4; ++udp) {
                    FamilyParams p{kind, u, up, udp};
                    CAPTURE(static_cast<int>(kind));
                    CAPTURE(u);
                    CAPTURE(up);
                    CAPTURE(udp);
                    NumericalSemigroup H = family_member(p);  // throws if degenerate
                    REQUIRE(H.embdim() == 5);
                    auto tc = analyze_tangent_cone(H);
                    CHECK(tc.quadratic);
                    CHECK_FALSE(tc.cm);
                    CHECK(tc.qgb_revlex);
                    auto back = classify_non_cm_quadratic_5(H);
                    REQUIRE(back.has_value());
                    CHECK(*back == p);
                }
}

TEST_CASE("classification recognizes exactly the family members") {
    auto golden = classify_non_cm_quadratic_5(sg({8, 12, 13, 18, 35}));
    REQUIRE(golden.has_value());
    CHECK(*golden == FamilyParams{FamilyKind::I, 3, 3, 1});

    auto two = classify_non_cm_quadratic_5(sg({8, 10, 12, 15, 29}));
    REQUIRE(two.has_value());
    CHECK(*two == FamilyParams{FamilyKind::II, 1, 3, 1});

    // boundary members of kind II whose fourth template value uses u'' = 0
    CHECK(classify_non_cm_quadratic_5(sg({8, 10, 11, 12, 25})) ==
          FamilyParams{FamilyKind::II, 1, 3, 0});
    CHECK(classify_non_cm_quadratic_5(sg({8, 12, 13, 14, 31})) ==
          FamilyParams{FamilyKind::II, 2, 3, 0});

    CHECK(classify_non_cm_quadratic_5(sg({8, 12, 18, 21, 43})) ==
          FamilyParams{FamilyKind::I, 3, 3, 3});
    CHECK(classify_non_cm_quadratic_5(sg({8, 9, 10, 12, 23})) ==
          FamilyParams{FamilyKind::I, 1, 3, 1});

    // CM tangent cones, wrong multiplicity, wrong embedding dimension: no match
    CHECK_FALSE(classify_non_cm_quadratic_5(sg({5, 6, 7, 8, 9})).has_value());
    CHECK_FALSE(classify_non_cm_quadratic_5(sg({9, 17, 20, 23, 25})).has_value());
    CHECK_FALSE(classify_non_cm_quadratic_5(sg({8, 9, 10, 11, 12})).has_value());
    CHECK_FALSE(classify_non_cm_quadratic_5(sg({2, 3})).has_value());
}

TEST_CASE("power-of-two construction: base case lands on the running example") {
    Construction c = construct_general({3, {3, 3, 1}});
    CHECK(c.order == std::vector<Elem>{8, 12, 18, 13, 35});
    CHECK(c.H.generators() == std::vector<Elem>(fixtures::kGoldenGens.begin(),
                                                fixtures::kGoldenGens.end()));

    // the predicted relations, spelled out (variables follow construction order)
    REQUIRE(c.relations.size() == 5);
    CHECK(c.relations[0] == parse_polynomial("x1*x5 - x2*x3*x4", 5));
    CHECK(c.relations[1] == parse_polynomial("x2*x5 - x1^2*x3*x4", 5));
    CHECK(c.relations[2] == parse_polynomial("x3*x5 - x1^5*x4", 5));
    CHECK(c.relations[3] == parse_polynomial("x4*x5 - x1^6", 5));
    CHECK(c.relations[4] == parse_polynomial("x5^2 - x1^5*x2*x3", 5));
    for (const auto& f : c.relations) CHECK(binomial_in_toric(f, c.order));
}

TEST_CASE("power-of-two construction: every instance is quadratic and non-CM") {
    struct Row {
        int n;
        std::vector<long long> us;
        std::vector<Elem> order;
        std::vector<long long> h;
    };
    // clang-format off
    const std::vector<Row> rows = {
        {3, {3, 3, 1},    {8, 12, 18, 13, 35},      {1, 4, 2, 1}},
        {3, {3, 1, 1},    {8, 12, 10, 9, 23},       {1, 4, 2, 1}},
        {3, {5, 1, 2},    {8, 20, 14, 15, 41},      {1, 4, 2, 1}},
        {3, {3, 3, 3},    {8, 12, 18, 21, 43},      {1, 4, 2, 1}},
        {3, {7, 2, 1},    {8, 28, 22, 15, 57},      {1, 4, 2, 1}},
        {4, {3, 1, 1, 1}, {16, 24, 20, 18, 17, 63}, {1, 5, 5, 4, 1}},
    };
    // clang-format on
    for (const auto& row : rows) {
        CAPTURE(row.n);
        Construction c = construct_general({row.n, row.us});
        CHECK(c.order == row.order);
        REQUIRE(c.relations.size() == row.order.size());
        for (const auto& f : c.relations) CHECK(binomial_in_toric(f, c.order));

        // intermediate gcd-normalized prefixes are complete intersections
        for (int i = 2; i <= row.n + 1; ++i) {
            NumericalSemigroup Hi = prefix_semigroup(c.order, i);
            CHECK(Hi.embdim() == i);
            CHECK(is_ci(Hi));
        }

        auto tc = analyze_tangent_cone(c.H);
        CHECK(tc.quadratic);
        CHECK_FALSE(tc.cm);
        CHECK(tc.qgb_revlex);
        CHECK(tc.h == row.h);

        // the last initial-forms variable annihilates the whole irrelevant ideal
        Ideal q = colon(tc.istar, Polynomial::variable(tc.istar.nvars - 1));
        CHECK(ideal_equal(q, maximal_ideal(tc.istar.nvars)));
    }
}

TEST_CASE("power-of-two construction: a width-seven instance, light checks") {
    Construction c = construct_general({5, {3, 1, 1, 1, 1}});
    CHECK(c.order == std::vector<Elem>{32, 48, 40, 36, 34, 33, 159});
    CHECK(c.H.embdim() == 7);
    for (const auto& f : c.relations) CHECK(binomial_in_toric(f, c.order));
    CHECK_FALSE(c.H.cm_tangent_cone().cm);
    for (int i = 2; i <= 6; ++i) {
        NumericalSemigroup Hi = prefix_semigroup(c.order, i);
        CHECK(Hi.embdim() == i);
        CHECK(is_ci(Hi));
    }
}

TEST_CASE("power-of-two construction rejects bad parameters") {
    CHECK_THROWS_WITH_AS(construct_general({2, {3, 1}}), doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(construct_general({3, {3, 1}}), doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(construct_general({3, {3, 1, 1, 1}}),
                         doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(construct_general({3, {2, 1, 1}}), doctest::Contains("InvalidParams"),
                         Error);
    CHECK_THROWS_WITH_AS(construct_general({3, {1, 1, 1}}), doctest::Contains("InvalidParams"),
                         Error);
    CHECK_THROWS_WITH_AS(construct_general({3, {3, 0, 1}}), doctest::Contains("InvalidParams"),
                         Error);
    CHECK_THROWS_WITH_AS(construct_general({11, {3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}),
                         doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("quadratic gluing doubles and minimalizes") {
    CHECK(glue_quadratic(sg({2, 3}), 3).generators() == std::vector<Elem>{3, 4});
    CHECK(glue_quadratic(sg({4, 6, 5}), 5).generators() == std::vector<Elem>{5, 8, 12});

    // the second family's first four generators arise by gluing
    NumericalSemigroup glued = glue_quadratic(sg({4, 6, 5}), 15);
    CHECK(glued.generators() == std::vector<Elem>{8, 10, 12, 15});
    auto fam = family_member({FamilyKind::II, 1, 3, 1}).generators();
    CHECK(std::equal(glued.generators().begin(), glued.generators().end(), fam.begin()));

    // gluings of complete intersections stay complete intersections
    CHECK(is_ci(glue_quadratic(sg({2, 3}), 3)));
    CHECK(is_ci(glue_quadratic(sg({4, 6, 5}), 5)));
    CHECK(is_ci(glue_quadratic(sg({4, 6, 5}), 15)));

    CHECK_THROWS_WITH_AS(glue_quadratic(sg({2, 3}), 4), doctest::Contains("NotOdd"), Error);
    CHECK_THROWS_WITH_AS(glue_quadratic(sg({4, 6, 5}), 7), doctest::Contains("NotMember"), Error);
}

TEST_CASE("complete-intersection test counts minimal toric generators") {
    CHECK(is_ci(sg({2, 3})));
    CHECK(is_ci(sg({4, 5, 6})));
    CHECK(is_ci(sg({16, 17, 18, 20, 24})));
    CHECK_FALSE(is_ci(sg({8, 12, 13, 18, 35})));
}

#include <doctest.h>

#include "tcone/errors.hpp"
#include "tcone/polynomial.hpp"

using namespace tcone;

namespace {

Monomial mono(std::initializer_list<int> exps) {
    Monomial m;
    int i = 0;
    for (int e : exps) m.e[static_cast<size_t>(i++)] = static_cast<uint16_t>(e);
    return m;
}

Polynomial parse(const std::string& s, int n = 5) { return parse_polynomial(s, n); }

}  // namespace

TEST_CASE("monomial primitives") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 0, 3});
    CHECK(a.degree() == 3);
    CHECK(mono_mul(a, b) == mono({3, 1, 3}));
    CHECK(mono_div(mono_mul(a, b), b) == a);
    CHECK(mono_divides(a, mono_mul(a, b)));
    CHECK_FALSE(mono_divides(b, a));
    CHECK(mono_lcm(a, b) == mono({2, 1, 3}));
    CHECK_FALSE(mono_coprime(a, b));
    CHECK(mono_coprime(mono({0, 2, 0}), mono({3, 0, 1})));
    CHECK(mono_var(2, 4) == mono({0, 0, 4}));
    CHECK(Monomial{}.is_one());
}

TEST_CASE("lex order") {
    auto lex = MonomialOrder::lex(3);
    CHECK(lex.greater(mono({1, 0, 0}), mono({0, 5, 5})));  // degree-blind
    CHECK(lex.greater(mono({2, 0, 0}), mono({1, 9, 9})));
    CHECK(lex.greater(mono({1, 1, 0}), mono({1, 0, 9})));
    CHECK(lex.cmp(mono({1, 2, 3}), mono({1, 2, 3})) == 0);
    CHECK(lex.is_global());
}

TEST_CASE("graded reverse lex order") {
    auto grl = MonomialOrder::grevlex(3);
    // degree dominates
    CHECK(grl.greater(mono({0, 0, 2}), mono({1, 0, 0})));
    // classic degree-2 chain for x1 > x2 > x3:
    // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
    std::vector<Monomial> chain{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(grl.greater(chain[i], chain[i + 1]));

    // permuted priority x2 > x3 > x1 relabels the chain
    auto perm = MonomialOrder::grevlex_perm(3, {1, 2, 0});
    CHECK(perm.greater(mono({0, 2, 0}), mono({0, 1, 1})));
    CHECK(perm.greater(mono({0, 1, 1}), mono({0, 0, 2})));
    CHECK(perm.greater(mono({0, 0, 2}), mono({1, 1, 0})));
    CHECK(perm.greater(mono({1, 0, 1}), mono({2, 0, 0})));
}

TEST_CASE("elimination block order") {
    auto elim = MonomialOrder::elim_block(3, 1);
    // any positive power of the block variable beats everything outside
    CHECK(elim.greater(mono({1, 0, 0}), mono({0, 7, 7})));
    CHECK(elim.greater(mono({2, 0, 0}), mono({1, 6, 6})));
    // within equal block degree, the tail is compared by grevlex
    CHECK(elim.greater(mono({1, 2, 0}), mono({1, 1, 1})));
    CHECK(elim.greater(mono({0, 0, 2}), mono({0, 1, 0})));
    CHECK(elim.is_global());
}

TEST_CASE("local order ranks low degree first") {
    auto loc = MonomialOrder::negdegrevlex(3);
    CHECK_FALSE(loc.is_global());
    CHECK(loc.greater(Monomial{}, mono({1, 0, 0})));  // 1 is the largest monomial
    CHECK(loc.greater(mono({1, 0, 0}), mono({2, 0, 0})));
    CHECK(loc.greater(mono({0, 0, 1}), mono({1, 1, 0})));
    // equal degree: same tie-break as grevlex
    auto grl = MonomialOrder::grevlex(3);
    std::vector<Monomial> degree2{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                  mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (const auto& a : degree2)
        for (const auto& b : degree2) CHECK(loc.cmp(a, b) == grl.cmp(a, b));
}

TEST_CASE("weighted order") {
    auto w = MonomialOrder::weighted(2, {2, 3});
    CHECK(w.greater(mono({0, 1}), mono({1, 0})));  // 3 > 2
    CHECK(w.greater(mono({3, 0}), mono({0, 1})));  // 6 > 3
    // equal weight 6: total degree breaks the tie
    CHECK(w.greater(mono({3, 0}), mono({0, 2})));
    CHECK(w.cmp(mono({1, 0}), mono({1, 0})) == 0);
    CHECK(w.is_global());
}

TEST_CASE("polynomial arithmetic is canonical") {
    Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
    Polynomial f = (x + y) * (x + y);
    Polynomial g = x * x + x * y + x * y + y * y;
    CHECK(f == g);
    CHECK(f.size() == 3);
    CHECK((f - g).is_zero());
    CHECK((x * y - y * x).is_zero());

    Polynomial h = x * x * y;  // x1^2 x2
    CHECK(h.degree() == 3);
    CHECK(f.degree() == 2);
    CHECK(f.low_degree() == 2);
    CHECK((f + Polynomial::constant(3)).low_degree() == 0);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + x).is_homogeneous());

    // lowest_form picks the minimal-degree slice
    Polynomial mixed = x - x * x + x * y;
    CHECK(mixed.lowest_form() == x);
    CHECK(mixed.lowest_form().degree() == 1);

    // scalar and monomial scaling
    CHECK(f.scaled(2) == f + f);
    CHECK(x.mul_monomial(mono({0, 3})) == x * y * y * y);
}

TEST_CASE("add_scaled matches explicit arithmetic") {
    Polynomial f = parse("x1^2*x2 - 3*x3 + 1", 3);
    Polynomial g = parse("x1*x2 - x3^2", 3);
    Polynomial h = f;
    h.add_scaled(mpq_class(-2, 3), mono({1, 0, 1}), g);
    CHECK(h == f + g.mul_monomial(mono({1, 0, 1})).scaled(mpq_class(-2, 3)));
}

TEST_CASE("leading terms depend on the order") {
    Polynomial f = parse("x1*x3 + x2^2", 3);
    CHECK(f.leading_term(MonomialOrder::lex(3)).m == mono({1, 0, 1}));
    CHECK(f.leading_term(MonomialOrder::grevlex(3)).m == mono({0, 2, 0}));

    Polynomial g = parse("x1 - x1^2", 3);
    CHECK(g.leading_term(MonomialOrder::negdegrevlex(3)).m == mono({1, 0, 0}));
    CHECK(g.leading_term(MonomialOrder::grevlex(3)).m == mono({2, 0, 0}));
    CHECK(g.monic(MonomialOrder::grevlex(3)) == parse("x1^2 - x1", 3));
    CHECK(g.monic(MonomialOrder::negdegrevlex(3)) == g);

    CHECK_THROWS_AS(Polynomial::zero().leading_term(MonomialOrder::lex(3)), Error);
}

TEST_CASE("variable surgery") {
    Polynomial f = parse("x1^2*x2 - x2*x3", 3);
    CHECK(f.substitute_zero(0) == parse("-x2*x3", 3));
    CHECK(f.substitute_zero(2) == parse("x1^2*x2", 3));

    Polynomial shifted = f.insert_var(0);
    CHECK(shifted == parse("x2^2*x3 - x3*x4", 4));
    CHECK(shifted.drop_var(0) == f);

    // grade_by_var: x_i -> x_i * t with t the inserted slot
    Polynomial graded = shifted.grade_by_var(0);
    CHECK(graded == parse("x1^3*x2^2*x3 - x1^2*x3*x4", 4));

    // dropping a live variable is rejected
    CHECK_THROWS_AS(f.drop_var(1), Error);
}

TEST_CASE("printing and parsing round-trip") {
    auto ord = MonomialOrder::grevlex(5);
    for (const char* s : {
             "x3^2 - x1*x4",
             "x1^2*x2^2*x3 - x4*x5",
             "3/2*x1*x2^2 - x3 + 1",
             "-x1 + 1",
             "x5^2",
             "1",
             "123456789012345678901234567890*x1 - 1/340282366920938463463374607431768211456",
         }) {
        Polynomial f = parse(s);
        CHECK(parse_polynomial(to_string(f), 5) == f);
        CHECK(parse_polynomial(to_string(f, ord), 5) == f);
    }
    CHECK(to_string(Polynomial::zero()) == "0");
    CHECK(to_string(parse("x3^2 - x1*x4"), ord) == "x3^2 - x1*x4");
    CHECK(to_string(parse("x2^2+x1*x3"), ord) == "x2^2 + x1*x3");

    auto list = parse_polynomial_list("x1, x2^2 - x3,\n x4*x5", 5);
    REQUIRE(list.size() == 3);
    CHECK(list[1] == parse("x2^2 - x3"));

    CHECK_THROWS_AS(parse("x0"), Error);
    CHECK_THROWS_AS(parse("x6"), Error);
    CHECK_THROWS_AS(parse("x1 +"), Error);
    CHECK_THROWS_AS(parse("2x1"), Error);
    CHECK_THROWS_AS(parse(""), Error);
}

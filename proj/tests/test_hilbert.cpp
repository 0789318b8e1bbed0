#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tcone/errors.hpp"
#include "tcone/gb.hpp"

using namespace tcone;

namespace {

ZPoly zp(std::initializer_list<long> cs) {
    ZPoly out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

Polynomial pm(const Monomial& m) { return Polynomial::term(m, 1); }

}  // namespace

TEST_CASE("numerator base cases") {
    CHECK(hilbert_numerator({}, 3) == zp({1}));
    CHECK(hilbert_numerator({Polynomial::constant(1)}, 3).empty());
    // single monomial x1^2: 1 - t^2
    CHECK(hilbert_numerator({pm(mono_var(0, 2))}, 2) == zp({1, 0, -1}));
    // coprime pair x1^2, x2^3: (1-t^2)(1-t^3)
    CHECK(hilbert_numerator({pm(mono_var(0, 2)), pm(mono_var(1, 3))}, 2) ==
          zp({1, 0, -1, -1, 0, 1}));
    CHECK_THROWS_AS(hilbert_numerator({pm(mono_var(0, 1))}, 0), Error);
    CHECK_THROWS_AS(hilbert_numerator({parse_polynomial("x1 + x2", 2)}, 2), Error);
}

TEST_CASE("numerator with splitting") {
    // square of the irrelevant ideal in 2 vars
    std::vector<Polynomial> gens = {pm(mono_var(0, 2)),
                                    pm(mono_mul(mono_var(0, 1), mono_var(1, 1))),
                                    pm(mono_var(1, 2))};
    CHECK(hilbert_numerator(gens, 2) == zp({1, 0, -3, 2}));

    auto [h, dim] = hilbert_h_polynomial(hilbert_numerator(gens, 2), 2);
    CHECK(h == zp({1, 2}));
    CHECK(dim == 0);
}

TEST_CASE("series coefficients match direct monomial counts") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        int nvars = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> ms;
        std::vector<Polynomial> gens;
        int count = 2 + static_cast<int>(rng() % 4);
        for (int g = 0; g < count; ++g) {
            Monomial m;
            int deg = 0;
            while (deg == 0) {
                for (int v = 0; v < nvars; ++v) m.e[static_cast<size_t>(v)] = static_cast<uint16_t>(rng() % 4);
                deg = m.degree();
            }
            ms.push_back(m);
            gens.push_back(pm(m));
        }
        ZPoly num = hilbert_numerator(gens, nvars);
        auto coeffs = hilbert_series_coeffs(num, nvars, 10);
        for (int d = 0; d <= 10; ++d) {
            mpz_class expected(static_cast<long>(oracle::count_standard_monomials(ms, nvars, d)));
            CHECK(coeffs[static_cast<size_t>(d)] == expected);
        }
    }
}

TEST_CASE("exact division by one minus t") {
    CHECK(divide_one_minus_t(zp({1, 0, -1}), 1) == zp({1, 1}));
    CHECK(divide_one_minus_t(zp({1, -2, 1}), 2) == zp({1}));
    CHECK_THROWS_AS(divide_one_minus_t(zp({1, 1}), 1), Error);
    CHECK_THROWS_AS(divide_one_minus_t(zp({1, 0, -1}), 2), Error);
}

TEST_CASE("h polynomial strips exactly the t=1 roots") {
    // artinian complete intersection (x1^2, x2^2): numerator (1-t^2)^2 in 2 vars
    ZPoly num = zp({1, 0, -2, 0, 1});
    auto [h, dim] = hilbert_h_polynomial(num, 2);
    CHECK(h == zp({1, 2, 1}));
    CHECK(dim == 0);

    // zero ideal in 2 vars
    auto [h2, dim2] = hilbert_h_polynomial(zp({1}), 2);
    CHECK(h2 == zp({1}));
    CHECK(dim2 == 2);

    // unit ideal: empty numerator convention
    auto [h3, dim3] = hilbert_h_polynomial(ZPoly{}, 2);
    CHECK(h3.empty());
    CHECK(dim3 == -1);
}

TEST_CASE("zpoly helpers") {
    CHECK(zpoly_add(zp({1, 2}), zp({0, 0, 5})) == zp({1, 2, 5}));
    CHECK(zpoly_sub(zp({1, 2}), zp({1, 2})).empty());
    CHECK(zpoly_shift(zp({1, -1}), 2) == zp({0, 0, 1, -1}));
}

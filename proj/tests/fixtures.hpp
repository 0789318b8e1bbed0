#pragma once

/*
 * Shared golden data for the test suites: the guiding 5-generated example
 * with non-Cohen-Macaulay tangent cone, the reference table of quadratic
 * 5-semigroup h-vectors, and the three artinian quadric quotients used by
 * the Koszul machinery.  Artinian reductions renumber variables: killing x1
 * in a 5-variable presentation leaves x1..x4 standing for the old x2..x5.
 */

#include <string>
#include <vector>

#include "tcone/gb.hpp"
#include "tcone/polynomial.hpp"
#include "tcone/semigroup.hpp"

namespace fixtures {

inline tcone::Ideal parse_ideal(const std::string& text, int nvars) {
    return {nvars, tcone::parse_polynomial_list(text, nvars)};
}

// ---- guiding example: H = <8,12,13,18,35> ---------------------------------

inline const std::vector<tcone::Elem> kGoldenGens{8, 12, 13, 18, 35};

// Minimal binomial generating set of the defining toric ideal.
inline const char* kGoldenToric =
    "x3^2-x1*x4, x2*x4^2-x3*x5, x2*x3*x4-x1*x5, x2^3-x4^2, "
    "x1^3-x2^2, x1^2*x3*x4-x2*x5, x1^2*x4^3-x5^2, x1^2*x2^2*x3-x4*x5";

// Minimal generators of the initial-forms ideal (the tangent cone).
inline const char* kGoldenInitial =
    "x5^2, x4*x5, x3*x5, x2*x5, x1*x5, x4^2, x3^2-x1*x4, x2^2";

// ---- artinian quadric quotients in K[x1..x4] ------------------------------
// (tangent-cone coordinates after killing the multiplicity variable)

inline const char* kJ1 = "x1^2, x4^2, x2^2-x1*x3, x3^2, x1*x2, x1*x4, x2*x3, x3*x4";
inline const char* kJ2 = "x1^2, x4^2, x2^2-x1*x3, x3^2-x1*x4, x1*x2, x2*x3, x2*x4";
inline const char* kJ3 = "x1^2, x4^2, x2^2-x1*x3, x3^2, x1*x2, x2*x3, x2*x4";

// Degree-3 monomials that obstruct quadratic Groebner bases for J2/J3.
inline const std::vector<const char*> kObstructions{"x2^3", "x1*x3*x4", "x1*x3^2"};

// Koszul filtrations (families of variable subsets, 1-based indices).
inline const std::vector<std::vector<int>> kJ1Filtration{
    {}, {1}, {1, 4}, {1, 2, 4}, {1, 3, 4}, {1, 2, 3, 4}};
inline const std::vector<std::vector<int>> kJ23Filtration{
    {}, {4}, {2, 4}, {1, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3, 4}};

// ---- reference table: quadratic 5-generated semigroups --------------------

struct TableRow {
    std::vector<tcone::Elem> gens;
    std::vector<tcone::Elem> h_vector;
    bool cm;
    bool qgb;  // quadratic Groebner basis under the tried revlex orders
};

inline const std::vector<TableRow> kTable{
    {{5, 6, 7, 8, 9}, {1, 4}, true, true},
    {{6, 7, 8, 9, 10}, {1, 4, 1}, true, true},
    {{7, 8, 9, 10, 11}, {1, 4, 2}, true, true},
    {{8, 12, 13, 18, 35}, {1, 4, 2, 1}, false, true},
    {{8, 9, 10, 11, 12}, {1, 4, 3}, true, true},
    {{9, 10, 11, 13, 17}, {1, 4, 3, 1}, true, true},
    {{9, 10, 11, 12, 15}, {1, 4, 4}, true, true},
    {{9, 17, 20, 23, 25}, {1, 4, 4}, true, false},
    {{10, 16, 19, 22, 25}, {1, 4, 4, 1}, true, true},
    {{11, 13, 14, 15, 19}, {1, 4, 5, 1}, true, false},
    {{12, 14, 16, 18, 27}, {1, 4, 5, 2}, true, true},
    {{16, 17, 18, 20, 24}, {1, 4, 6, 4, 1}, true, true},
};

}  // namespace fixtures

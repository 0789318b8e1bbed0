#pragma once

/*
 * Koszulness certificates for standard graded quotients: positivity of the
 * inverted h-polynomial series, Koszul filtrations by ideals of variables,
 * Groebner flags, existence/nonexistence of a quadratic Groebner basis in
 * the given coordinates under any term order, and a binomial-coefficient
 * growth bound on h-vectors.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tcone/gb.hpp"

namespace tcone {

// First negative coefficient of 1 / sum_j h_j (-t)^j, if any appears within
// the truncation bound.  A Koszul algebra with h-polynomial h has Poincare
// series 1/h(-t), so a negative coefficient rules Koszulness out.
// Requires h[0] == 1 and h_j >= 0 (Error("InvalidParams")).
struct SeriesNegativity {
    bool found = false;
    int index = 0;            // degree of the first negative coefficient
    mpz_class value;          // that coefficient
    std::vector<mpz_class> coeffs;  // series coefficients 0..last computed
};
SeriesNegativity poincare_negativity(const std::vector<long long>& h, int truncation = 30);

// One verified step of a filtration: member = sub + (x_var), and the colon
// (sub : x_var) equals the family member `colon_equals`.  Variable indices
// are 1-based throughout.
struct FiltrationStep {
    std::vector<int> member;
    std::vector<int> sub;
    int var = 0;
    std::vector<int> colon_equals;
};
struct FiltrationCheck {
    bool valid = false;
    std::vector<FiltrationStep> steps;
    std::string failure;  // empty when valid
};

// Checks that the given family of variable subsets is a Koszul filtration
// of S/J: it contains the zero ideal and all variables, and every nonempty
// member M admits sub in the family and a variable x with M = sub + (x)
// and (sub : x) again in the family (all identities modulo J, decided by
// exact ideal arithmetic in the ambient ring).  Candidate subs are tried
// largest first, so each step records the canonical witness.
FiltrationCheck verify_koszul_filtration(const Ideal& J, const std::vector<std::vector<int>>& family);

// Searches for a permutation pi of the variables whose complete flag
// 0 < (x_pi1) < (x_pi1, x_pi2) < ... is a Koszul filtration of S/J.
// Error("InvalidParams") when nvars > 6.
std::optional<std::vector<int>> grobner_flag_search(const Ideal& J);

// Decides whether the quadric-generated ideal J has a quadratic Groebner
// basis with respect to SOME term order, in the given coordinates.  All
// realizable degree-2 leading-monomial sets are enumerated (Gauss
// reduction for realizability as a vector-space projection, exact
// Fourier-Motzkin for realizability by a weight vector); each one either
// passes the degree-3 dimension test, yielding a verified witness order,
// or contributes the degree-3 leading monomials that fall outside the
// quadratic span ("obstructions").  Error("NotQuadraticInput") unless all
// generators are homogeneous of degree 2.
struct QuadraticGBDecision {
    bool nonexistent = false;  // true: no term order admits a quadratic basis
    std::optional<std::vector<long long>> order_weights;  // witness when one exists
    std::vector<Monomial> obstructions;  // sorted, deduplicated
};
QuadraticGBDecision quadratic_gb_nonexistence(const Ideal& J);

// m-th Macaulay representation value = C(b_m,m) + C(b_{m-1},m-1) + ... with
// b_m > b_{m-1} > ... >= 1; returned as (top, bottom) pairs.
std::vector<std::pair<long long, int>> macaulay_decomposition(long long value, int m);

// Growth bound satisfied by h-vectors of Koszul algebras: writing h_m in
// its m-th Macaulay representation, h_{m+1} <= C(b_m, m+1) + C(b_{m-1}, m)
// + ... (bottom indices shift up, tops stay).  Checked for all consecutive
// entries; indices are reported on failure.
struct GrowthBound {
    bool ok = true;
    int failed_index = -1;   // m+1 of the first violated bound
    long long bound = 0;     // the violated bound's value
};
GrowthBound growth_bound_check(const std::vector<long long>& h);

// Verdict labels used by the classification records.
enum class KoszulVerdict { Koszul, NotKoszul, Unknown };

struct KoszulAssessment {
    KoszulVerdict verdict = KoszulVerdict::Unknown;
    std::string certificate = "none";
    int negativity_index = -1;  // set for poincare-negativity verdicts
};

// Aggregates the per-ring facts into a verdict: a quadratic Groebner basis
// (or membership in one of the certified families) proves Koszul; a
// non-quadratic defining ideal refutes it; for CM quadratic rings a
// negative coefficient of 1/h(-t) refutes it; otherwise unknown.
KoszulAssessment assess_koszul(bool quadratic, bool cm, bool has_quadratic_gb,
                               bool family_match, const std::vector<long long>& h,
                               int truncation = 30);

}  // namespace tcone

#pragma once

/*
 * Tangent cones of numerical semigroup rings: defining toric ideals by
 * elimination, ideals of initial forms via Mora standard bases, h-vectors,
 * Cohen-Macaulayness of the associated graded ring, quadratic reverse-lex
 * Groebner bases, and Artinian reductions.  Every invariant with an
 * independent combinatorial characterization is computed both ways and the
 * two answers are compared (Error("OracleMismatch") on disagreement).
 */

#include <optional>
#include <vector>

#include "tcone/gb.hpp"
#include "tcone/semigroup.hpp"

namespace tcone {

// Defining ideal of the semigroup ring in x1..xn (kernel of x_i -> t^{a_i}),
// as its reduced grevlex basis; all elements are pure-difference binomials.
// The kernel depends only on the ratios of the exponents, so a common factor
// of the tuple is divided out first; the tuple need not be a minimal
// generating set.
Ideal toric_ideal_of(const std::vector<Elem>& gens);
Ideal toric_ideal(const NumericalSemigroup& H);

// True iff the pure-difference binomial x^alpha - x^beta lies in the kernel,
// i.e. the two weighted degrees agree.  No basis computation involved.
bool binomial_in_toric(const Polynomial& f, const std::vector<Elem>& gens);

// Ideal of initial forms (defining ideal of the tangent cone at the
// maximal ideal), given by a minimal homogeneous generating set.
Ideal initial_forms_ideal(const Ideal& toric);

// True iff every element of the (assumed minimal) generating set is
// homogeneous of degree two.
bool generated_by_quadrics(const Ideal& istar);

// h-vector of the tangent cone.  Hilbert-series route (leading terms of a
// grevlex basis, numerator by splitting) cross-checked against the
// order-filtration recursion on the semigroup itself.
std::vector<long long> h_vector(const NumericalSemigroup& H, const Ideal& istar);

// Cohen-Macaulayness of the tangent cone == the class of x1 (initial form
// of the multiplicity generator) is a nonzerodivisor == istar : x1 = istar.
// Cross-checked against the additive certificate on the semigroup.
bool cohen_macaulay(const NumericalSemigroup& H, const Ideal& istar);

// Looks for a reverse-lex order whose reduced basis of istar is entirely
// quadratic; tries variable priorities (x1,..,xn) and (x2,..,xn,x1).
// Requires a quadratic ideal (Error("NotQuadratic") otherwise).
bool quadratic_gb_revlex(const Ideal& istar);

// Exhaustive variant over all n! priorities (n <= 7); returns a priority
// that works, or nothing.
std::optional<std::vector<int>> quadratic_gb_revlex_any(const Ideal& istar);

// Quotient of the tangent cone by the degree-one nonzerodivisor x1,
// presented by minimal generators in the remaining n-1 variables
// (x2..xn renamed to x1..x(n-1)).  Error("NotRegular") unless CM.
Ideal artinian_reduction(const NumericalSemigroup& H, const Ideal& istar);

struct TangentCone {
    NumericalSemigroup H;
    Ideal toric;   // reduced grevlex basis
    Ideal istar;   // minimal homogeneous generators
    bool quadratic = false;
    std::vector<long long> h;
    bool cm = false;
    bool qgb_revlex = false;  // only meaningful when quadratic
};

TangentCone analyze_tangent_cone(const NumericalSemigroup& H);

}  // namespace tcone

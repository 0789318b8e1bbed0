#pragma once

/*
 * Groebner engine: S-polynomials, division/normal forms (Mora's weak normal
 * form with ecart selection when the order is local), Buchberger with the
 * product and chain criteria, Mora's tangent-cone standard basis, ideal
 * operations (intersection, colon, saturation, elimination), graded
 * minimalization of generating sets, and Hilbert numerators of monomial
 * ideals.
 */

#include <gmpxx.h>

#include <vector>

#include "tcone/polynomial.hpp"

namespace tcone {

struct Ideal {
    int nvars = 0;
    std::vector<Polynomial> gens;
};

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Remainder of f under division by G.  For global orders this is the unique
// full normal form (no term of the result divisible by a leading term of G);
// for local orders it is Mora's weak normal form, with u*f - result in <G>
// for a unit u.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

// Reduced Groebner basis (global orders): unique, monic, tails reduced,
// sorted ascending by leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

// Standard basis w.r.t. a local order via Mora's algorithm; leading-term
// minimal and monic but tails are not reduced (tail reduction need not
// terminate for local orders).
std::vector<Polynomial> mora_standard_basis(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& ord);

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& ord);

// Exact quotient g / f; requires g in (f).
Polynomial divide_exact(const Polynomial& g, const Polynomial& f, const MonomialOrder& ord);

// Ideal operations return generating sets given by reduced Groebner bases
// under grevlex with identity priority.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal saturate(const Ideal& I, const Polynomial& f);

// Groebner basis of I under the block order eliminating the first k
// variables, restricted to the elements free of those variables (still
// expressed in the full ring).
Ideal eliminate(const Ideal& I, int k);

bool ideal_equal(const Ideal& A, const Ideal& B);

// Graded minimal generating set: candidates sorted by (weighted) degree and
// greedily kept iff not reducible to zero by the previously kept ones.
// Empty weights mean total degree.  Output elements are normal forms against
// the earlier survivors, monic under grevlex.
std::vector<Polynomial> minimalize_generators(const std::vector<Polynomial>& cands, int nvars,
                                              const std::vector<long long>& weights = {});

// ---- Hilbert series of monomial quotients ---------------------------------

// Univariate integer polynomial, index = degree.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_shift(const ZPoly& a, int k);  // * t^k
void zpoly_trim(ZPoly& a);

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/M for a
// monomial ideal M, by pivot splitting.  Throws Error("NotMonomial") if a
// generator has more than one term.
ZPoly hilbert_numerator(const std::vector<Polynomial>& monomial_gens, int nvars);

// N / (1-t)^k, throwing Error("Internal") unless the division is exact.
ZPoly divide_one_minus_t(const ZPoly& N, int k);

// h-polynomial and Krull dimension: N/(1-t)^nvars == h/(1-t)^dim, h(1) != 0.
std::pair<ZPoly, int> hilbert_h_polynomial(const ZPoly& N, int nvars);

// Coefficients 0..upto of N(t)/(1-t)^nvars as a power series.
std::vector<mpz_class> hilbert_series_coeffs(const ZPoly& N, int nvars, int upto);

}  // namespace tcone

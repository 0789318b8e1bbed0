#pragma once

/*
 * Numerical semigroups H = <a1,...,an> (gcd 1) with exact arithmetic on
 * 64-bit elements: membership, Apery sets, factorizations, the order
 * function of the associated graded ring, its Hilbert function, and the
 * Cohen-Macaulay test for the tangent cone via length comparison of
 * factorizations.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcone {

using Elem = long long;

// Exponent vector mu with sum_i mu[i]*a_i = value; length() is sum_i mu[i].
struct Factorization {
    std::vector<Elem> coeffs;

    Elem length() const;
    Elem value(const std::vector<Elem>& gens) const;
    bool operator==(const Factorization&) const = default;
};

// Result of the tangent-cone CM test.  When cm is false, `witness` is a
// vector nu with nu[0] = 0 whose value V = sum nu_i a_i lies in a1 + H
// while no factorization mu of V has mu[0] > 0 and length(mu) >= length(nu);
// such a nu certifies that x1 is a zerodivisor on the associated graded ring.
struct CMCertificate {
    bool cm = true;
    std::optional<Factorization> witness;
    Elem witness_value = 0;
};

class NumericalSemigroup {
public:
    // Normalizing constructor: sorts, deduplicates and drops redundant
    // candidates.  Throws Error("Empty") / Error("GcdNotOne").
    static NumericalSemigroup from_candidates(std::vector<Elem> candidates);

    // Validating constructor: requires the list to already be the minimal
    // generating set (sorted; throws Error("NotMinimal") naming the
    // redundant generator otherwise).
    static NumericalSemigroup from_minimal(std::vector<Elem> gens);

    const std::vector<Elem>& generators() const { return gens_; }
    Elem multiplicity() const { return gens_.front(); }
    int embdim() const { return static_cast<int>(gens_.size()); }

    bool contains(Elem m) const;
    Elem frobenius() const { return frobenius_; }

    // Smallest element of H in each residue class mod a; a must lie in H.
    std::vector<Elem> apery(Elem a) const;

    // All factorizations of m over the generators (empty iff m is not in H).
    std::vector<Factorization> factorizations(Elem m) const;

    // Maximal factorization length; h must lie in H.  order(0) == 0.
    Elem order(Elem h) const;

    // ord(v) for all v in [0, upto]; -1 marks non-members.
    std::vector<Elem> order_table(Elem upto) const;

    // Hilbert function of the associated graded ring: HF(i) = #{h : ord(h)=i}
    // for i = 0..upto.
    std::vector<Elem> hilbert_function_gr(int upto) const;

    // h-vector read off the Hilbert function: first differences up to the
    // index where HF stabilizes at the multiplicity.
    std::vector<Elem> h_vector_arith() const;

    // Least k > 0 with k*a_i inside the semigroup generated by the other
    // generators; i is 1-based.
    Elem c_value(int i) const;

    // Necessary conditions for all minimal toric generators of the tangent
    // cone to live in degree 2: some a_k + a_l (k,l >= 2) is divisible by
    // a_1, and 2 a_i lies in the semigroup of the remaining generators for
    // every i >= 2.
    bool quadratic_necessary() const;

    // Tangent-cone Cohen-Macaulay test: x1 is a nonzerodivisor on the
    // associated graded ring iff ord(h + a1) = ord(h) + 1 for every h in H.
    // Scans the order levels; complete because the quotient by x1 is a
    // standard graded algebra, so its first empty level kills all higher
    // ones.  Returns a maximal factorization avoiding a1 as the witness.
    CMCertificate cm_tangent_cone() const;

    // Canonical key "a1,a2,...,an".
    std::string key() const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

private:
    NumericalSemigroup() = default;
    void init();  // fills apery_/frobenius_ from gens_

    std::vector<Elem> gens_;
    std::vector<Elem> apery_;  // w.r.t. gens_[0]
    Elem frobenius_ = -1;
};

// Independent recheck of a NotCM witness (used by cm_tangent_cone before
// returning and by callers who persist witnesses).
bool verify_not_cm_witness(const NumericalSemigroup& H, const Factorization& nu);

// True iff m is representable over the (not necessarily gcd-1) generator
// list `gens`; plain dynamic program on values 0..m.
bool subsemigroup_contains(const std::vector<Elem>& gens, Elem m);

}  // namespace tcone

#pragma once

/*
 * Constructive side of the classification: the two five-generator families
 * of multiplicity 8 whose tangent cone is quadratic but not Cohen-Macaulay,
 * the general power-of-two construction with its predicted relations,
 * quadratic gluing, and the complete-intersection test.
 */

#include <optional>
#include <vector>

#include "tcone/gb.hpp"
#include "tcone/semigroup.hpp"

namespace tcone {

enum class FamilyKind { I, II };

// Parameters (u, u', u'') of the two families
//   I : <8, 4u', 4u+2u', 4u''+2u+ u', 6u+7u'+4u''-8>
//   II: <8, 4u', 4u+2u', 4u''+2u+3u', 6u+9u'+4u''-8>
// with u, u' >= 1, u' > 1 odd, and u'' >= 1 for kind I but u'' >= 0 for
// kind II: at u'' = 0 the kind I template collapses (its third value is
// twice the fourth) while kind II still yields a minimal generating set,
// e.g. <8,10,11,12,25> at (u, u', u'') = (1, 3, 0).
struct FamilyParams {
    FamilyKind kind = FamilyKind::I;
    long long u = 1;
    long long u_prime = 3;
    long long u_dprime = 1;
    bool operator==(const FamilyParams&) const = default;
};

// The five generators in template order (not sorted).
// Error("InvalidParams") on an invariant violation.
std::vector<Elem> family_generators(const FamilyParams& p);

// The semigroup generated by the template values.  Error("NotMinimal"),
// naming a redundant value, if the five do not form a minimal generating
// set; the caller decides whether a degenerate parameter choice is fatal.
NumericalSemigroup family_member(const FamilyParams& p);

// Matches the sorted minimal generators of H against every slot assignment
// of both family templates and returns the parameters of the first match in
// a fixed deterministic order (kind I before kind II, assignments
// lexicographic); none when H lies in neither family.  Only embedding
// dimension 5 and multiplicity 8 can match.
std::optional<FamilyParams> classify_non_cm_quadratic_5(const NumericalSemigroup& H);

// Parameters u_1..u_n (u_1 >= 3 odd, all positive) of the construction
//   a_1 = 2^n,  a_2 = 2^{n-1} u_1,  2 a_{i+1} = 2^n u_i + a_{i}  (2 <= i <= n),
//   a_{n+2} = a_2 + ... + a_{n+1} - a_1,
// which produces a semigroup of multiplicity 2^n and embedding dimension
// n+2 whose tangent cone is quadratic but not Cohen-Macaulay.
struct ConstructionParams {
    int n = 3;
    std::vector<long long> us;
};

struct Construction {
    std::vector<Elem> order;            // a_1..a_{n+2} as constructed
    NumericalSemigroup H;               // the same values, sorted
    std::vector<Polynomial> relations;  // predicted kernel binomials f_1..f_{n+2}
                                        // in variables numbered by construction order
};

// Error("InvalidParams") on bad parameters (or n+2 exceeding the monomial
// width); Error("NotMinimal") if the values fail to generate minimally.
Construction construct_general(const ConstructionParams& p);

// <2L, ell> for an odd element ell of L, minimalized.
// Error("NotOdd") / Error("NotMember") otherwise.
NumericalSemigroup glue_quadratic(const NumericalSemigroup& L, Elem ell);

// True iff the defining toric ideal needs exactly embdim-1 minimal
// generators, the smallest count possible.
bool is_ci(const NumericalSemigroup& H);

}  // namespace tcone

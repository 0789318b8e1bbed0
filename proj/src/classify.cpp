/* Non-CM quadratic families, the power-of-two construction, gluing, CI test. */

#include "tcone/classify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tcone/errors.hpp"
#include "tcone/tangent_cone.hpp"

namespace tcone {

std::vector<Elem> family_generators(const FamilyParams& p) {
    // Kind I degenerates at u'' = 0 (the third value doubles the fourth),
    // while kind II stays minimal there, so only kind I demands u'' >= 1.
    if (p.u < 1 || p.u_prime < 1 || p.u_dprime < (p.kind == FamilyKind::I ? 1 : 0))
        fail("InvalidParams", "family parameters out of range");
    if (p.u_prime == 1 || p.u_prime % 2 == 0)
        fail("InvalidParams", "u' must be odd and greater than 1");
    const long long u = p.u, v = p.u_prime, w = p.u_dprime;
    if (p.kind == FamilyKind::I)
        return {8, 4 * v, 4 * u + 2 * v, 4 * w + 2 * u + v, 6 * u + 7 * v + 4 * w - 8};
    return {8, 4 * v, 4 * u + 2 * v, 4 * w + 2 * u + 3 * v, 6 * u + 9 * v + 4 * w - 8};
}

NumericalSemigroup family_member(const FamilyParams& p) {
    std::vector<Elem> vals = family_generators(p);
    NumericalSemigroup H = NumericalSemigroup::from_candidates(vals);
    std::sort(vals.begin(), vals.end());
    if (H.generators() != vals) {
        for (Elem v : vals)
            if (!std::binary_search(H.generators().begin(), H.generators().end(), v))
                fail("NotMinimal", "template value " + std::to_string(v) + " is redundant");
        fail("NotMinimal", "template values coincide");
    }
    return H;
}

std::optional<FamilyParams> classify_non_cm_quadratic_5(const NumericalSemigroup& H) {
    if (H.embdim() != 5 || H.multiplicity() != 8) return std::nullopt;
    const auto& g = H.generators();
    for (FamilyKind kind : {FamilyKind::I, FamilyKind::II}) {
        std::array<int, 4> slot{1, 2, 3, 4};  // which sorted generator fills a_2..a_5
        do {
            const long long a2 = g[slot[0]], a3 = g[slot[1]], a4 = g[slot[2]], a5 = g[slot[3]];
            // a_2 = 4u' with u' odd forces a_2 == 4 (mod 8); the rest is exact division.
            if (a2 % 4 != 0) continue;
            const long long up = a2 / 4;
            if (up == 1 || up % 2 == 0) continue;
            const long long r3 = a3 - 2 * up;
            if (r3 <= 0 || r3 % 4 != 0) continue;
            const long long u = r3 / 4;
            const long long r4 = a4 - 2 * u - (kind == FamilyKind::I ? up : 3 * up);
            if (r4 < (kind == FamilyKind::I ? 4 : 0) || r4 % 4 != 0) continue;
            const long long udp = r4 / 4;
            if (a5 == 6 * u + (kind == FamilyKind::I ? 7 : 9) * up + 4 * udp - 8)
                return FamilyParams{kind, u, up, udp};
        } while (std::next_permutation(slot.begin(), slot.end()));
    }
    return std::nullopt;
}

Construction construct_general(const ConstructionParams& p) {
    if (p.n < 3) fail("InvalidParams", "construction needs n >= 3");
    if (p.n + 2 > kMaxVars) fail("InvalidParams", "construction exceeds the monomial width");
    if (static_cast<int>(p.us.size()) != p.n)
        fail("InvalidParams", "construction needs exactly n parameters u_1..u_n");
    for (long long v : p.us)
        if (v < 1) fail("InvalidParams", "construction parameters must be positive");
    if (p.us[0] < 3 || p.us[0] % 2 == 0) fail("InvalidParams", "u_1 must be odd and at least 3");

    const int n = p.n, nv = n + 2;
    std::vector<Elem> a(nv, 0);
    a[0] = 1LL << n;
    a[1] = (1LL << (n - 1)) * p.us[0];
    // 2^{n-i+1} divides a_i, so the recurrence divides exactly while i <= n.
    for (int i = 2; i <= n; ++i) a[i] = ((1LL << n) * p.us[i - 1] + a[i - 1]) / 2;
    long long tail = 0;
    for (int i = 1; i <= n; ++i) tail += a[i];
    a[n + 1] = tail - a[0];

    auto binom = [](Monomial lead, Monomial low) {
        return Polynomial::term(lead, 1) - Polynomial::term(low, 1);
    };
    std::vector<Polynomial> relations;
    Monomial all_mid;  // x_2 ... x_{n+1}
    for (int j = 1; j <= n; ++j) all_mid = mono_mul(all_mid, mono_var(j));
    relations.push_back(binom(mono_mul(mono_var(0), mono_var(nv - 1)), all_mid));
    long long used = 0;
    for (int i = 2; i <= n + 1; ++i) {
        used += p.us[i - 2];
        Monomial low = mono_var(0, static_cast<int>(used - 1));
        for (int j = i; j <= n; ++j) low = mono_mul(low, mono_var(j));
        relations.push_back(binom(mono_mul(mono_var(i - 1), mono_var(nv - 1)), low));
    }
    Monomial last = mono_var(0, static_cast<int>(used - 2));
    for (int j = 2; j <= n; ++j) last = mono_mul(last, mono_var(j - 1));
    relations.push_back(binom(mono_var(nv - 1, 2), last));

    NumericalSemigroup H = NumericalSemigroup::from_candidates(a);
    std::vector<Elem> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (H.generators() != sorted) fail("NotMinimal", "constructed values are not a minimal generating set");
    return Construction{std::move(a), std::move(H), std::move(relations)};
}

NumericalSemigroup glue_quadratic(const NumericalSemigroup& L, Elem ell) {
    if (ell % 2 == 0) fail("NotOdd", "gluing element must be odd");
    if (!L.contains(ell)) fail("NotMember", "gluing element must lie in the semigroup");
    std::vector<Elem> cand;
    cand.reserve(L.generators().size() + 1);
    for (Elem a : L.generators()) cand.push_back(2 * a);
    cand.push_back(ell);
    return NumericalSemigroup::from_candidates(cand);
}

bool is_ci(const NumericalSemigroup& H) {
    Ideal T = toric_ideal(H);
    std::vector<long long> weights(H.generators().begin(), H.generators().end());
    auto minimal = minimalize_generators(T.gens, T.nvars, weights);
    return static_cast<int>(minimal.size()) == H.embdim() - 1;
}

}  // namespace tcone

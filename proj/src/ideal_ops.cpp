#include <algorithm>

#include "tcone/errors.hpp"
#include "tcone/gb.hpp"

/* Ideal arithmetic built on the Groebner engine: intersection and colon via
 * the one-extra-variable trick, saturation via the inverse-variable trick,
 * elimination by block orders, equality through reduced bases, and graded
 * minimalization of generating sets. */

namespace tcone {

namespace {

Ideal reduced(const Ideal& I) {
    return {I.nvars, buchberger(I.gens, MonomialOrder::grevlex(I.nvars))};
}

}  // namespace

Ideal eliminate(const Ideal& I, int k) {
    if (k < 0 || k > I.nvars) fail("InvalidParams", "bad elimination block size");
    auto gb = buchberger(I.gens, MonomialOrder::elim_block(I.nvars, k));
    Ideal out{I.nvars, {}};
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int v = 0; v < k && pure; ++v)
                if (t.m.e[static_cast<size_t>(v)]) pure = false;
        if (pure) out.gens.push_back(g);
    }
    return out;
}

// I cap J = (u*I + (1-u)*J) cap Q[x], with a fresh variable u in front.
Ideal intersect(const Ideal& I, const Ideal& J) {
    if (I.nvars != J.nvars) fail("InvalidParams", "intersect: ring mismatch");
    if (I.nvars + 1 > kMaxVars) fail("InvalidParams", "intersect: too many variables");
    const int n = I.nvars + 1;
    Polynomial u = Polynomial::variable(0);
    Polynomial one_minus_u = Polynomial::constant(1) - u;
    Ideal big{n, {}};
    for (const auto& f : I.gens)
        if (!f.is_zero()) big.gens.push_back(u * f.insert_var(0));
    for (const auto& g : J.gens)
        if (!g.is_zero()) big.gens.push_back(one_minus_u * g.insert_var(0));
    Ideal elim = eliminate(big, 1);
    Ideal out{I.nvars, {}};
    for (const auto& g : elim.gens) out.gens.push_back(g.drop_var(0));
    return reduced(out);
}

// (I : f) = intersect(I, (f)) / f, term by term (exact since every element
// of the intersection is a multiple of f).
Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) fail("InvalidParams", "colon by zero");
    Ideal cap = intersect(I, Ideal{I.nvars, {f}});
    MonomialOrder ord = MonomialOrder::grevlex(I.nvars);
    Ideal out{I.nvars, {}};
    for (const auto& g : cap.gens) out.gens.push_back(divide_exact(g, f, ord));
    return reduced(out);
}

// (I : f^inf) = (I + (u*f - 1)) cap Q[x], with a fresh variable u in front.
Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) fail("InvalidParams", "saturate by zero");
    if (I.nvars + 1 > kMaxVars) fail("InvalidParams", "saturate: too many variables");
    const int n = I.nvars + 1;
    Ideal big{n, {}};
    for (const auto& g : I.gens)
        if (!g.is_zero()) big.gens.push_back(g.insert_var(0));
    big.gens.push_back(Polynomial::variable(0) * f.insert_var(0) - Polynomial::constant(1));
    Ideal elim = eliminate(big, 1);
    Ideal out{I.nvars, {}};
    for (const auto& g : elim.gens) out.gens.push_back(g.drop_var(0));
    return reduced(out);
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    if (A.nvars != B.nvars) fail("InvalidParams", "ideal_equal: ring mismatch");
    // the reduced basis is unique for a fixed order
    return reduced(A).gens == reduced(B).gens;
}

std::vector<Polynomial> minimalize_generators(const std::vector<Polynomial>& cands, int nvars,
                                              const std::vector<long long>& weights) {
    MonomialOrder ord = MonomialOrder::grevlex(nvars);
    auto wdeg = [&](const Polynomial& f) {
        return weights.empty() ? static_cast<long long>(f.degree()) : f.weighted_degree(weights);
    };
    std::vector<Polynomial> sorted;
    for (const auto& f : cands)
        if (!f.is_zero()) sorted.push_back(f);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
        long long wa = wdeg(a), wb = wdeg(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return to_string(a) < to_string(b);
    });
    // Greedy in ascending degree: a candidate is redundant iff it lies in the
    // ideal of the earlier survivors (Nakayama, for graded input).
    std::vector<Polynomial> kept;
    std::vector<Polynomial> kept_gb;
    for (const auto& f : sorted) {
        Polynomial r = normal_form(f, kept_gb, ord);
        if (r.is_zero()) continue;
        kept.push_back(r.monic(ord));
        kept_gb = buchberger(kept, ord);
    }
    return kept;
}

}  // namespace tcone

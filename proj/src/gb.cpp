#include "tcone/gb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tcone/errors.hpp"

namespace tcone {

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& tf = f.leading_term(ord);
    const Term& tg = g.leading_term(ord);
    Monomial l = mono_lcm(tf.m, tg.m);
    Polynomial s = f.mul_monomial(mono_div(l, tf.m)).scaled(1 / tf.c);
    s.add_scaled(-1 / tg.c, mono_div(l, tg.m), g);
    return s;
}

namespace {

int ecart(const Polynomial& f, const MonomialOrder& ord) {
    return f.degree() - f.leading_term(ord).m.degree();
}

// Mora's weak normal form with ecart-minimal reducer selection.  The
// intermediate remainders join the reducer set, which is what makes the
// loop terminate for local orders.
Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const MonomialOrder& ord) {
    Polynomial h = f;
    std::vector<Polynomial> T = G;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term(ord);
        int best = -1, best_ecart = 0;
        for (size_t i = 0; i < T.size(); ++i) {
            if (!mono_divides(T[i].leading_term(ord).m, lt.m)) continue;
            int e = ecart(T[i], ord);
            if (best < 0 || e < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = e;
            }
        }
        if (best < 0) return h;
        if (best_ecart > ecart(h, ord)) T.push_back(h);
        const Term& ltg = T[static_cast<size_t>(best)].leading_term(ord);
        h.add_scaled(-lt.c / ltg.c, mono_div(lt.m, ltg.m), T[static_cast<size_t>(best)]);
    }
    return h;
}

Polynomial global_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& ord) {
    Polynomial r;  // accumulated remainder, no term divisible by any lt(G)
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term lt = h.leading_term(ord);
        bool reduced = false;
        for (const auto& g : G) {
            const Term& ltg = g.leading_term(ord);
            if (mono_divides(ltg.m, lt.m)) {
                h.add_scaled(-lt.c / ltg.c, mono_div(lt.m, ltg.m), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r = r + Polynomial::term(lt.m, lt.c);
            h = h - Polynomial::term(lt.m, lt.c);
        }
    }
    return r;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
    std::vector<Polynomial> nz;
    nz.reserve(G.size());
    for (const auto& g : G)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty() || f.is_zero()) return f;
    return ord.is_global() ? global_normal_form(f, nz, ord) : mora_normal_form(f, nz, ord);
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

// Deterministic normal selection: smallest lcm degree, then storage order
// of the lcm, then indices.
bool pair_before(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_storage_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

std::vector<Polynomial> monic_nonzero(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(ord));
    return G;
}

// Shared Buchberger loop; criteria are only enabled for global orders.
std::vector<Polynomial> completion(std::vector<Polynomial> G, const MonomialOrder& ord) {
    const bool global = ord.is_global();
    std::vector<Pair> P;
    auto push_pairs = [&](int j) {
        const Monomial& lj = G[static_cast<size_t>(j)].leading_term(ord).m;
        for (int i = 0; i < j; ++i) {
            Monomial l = mono_lcm(G[static_cast<size_t>(i)].leading_term(ord).m, lj);
            P.push_back({i, j, l, l.degree()});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    auto in_queue = [&](int a, int b) {
        for (const auto& p : P)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!P.empty()) {
        size_t pick = 0;
        for (size_t k = 1; k < P.size(); ++k)
            if (pair_before(P[k], P[pick])) pick = k;
        Pair p = P[pick];
        P.erase(P.begin() + static_cast<long>(pick));

        const Monomial& li = G[static_cast<size_t>(p.i)].leading_term(ord).m;
        const Monomial& lj = G[static_cast<size_t>(p.j)].leading_term(ord).m;
        if (global) {
            if (mono_coprime(li, lj)) continue;  // product criterion
            bool chained = false;                // chain criterion
            for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
                if (k == p.i || k == p.j) continue;
                if (mono_divides(G[static_cast<size_t>(k)].leading_term(ord).m, p.lcm) &&
                    !in_queue(p.i, k) && !in_queue(p.j, k))
                    chained = true;
            }
            if (chained) continue;
        }

        Polynomial s = spoly(G[static_cast<size_t>(p.i)], G[static_cast<size_t>(p.j)], ord);
        Polynomial h = normal_form(s, G, ord);
        if (!h.is_zero()) {
            G.push_back(h.monic(ord));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }
    return G;
}

// Keep only elements whose leading monomial is not divisible by another
// kept one (ties keep the earlier element).
std::vector<Polynomial> lt_minimalize(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
    std::vector<Polynomial> out;
    for (size_t i = 0; i < G.size(); ++i) {
        const Monomial& li = G[i].leading_term(ord).m;
        bool covered = false;
        for (size_t j = 0; j < G.size() && !covered; ++j) {
            if (i == j) continue;
            const Monomial& lj = G[j].leading_term(ord).m;
            if (lj == li ? j < i : mono_divides(lj, li)) covered = true;
        }
        if (!covered) out.push_back(G[i]);
    }
    return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    if (!ord.is_global()) fail("InvalidParams", "buchberger requires a global order");
    std::vector<Polynomial> G = monic_nonzero(gens, ord);
    if (G.empty()) return G;
    G = completion(std::move(G), ord);
    G = lt_minimalize(G, ord);
    // tail interreduction: each element fully reduced against the others
    for (size_t i = 0; i < G.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < G.size(); ++j)
            if (j != i) others.push_back(G[j]);
        G[i] = normal_form(G[i], others, ord).monic(ord);
    }
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.cmp(a.leading_term(ord).m, b.leading_term(ord).m) < 0;
    });
    return G;
}

std::vector<Polynomial> mora_standard_basis(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& ord) {
    std::vector<Polynomial> G = monic_nonzero(gens, ord);
    if (G.empty()) return G;
    G = completion(std::move(G), ord);
    G = lt_minimalize(G, ord);
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.cmp(a.leading_term(ord).m, b.leading_term(ord).m) < 0;
    });
    return G;
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    return normal_form(f, gb, ord).is_zero();
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f, const MonomialOrder& ord) {
    Polynomial q, r = g;
    const Term& ltf = f.leading_term(ord);
    while (!r.is_zero()) {
        const Term& ltr = r.leading_term(ord);
        if (!mono_divides(ltf.m, ltr.m)) fail("Internal", "inexact polynomial division");
        mpq_class c = ltr.c / ltf.c;
        Monomial m = mono_div(ltr.m, ltf.m);
        q = q + Polynomial::term(m, c);
        r.add_scaled(-c, m, f);
    }
    return q;
}

}  // namespace tcone

#include "tcone/tangent_cone.hpp"

#include <algorithm>
#include <numeric>

#include "tcone/errors.hpp"

/* Tangent-cone pipeline: toric ideal -> initial forms -> graded invariants,
 * with every semigroup-theoretic invariant recomputed combinatorially. */

namespace tcone {

namespace {

long long weight_of(const Monomial& m, const std::vector<Elem>& a) {
    long long w = 0;
    for (size_t i = 0; i < a.size(); ++i) w += static_cast<long long>(m.e[i]) * a[i];
    return w;
}

std::vector<Polynomial> leading_monomials(const std::vector<Polynomial>& gb,
                                          const MonomialOrder& ord) {
    std::vector<Polynomial> lts;
    lts.reserve(gb.size());
    for (const auto& f : gb) lts.push_back(Polynomial::term(f.leading_term(ord).m, 1));
    return lts;
}

std::pair<ZPoly, int> quotient_h_polynomial(const Ideal& I) {
    auto ord = MonomialOrder::grevlex(I.nvars);
    auto gb = buchberger(I.gens, ord);
    return hilbert_h_polynomial(hilbert_numerator(leading_monomials(gb, ord), I.nvars), I.nvars);
}

bool max_degree_at_most(const std::vector<Polynomial>& fs, int d) {
    for (const auto& f : fs)
        if (f.degree() > d) return false;
    return true;
}

}  // namespace

Ideal toric_ideal_of(const std::vector<Elem>& gens) {
    if (gens.empty()) fail("Empty", "toric_ideal_of: no generators");
    Elem g = 0;
    for (Elem a : gens) {
        if (a <= 0) fail("InvalidParams", "toric_ideal_of: nonpositive generator");
        g = std::gcd(g, a);
    }
    int n = static_cast<int>(gens.size());
    if (n + 1 > kMaxVars) fail("InvalidParams", "toric_ideal_of: too many generators");

    std::vector<Polynomial> ker;
    for (int i = 0; i < n; ++i) {
        Elem e = gens[static_cast<size_t>(i)] / g;
        if (e > 0xffff) fail("InvalidParams", "toric_ideal_of: generator too large");
        ker.push_back(Polynomial::term(mono_var(i + 1), 1) +
                      Polynomial::term(mono_var(0, static_cast<int>(e)), -1));
    }
    Ideal elim = eliminate(Ideal{n + 1, ker}, 1);
    Ideal out{n, {}};
    for (const auto& f : elim.gens) out.gens.push_back(f.drop_var(0));
    return out;
}

Ideal toric_ideal(const NumericalSemigroup& H) { return toric_ideal_of(H.generators()); }

bool binomial_in_toric(const Polynomial& f, const std::vector<Elem>& gens) {
    if (f.is_zero()) return true;
    if (f.size() != 2) fail("InvalidParams", "binomial_in_toric: not a binomial");
    const auto& t0 = f.terms()[0];
    const auto& t1 = f.terms()[1];
    if (t0.c + t1.c != 0) fail("InvalidParams", "binomial_in_toric: not a pure difference");
    for (size_t i = gens.size(); i < kMaxVars; ++i)
        if (t0.m.e[i] || t1.m.e[i]) fail("InvalidParams", "binomial_in_toric: variable outside ring");
    return weight_of(t0.m, gens) == weight_of(t1.m, gens);
}

Ideal initial_forms_ideal(const Ideal& toric) {
    auto sb = mora_standard_basis(toric.gens, MonomialOrder::negdegrevlex(toric.nvars));
    std::vector<Polynomial> lows;
    lows.reserve(sb.size());
    for (const auto& f : sb) lows.push_back(f.lowest_form());
    return {toric.nvars, minimalize_generators(lows, toric.nvars)};
}

bool generated_by_quadrics(const Ideal& istar) {
    for (const auto& f : istar.gens)
        if (!f.is_homogeneous() || f.degree() != 2) return false;
    return true;
}

std::vector<long long> h_vector(const NumericalSemigroup& H, const Ideal& istar) {
    auto [h, dim] = quotient_h_polynomial(istar);
    if (dim != 1) fail("OracleMismatch", "h_vector: tangent cone dimension " + std::to_string(dim));
    std::vector<long long> hv;
    hv.reserve(h.size());
    for (const auto& c : h) {
        if (!c.fits_slong_p()) fail("Internal", "h_vector: coefficient overflow");
        hv.push_back(c.get_si());
    }
    if (hv != H.h_vector_arith())
        fail("OracleMismatch", "h_vector: series and order filtration disagree for " + H.key());
    return hv;
}

bool cohen_macaulay(const NumericalSemigroup& H, const Ideal& istar) {
    bool regular = ideal_equal(colon(istar, Polynomial::variable(0)), istar);
    bool additive = H.cm_tangent_cone().cm;
    if (regular != additive)
        fail("OracleMismatch", "cohen_macaulay: colon and additive certificate disagree for " + H.key());
    return regular;
}

bool quadratic_gb_revlex(const Ideal& istar) {
    if (!generated_by_quadrics(istar)) fail("NotQuadratic", "quadratic_gb_revlex: input not quadratic");
    int n = istar.nvars;
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> rot(id.begin() + 1, id.end());
    rot.push_back(0);
    for (const auto& prio : {id, rot}) {
        auto gb = buchberger(istar.gens, MonomialOrder::grevlex_perm(n, prio));
        if (max_degree_at_most(gb, 2)) return true;
    }
    return false;
}

std::optional<std::vector<int>> quadratic_gb_revlex_any(const Ideal& istar) {
    if (!generated_by_quadrics(istar)) fail("NotQuadratic", "quadratic_gb_revlex_any: input not quadratic");
    int n = istar.nvars;
    if (n > 7) fail("InvalidParams", "quadratic_gb_revlex_any: too many variables");
    std::vector<int> prio(static_cast<size_t>(n));
    std::iota(prio.begin(), prio.end(), 0);
    do {
        auto gb = buchberger(istar.gens, MonomialOrder::grevlex_perm(n, prio));
        if (max_degree_at_most(gb, 2)) return prio;
    } while (std::next_permutation(prio.begin(), prio.end()));
    return std::nullopt;
}

Ideal artinian_reduction(const NumericalSemigroup& H, const Ideal& istar) {
    if (!cohen_macaulay(H, istar))
        fail("NotRegular", "artinian_reduction: x1 is a zerodivisor on the tangent cone");
    std::vector<Polynomial> image;
    for (const auto& f : istar.gens) {
        Polynomial g = f.substitute_zero(0);
        if (!g.is_zero()) image.push_back(g.drop_var(0));
    }
    int m = istar.nvars - 1;
    Ideal red{m, minimalize_generators(image, m)};

    auto [h, dim] = quotient_h_polynomial(red);
    std::vector<long long> hv;
    for (const auto& c : h) hv.push_back(c.get_si());
    if (dim != 0 || hv != h_vector(H, istar))
        fail("OracleMismatch", "artinian_reduction: quotient is not the expected Artinian ring");
    return red;
}

TangentCone analyze_tangent_cone(const NumericalSemigroup& H) {
    TangentCone out{H, toric_ideal(H), {}, false, {}, false, false};
    out.istar = initial_forms_ideal(out.toric);
    out.quadratic = generated_by_quadrics(out.istar);
    out.h = h_vector(H, out.istar);
    out.cm = cohen_macaulay(H, out.istar);
    out.qgb_revlex = out.quadratic && quadratic_gb_revlex(out.istar);
    return out;
}

}  // namespace tcone

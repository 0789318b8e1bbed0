/*
 * Koszulness certificates: positivity of the inverted h-polynomial series,
 * Koszul filtrations and Groebner flags by exact ideal arithmetic, the
 * any-order quadratic Groebner basis decision via leading-monomial-set
 * enumeration with Fourier-Motzkin realizability, and Macaulay-type growth
 * bounds on h-vectors.
 */

#include "tcone/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tcone/errors.hpp"

namespace tcone {

namespace {

void fill_monomials(int nvars, int var, int rem, Monomial& cur, std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.e[static_cast<size_t>(var)] = static_cast<uint16_t>(rem);
        out.push_back(cur);
        cur.e[static_cast<size_t>(var)] = 0;
        return;
    }
    for (int k = rem; k >= 0; --k) {
        cur.e[static_cast<size_t>(var)] = static_cast<uint16_t>(k);
        fill_monomials(nvars, var + 1, rem - k, cur, out);
    }
    cur.e[static_cast<size_t>(var)] = 0;
}

// All monomials of total degree d, descending under the storage order.
std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    fill_monomials(nvars, 0, d, cur, out);
    return out;
}

int column_of(const Monomial& m, const std::vector<Monomial>& cols) {
    for (size_t j = 0; j < cols.size(); ++j)
        if (cols[j] == m) return static_cast<int>(j);
    fail("Internal", "monomial outside the expected degree slice");
}

std::vector<std::vector<mpq_class>> poly_matrix(const std::vector<Polynomial>& ps,
                                                const std::vector<Monomial>& cols) {
    std::vector<std::vector<mpq_class>> rows;
    rows.reserve(ps.size());
    for (const auto& p : ps) {
        std::vector<mpq_class> row(cols.size(), 0);
        for (const auto& t : p.terms()) row[static_cast<size_t>(column_of(t.m, cols))] = t.c;
        rows.push_back(std::move(row));
    }
    return rows;
}

// In-place reduced row echelon form; returns the pivot columns and drops the
// zero rows, so the surviving rows are a triangular basis of the row space.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int ncols = static_cast<int>(rows[0].size());
    size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][static_cast<size_t>(c)] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        mpq_class lead = rows[r][static_cast<size_t>(c)];
        for (int j = c; j < ncols; ++j) rows[r][static_cast<size_t>(j)] /= lead;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][static_cast<size_t>(c)] == 0) continue;
            mpq_class f = rows[i][static_cast<size_t>(c)];
            for (int j = c; j < ncols; ++j)
                rows[i][static_cast<size_t>(j)] -= f * rows[r][static_cast<size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

// Interior point of the homogeneous strict system sum_i row[i]*w_i > 0, by
// Fourier-Motzkin elimination (variables n-1 down to 0) with exact back
// substitution.  Empty point means infeasible.
std::vector<mpq_class> fm_interior(std::vector<std::vector<mpq_class>> sys, int n, bool& feasible) {
    feasible = false;
    auto zero_row = [n](const std::vector<mpq_class>& r) {
        for (int j = 0; j < n; ++j)
            if (r[static_cast<size_t>(j)] != 0) return false;
        return true;
    };
    for (const auto& r : sys)
        if (zero_row(r)) return {};
    std::vector<std::vector<std::vector<mpq_class>>> level(static_cast<size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        level[static_cast<size_t>(k)] = sys;
        std::vector<std::vector<mpq_class>> next;
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < sys.size(); ++i) {
            const mpq_class& c = sys[i][static_cast<size_t>(k)];
            if (c > 0)
                pos.push_back(i);
            else if (c < 0)
                neg.push_back(i);
            else
                next.push_back(sys[i]);
        }
        for (size_t p : pos) {
            for (size_t q : neg) {
                std::vector<mpq_class> r(static_cast<size_t>(n), 0);
                mpq_class cp = sys[p][static_cast<size_t>(k)];
                mpq_class cq = -sys[q][static_cast<size_t>(k)];
                bool allz = true;
                for (int j = 0; j < k; ++j) {
                    r[static_cast<size_t>(j)] = sys[p][static_cast<size_t>(j)] / cp +
                                                sys[q][static_cast<size_t>(j)] / cq;
                    if (r[static_cast<size_t>(j)] != 0) allz = false;
                }
                if (allz) return {};  // derived 0 > 0
                next.push_back(std::move(r));
            }
        }
        sys = std::move(next);
    }
    std::vector<mpq_class> w(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        bool has_lb = false, has_ub = false;
        mpq_class lb, ub;
        for (const auto& row : level[static_cast<size_t>(k)]) {
            const mpq_class& c = row[static_cast<size_t>(k)];
            if (c == 0) continue;
            mpq_class rest = 0;
            for (int j = 0; j < k; ++j) rest += row[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
            mpq_class bound = -rest / c;
            if (c > 0) {
                if (!has_lb || bound > lb) lb = bound, has_lb = true;
            } else {
                if (!has_ub || bound < ub) ub = bound, has_ub = true;
            }
        }
        if (has_lb && has_ub) {
            if (!(lb < ub)) fail("Internal", "inconsistent bounds after elimination");
            w[static_cast<size_t>(k)] = (lb + ub) / 2;
        } else if (has_lb) {
            w[static_cast<size_t>(k)] = lb + 1;
        } else if (has_ub) {
            w[static_cast<size_t>(k)] = ub - 1;
        }
    }
    feasible = true;
    return w;
}

// Clears denominators and shifts so the minimum is 1; adding a constant to
// every weight is neutral for comparisons of equal-degree monomials.
std::vector<long long> integral_weights(const std::vector<mpq_class>& w) {
    mpz_class den = 1;
    for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(w.size());
    for (const auto& x : w) z.push_back(x.get_num() * (den / x.get_den()));
    mpz_class mn = z[0];
    for (const auto& v : z) mn = std::min(mn, v);
    std::vector<long long> out;
    out.reserve(z.size());
    for (auto& v : z) {
        v += 1 - mn;
        if (!v.fits_slong_p()) fail("Internal", "weight overflow");
        out.push_back(v.get_si());
    }
    return out;
}

std::vector<int> canon_member(std::vector<int> m, int nvars) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (int i : m)
        if (i < 1 || i > nvars) fail("InvalidParams", "variable index out of range in filtration family");
    return m;
}

std::string fmt_member(const std::vector<int>& m) {
    if (m.empty()) return "(0)";
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << 'x' << m[i];
    os << ')';
    return os.str();
}

Ideal ambient_ideal(const Ideal& J, const std::vector<int>& member) {
    Ideal A{J.nvars, J.gens};
    for (int i : member) A.gens.push_back(Polynomial::variable(i - 1));
    return A;
}

}  // namespace

SeriesNegativity poincare_negativity(const std::vector<long long>& h, int truncation) {
    if (h.empty() || h[0] != 1) fail("InvalidParams", "h-polynomial must have constant term 1");
    for (long long v : h)
        if (v < 0) fail("InvalidParams", "h-polynomial coefficients must be nonnegative");
    if (truncation < 0) fail("InvalidParams", "negative truncation");
    SeriesNegativity out;
    out.coeffs.push_back(1);
    for (int k = 1; k <= truncation; ++k) {
        // 1/h(-t): c_k = sum_{j>=1} (-1)^{j+1} h_j c_{k-j}
        mpz_class c = 0;
        for (int j = 1; j < static_cast<int>(h.size()) && j <= k; ++j) {
            mpz_class t = mpz_class(static_cast<long>(h[static_cast<size_t>(j)])) *
                          out.coeffs[static_cast<size_t>(k - j)];
            if (j % 2 == 1)
                c += t;
            else
                c -= t;
        }
        out.coeffs.push_back(c);
        if (c < 0) {
            out.found = true;
            out.index = k;
            out.value = c;
            return out;
        }
    }
    return out;
}

FiltrationCheck verify_koszul_filtration(const Ideal& J, const std::vector<std::vector<int>>& family) {
    int n = J.nvars;
    std::vector<std::vector<int>> fam;
    fam.reserve(family.size());
    for (const auto& m : family) fam.push_back(canon_member(m, n));
    std::sort(fam.begin(), fam.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());

    FiltrationCheck res;
    auto has = [&fam](const std::vector<int>& m) {
        return std::find(fam.begin(), fam.end(), m) != fam.end();
    };
    if (!has({})) {
        res.failure = "family lacks the zero ideal";
        return res;
    }
    std::vector<int> full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    if (!has(full)) {
        res.failure = "family lacks the ideal of all variables";
        return res;
    }

    std::vector<Ideal> amb;
    amb.reserve(fam.size());
    for (const auto& m : fam) amb.push_back(ambient_ideal(J, m));

    for (size_t mi = 0; mi < fam.size(); ++mi) {
        if (fam[mi].empty()) continue;
        bool done = false;
        // candidate subs largest first, then the canonical family order
        for (size_t sz = fam[mi].size(); sz-- > 0 && !done;) {
            for (size_t si = 0; si < fam.size() && !done; ++si) {
                if (fam[si].size() != sz) continue;
                if (!std::includes(fam[mi].begin(), fam[mi].end(), fam[si].begin(), fam[si].end()))
                    continue;
                std::vector<int> extra;
                std::set_difference(fam[mi].begin(), fam[mi].end(), fam[si].begin(), fam[si].end(),
                                    std::back_inserter(extra));
                for (int x : extra) {
                    Ideal sum = amb[si];
                    sum.gens.push_back(Polynomial::variable(x - 1));
                    if (!ideal_equal(sum, amb[mi])) continue;
                    Ideal quot = colon(amb[si], Polynomial::variable(x - 1));
                    for (size_t ci = 0; ci < fam.size(); ++ci) {
                        if (!ideal_equal(quot, amb[ci])) continue;
                        res.steps.push_back({fam[mi], fam[si], x, fam[ci]});
                        done = true;
                        break;
                    }
                    if (done) break;
                }
            }
        }
        if (!done) {
            res.steps.clear();
            res.failure = "no admissible step for member " + fmt_member(fam[mi]);
            return res;
        }
    }
    res.valid = true;
    return res;
}

std::optional<std::vector<int>> grobner_flag_search(const Ideal& J) {
    int n = J.nvars;
    if (n < 1 || n > 6) fail("InvalidParams", "flag search supports 1..6 variables");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<std::vector<int>> fam;
        fam.push_back({});
        std::vector<int> cur;
        for (int i : perm) {
            cur.push_back(i);
            std::vector<int> s = cur;
            std::sort(s.begin(), s.end());
            fam.push_back(std::move(s));
        }
        if (verify_koszul_filtration(J, fam).valid) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

QuadraticGBDecision quadratic_gb_nonexistence(const Ideal& J) {
    int n = J.nvars;
    if (n < 1 || J.gens.empty()) fail("NotQuadraticInput", "need at least one generator");
    for (const auto& g : J.gens)
        if (g.is_zero() || !g.is_homogeneous() || g.degree() != 2)
            fail("NotQuadraticInput", "generators must be homogeneous of degree 2");

    std::vector<Monomial> m2 = monomials_of_degree(n, 2);
    std::vector<Monomial> m3 = monomials_of_degree(n, 3);
    auto basis = poly_matrix(J.gens, m2);
    rref(basis);
    int q = static_cast<int>(basis.size());

    std::vector<Polynomial> cubics;
    for (int v = 0; v < n; ++v)
        for (const auto& g : J.gens) cubics.push_back(g.mul_monomial(mono_var(v)));
    auto cubic_basis = poly_matrix(cubics, m3);
    auto cubic_pivots = rref(cubic_basis);
    int dim3 = static_cast<int>(cubic_basis.size());

    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), m2.size(), static_cast<unsigned long>(q));
    if (n > 6 || total > 200000) fail("InvalidParams", "leading-monomial search space too large");

    QuadraticGBDecision out;
    out.nonexistent = true;
    std::vector<Monomial> obstructions;

    std::vector<int> comb(static_cast<size_t>(q));
    std::iota(comb.begin(), comb.end(), 0);
    int ncols = static_cast<int>(m2.size());
    bool more = q <= ncols;
    while (more) {
        // columns reordered: candidate leading set first, complement after
        std::vector<int> comp;
        {
            std::vector<bool> in(m2.size(), false);
            for (int c : comb) in[static_cast<size_t>(c)] = true;
            for (int c = 0; c < ncols; ++c)
                if (!in[static_cast<size_t>(c)]) comp.push_back(c);
        }
        std::vector<std::vector<mpq_class>> mat(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            auto& row = mat[i];
            row.reserve(m2.size());
            for (int c : comb) row.push_back(basis[i][static_cast<size_t>(c)]);
            for (int c : comp) row.push_back(basis[i][static_cast<size_t>(c)]);
        }
        auto piv = rref(mat);
        bool realizable = static_cast<int>(piv.size()) == q;
        for (int p : piv) realizable = realizable && p < q;
        if (realizable) {
            // pivot must beat every tail monomial in weight
            std::vector<std::vector<mpq_class>> constraints;
            for (size_t i = 0; i < mat.size(); ++i) {
                const Monomial& lead = m2[static_cast<size_t>(comb[static_cast<size_t>(piv[i])])];
                for (int j = q; j < ncols; ++j) {
                    if (mat[i][static_cast<size_t>(j)] == 0) continue;
                    const Monomial& tail = m2[static_cast<size_t>(comp[static_cast<size_t>(j - q)])];
                    std::vector<mpq_class> d(static_cast<size_t>(n));
                    for (int v = 0; v < n; ++v)
                        d[static_cast<size_t>(v)] =
                            static_cast<long>(lead.e[static_cast<size_t>(v)]) -
                            static_cast<long>(tail.e[static_cast<size_t>(v)]);
                    constraints.push_back(std::move(d));
                }
            }
            bool feasible = false;
            auto w = fm_interior(std::move(constraints), n, feasible);
            if (feasible) {
                int covered = 0;
                for (const auto& m : m3)
                    for (int c : comb)
                        if (mono_divides(m2[static_cast<size_t>(c)], m)) {
                            ++covered;
                            break;
                        }
                if (covered == dim3) {
                    auto weights = integral_weights(w);
                    auto ord = MonomialOrder::weighted(n, weights);
                    for (const auto& f : buchberger(J.gens, ord))
                        if (f.degree() > 2) fail("Internal", "witness order failed verification");
                    out.nonexistent = false;
                    out.order_weights = weights;
                    out.obstructions.clear();
                    return out;
                }
                // canonical witness against every order realizing this
                // leading set: prefer a degree-3 monomial lying in the ideal
                // yet escaping the leading set's multiples
                auto escapes = [&](const Monomial& t) {
                    for (int c : comb)
                        if (mono_divides(m2[static_cast<size_t>(c)], t)) return false;
                    return true;
                };
                bool witnessed = false;
                for (const auto& t : m3) {
                    if (!escapes(t)) continue;
                    std::vector<mpq_class> v(m3.size(), 0);
                    v[static_cast<size_t>(column_of(t, m3))] = 1;
                    for (size_t i = 0; i < cubic_basis.size(); ++i) {
                        const mpq_class& c = v[static_cast<size_t>(cubic_pivots[i])];
                        if (c == 0) continue;
                        mpq_class f = c;
                        for (size_t j = 0; j < m3.size(); ++j) v[j] -= f * cubic_basis[i][j];
                    }
                    bool member = true;
                    for (const auto& c : v) member = member && c == 0;
                    if (member) {
                        obstructions.push_back(t);
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed) {
                    // fall back to the first basis element of the degree-3
                    // slice supported entirely off the leading set's multiples
                    std::vector<int> c3, rest;
                    for (int c = 0; c < static_cast<int>(m3.size()); ++c)
                        (escapes(m3[static_cast<size_t>(c)]) ? rest : c3).push_back(c);
                    int ndiv = static_cast<int>(c3.size());
                    c3.insert(c3.end(), rest.begin(), rest.end());
                    std::vector<std::vector<mpq_class>> mat3(cubic_basis.size());
                    for (size_t i = 0; i < cubic_basis.size(); ++i) {
                        mat3[i].reserve(m3.size());
                        for (int c : c3) mat3[i].push_back(cubic_basis[i][static_cast<size_t>(c)]);
                    }
                    for (int p : rref(mat3)) {
                        if (p < ndiv) continue;
                        obstructions.push_back(m3[static_cast<size_t>(c3[static_cast<size_t>(p)])]);
                        witnessed = true;
                        break;
                    }
                    if (!witnessed) fail("Internal", "failing leading set without witness");
                }
            }
        }
        // next q-subset of the degree-2 monomials
        int i = q - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == ncols - q + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < q; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }

    std::sort(obstructions.begin(), obstructions.end(),
              [](const Monomial& a, const Monomial& b) { return mono_storage_cmp(a, b) > 0; });
    obstructions.erase(std::unique(obstructions.begin(), obstructions.end()), obstructions.end());
    out.obstructions = std::move(obstructions);
    return out;
}

std::vector<std::pair<long long, int>> macaulay_decomposition(long long value, int m) {
    if (value < 0) fail("InvalidParams", "negative value");
    if (m < 1) fail("InvalidParams", "decomposition degree must be positive");
    std::vector<std::pair<long long, int>> rep;
    mpz_class rem = static_cast<long>(value);
    long long prev_top = -1;
    for (int i = m; i >= 1 && rem > 0; --i) {
        long long b = i;
        while (true) {
            mpz_class nxt;
            mpz_bin_uiui(nxt.get_mpz_t(), static_cast<unsigned long>(b + 1),
                         static_cast<unsigned long>(i));
            if (nxt > rem) break;
            ++b;
        }
        if (prev_top >= 0 && b >= prev_top) fail("Internal", "tops not strictly decreasing");
        prev_top = b;
        mpz_class cur;
        mpz_bin_uiui(cur.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(i));
        rem -= cur;
        rep.emplace_back(b, i);
    }
    if (rem != 0) fail("Internal", "greedy decomposition left a remainder");
    return rep;
}

GrowthBound growth_bound_check(const std::vector<long long>& h) {
    if (h.empty() || h[0] != 1) fail("InvalidParams", "h-vector must start with 1");
    for (long long v : h)
        if (v < 0) fail("InvalidParams", "h-vector entries must be nonnegative");
    for (int m = 1; m + 1 < static_cast<int>(h.size()); ++m) {
        mpz_class bound = 0;
        for (auto [b, i] : macaulay_decomposition(h[static_cast<size_t>(m)], m)) {
            mpz_class t;
            mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(b),
                         static_cast<unsigned long>(i + 1));
            bound += t;
        }
        if (mpz_class(static_cast<long>(h[static_cast<size_t>(m + 1)])) > bound) {
            GrowthBound out;
            out.ok = false;
            out.failed_index = m + 1;
            if (!bound.fits_slong_p()) fail("Internal", "bound overflow");
            out.bound = bound.get_si();
            return out;
        }
    }
    return {};
}

KoszulAssessment assess_koszul(bool quadratic, bool cm, bool has_quadratic_gb, bool family_match,
                               const std::vector<long long>& h, int truncation) {
    if (!quadratic) return {KoszulVerdict::NotKoszul, "not-quadratic", -1};
    if (has_quadratic_gb || family_match) return {KoszulVerdict::Koszul, "g-quadratic", -1};
    if (cm) {
        auto neg = poincare_negativity(h, truncation);
        if (neg.found) return {KoszulVerdict::NotKoszul, "poincare-negativity", neg.index};
    }
    return {KoszulVerdict::Unknown, "none", -1};
}

}  // namespace tcone

#include <algorithm>

#include "tcone/errors.hpp"
#include "tcone/gb.hpp"

/* Hilbert series of monomial quotients by pivot splitting, plus the little
 * univariate integer-polynomial algebra the numerators live in. */

namespace tcone {

void zpoly_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zpoly_trim(r);
    return r;
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zpoly_trim(r);
    return r;
}

ZPoly zpoly_shift(const ZPoly& a, int k) {
    if (a.empty()) return {};
    ZPoly r(a.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

namespace {

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Drop monomials divisible by another one in the list.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return mono_storage_cmp(a, b) < 0;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool covered = false;
        for (const auto& k : out)
            if (mono_divides(k, m)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(m);
    }
    return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens) {
    gens = minimal_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};  // unit ideal, zero quotient

    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!mono_coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
        ZPoly r{1};
        for (const auto& m : gens) {
            ZPoly f(static_cast<size_t>(m.degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<size_t>(m.degree())] -= 1;
            r = zpoly_mul(r, f);
        }
        return r;
    }

    // pivot x_v^e: v in the most generators, e the least positive exponent
    int v = 0, occ = -1;
    for (int k = 0; k < kMaxVars; ++k) {
        int c = 0;
        for (const auto& m : gens)
            if (m.e[static_cast<size_t>(k)]) ++c;
        if (c > occ) {
            occ = c;
            v = k;
        }
    }
    int e = 0;
    for (const auto& m : gens) {
        int x = m.e[static_cast<size_t>(v)];
        if (x && (e == 0 || x < e)) e = x;
    }

    // K(I) = K(I + (p)) + t^e * K(I : p)
    std::vector<Monomial> plus, quot;
    plus.push_back(mono_var(v, e));
    for (const auto& m : gens) {
        if (m.e[static_cast<size_t>(v)] < e) plus.push_back(m);
        Monomial q = m;
        q.e[static_cast<size_t>(v)] =
            static_cast<uint16_t>(std::max(0, q.e[static_cast<size_t>(v)] - e));
        quot.push_back(q);
    }
    return zpoly_add(numerator_rec(std::move(plus)), zpoly_shift(numerator_rec(std::move(quot)), e));
}

mpz_class zpoly_at_one(const ZPoly& a) {
    mpz_class s = 0;
    for (const auto& c : a) s += c;
    return s;
}

}  // namespace

ZPoly hilbert_numerator(const std::vector<Polynomial>& monomial_gens, int nvars) {
    std::vector<Monomial> ms;
    for (const auto& f : monomial_gens) {
        if (f.is_zero()) continue;
        if (!f.is_monomial()) fail("NotMonomial", "hilbert_numerator: generator " + to_string(f));
        for (int v = nvars; v < kMaxVars; ++v)
            if (f.terms()[0].m.e[static_cast<size_t>(v)])
                fail("InvalidParams", "hilbert_numerator: variable outside ring");
        ms.push_back(f.terms()[0].m);
    }
    return numerator_rec(std::move(ms));
}

ZPoly divide_one_minus_t(const ZPoly& N, int k) {
    ZPoly h = N;
    zpoly_trim(h);
    for (int step = 0; step < k; ++step) {
        if (zpoly_at_one(h) != 0) fail("Internal", "division by 1-t is not exact");
        // N = (1-t) Q  <=>  Q_j = N_0 + ... + N_j
        ZPoly q;
        mpz_class run = 0;
        for (size_t j = 0; j + 1 < h.size(); ++j) {
            run += h[j];
            q.push_back(run);
        }
        zpoly_trim(q);
        h = std::move(q);
    }
    return h;
}

std::pair<ZPoly, int> hilbert_h_polynomial(const ZPoly& N, int nvars) {
    ZPoly h = N;
    zpoly_trim(h);
    if (h.empty()) return {h, -1};  // zero ring
    int s = 0;
    while (zpoly_at_one(h) == 0) {
        h = divide_one_minus_t(h, 1);
        ++s;
    }
    return {h, nvars - s};
}

std::vector<mpz_class> hilbert_series_coeffs(const ZPoly& N, int nvars, int upto) {
    std::vector<mpz_class> out(static_cast<size_t>(upto) + 1, 0);
    if (nvars == 0) {
        for (size_t j = 0; j < N.size() && j <= static_cast<size_t>(upto); ++j) out[j] = N[j];
        return out;
    }
    // 1/(1-t)^n = sum_d C(d+n-1, n-1) t^d
    for (int d = 0; d <= upto; ++d) {
        mpz_class c = 0;
        for (size_t j = 0; j < N.size() && static_cast<int>(j) <= d; ++j) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(d - static_cast<int>(j) + nvars - 1),
                         static_cast<unsigned long>(nvars - 1));
            c += N[j] * bin;
        }
        out[static_cast<size_t>(d)] = c;
    }
    return out;
}

}  // namespace tcone

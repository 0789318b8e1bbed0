#include "tcone/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tcone/errors.hpp"

namespace tcone {

Elem Factorization::length() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Elem{0});
}

Elem Factorization::value(const std::vector<Elem>& gens) const {
    Elem v = 0;
    for (size_t i = 0; i < coeffs.size() && i < gens.size(); ++i) v += coeffs[i] * gens[i];
    return v;
}

bool subsemigroup_contains(const std::vector<Elem>& gens, Elem m) {
    if (m < 0) return false;
    if (m == 0) return true;
    std::vector<char> reach(static_cast<size_t>(m) + 1, 0);
    reach[0] = 1;
    for (Elem v = 1; v <= m; ++v) {
        for (Elem g : gens) {
            if (g <= 0) continue;
            if (g <= v && reach[static_cast<size_t>(v - g)]) {
                reach[static_cast<size_t>(v)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<size_t>(m)] != 0;
}

NumericalSemigroup NumericalSemigroup::from_candidates(std::vector<Elem> candidates) {
    if (candidates.empty()) fail("Empty", "no generators given");
    for (Elem g : candidates)
        if (g <= 0) fail("InvalidParams", "generators must be positive");
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Elem g = 0;
    for (Elem a : candidates) g = std::gcd(g, a);
    if (g != 1) fail("GcdNotOne", "gcd of generators is " + std::to_string(g));

    // A sorted candidate is redundant iff it is representable over the kept
    // smaller ones (larger generators can never contribute to a smaller sum).
    std::vector<Elem> kept;
    for (Elem a : candidates) {
        if (!subsemigroup_contains(kept, a)) kept.push_back(a);
    }
    NumericalSemigroup H;
    H.gens_ = std::move(kept);
    H.init();
    return H;
}

NumericalSemigroup NumericalSemigroup::from_minimal(std::vector<Elem> gens) {
    auto H = from_candidates(gens);
    std::sort(gens.begin(), gens.end());
    if (H.gens_ != gens) {
        std::string extra;
        for (Elem a : gens)
            if (!std::binary_search(H.gens_.begin(), H.gens_.end(), a))
                extra += (extra.empty() ? "" : ", ") + std::to_string(a);
        fail("NotMinimal", "redundant generator(s): " + extra);
    }
    return H;
}

void NumericalSemigroup::init() {
    // Apery set w.r.t. the multiplicity via Bellman relaxation over residues.
    Elem a = gens_.front();
    const Elem inf = -1;
    apery_.assign(static_cast<size_t>(a), inf);
    apery_[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem r = 0; r < a; ++r) {
            if (apery_[static_cast<size_t>(r)] == inf) continue;
            for (Elem g : gens_) {
                Elem w = apery_[static_cast<size_t>(r)] + g;
                Elem s = w % a;
                if (apery_[static_cast<size_t>(s)] == inf || w < apery_[static_cast<size_t>(s)]) {
                    apery_[static_cast<size_t>(s)] = w;
                    changed = true;
                }
            }
        }
    }
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - a;
}

bool NumericalSemigroup::contains(Elem m) const {
    if (m < 0) return false;
    Elem a = gens_.front();
    return m >= apery_[static_cast<size_t>(m % a)];
}

std::vector<Elem> NumericalSemigroup::apery(Elem a) const {
    if (!contains(a) || a <= 0) fail("NotMember", std::to_string(a) + " is not a nonzero element of H");
    std::vector<Elem> ap(static_cast<size_t>(a));
    for (Elem r = 0; r < a; ++r) {
        Elem v = r;
        while (!contains(v)) v += a;
        ap[static_cast<size_t>(r)] = v;
    }
    return ap;
}

std::vector<Factorization> NumericalSemigroup::factorizations(Elem m) const {
    std::vector<Factorization> out;
    if (m < 0) return out;
    std::vector<Elem> mu(gens_.size(), 0);
    // Descending recursion over generator index keeps output lexicographic
    // in mu (largest generator index varies slowest).
    auto rec = [&](auto&& self, size_t i, Elem rest) -> void {
        if (i + 1 == gens_.size()) {
            if (rest % gens_[i] == 0) {
                mu[i] = rest / gens_[i];
                out.push_back(Factorization{mu});
                mu[i] = 0;
            }
            return;
        }
        for (Elem k = 0; k * gens_[i] <= rest; ++k) {
            mu[i] = k;
            self(self, i + 1, rest - k * gens_[i]);
        }
        mu[i] = 0;
    };
    rec(rec, 0, m);
    return out;
}

std::vector<Elem> NumericalSemigroup::order_table(Elem upto) const {
    std::vector<Elem> ord(static_cast<size_t>(upto) + 1, -1);
    if (upto >= 0) ord[0] = 0;
    for (Elem v = 1; v <= upto; ++v) {
        if (!contains(v)) continue;
        Elem best = -1;
        for (Elem g : gens_) {
            if (g > v) break;
            Elem w = ord[static_cast<size_t>(v - g)];
            if (w >= 0 && w + 1 > best) best = w + 1;
        }
        ord[static_cast<size_t>(v)] = best;
    }
    return ord;
}

Elem NumericalSemigroup::order(Elem h) const {
    if (h == 0) return 0;
    if (!contains(h)) fail("NotMember", std::to_string(h) + " is not in H");
    return order_table(h)[static_cast<size_t>(h)];
}

std::vector<Elem> NumericalSemigroup::hilbert_function_gr(int upto) const {
    // ord(h) = i forces h <= i * max(gens): one table covers all levels.
    Elem bound = (static_cast<Elem>(upto) + 1) * gens_.back();
    auto ord = order_table(bound);
    std::vector<Elem> hf(static_cast<size_t>(upto) + 1, 0);
    for (Elem v = 0; v <= bound; ++v) {
        Elem o = ord[static_cast<size_t>(v)];
        if (o >= 0 && o <= upto) ++hf[static_cast<size_t>(o)];
    }
    return hf;
}

std::vector<Elem> NumericalSemigroup::h_vector_arith() const {
    // Extend until multiplicity-many consecutive levels each hold exactly
    // multiplicity elements, then difference the prefix.
    Elem a = multiplicity();
    int upto = static_cast<int>(frobenius_ / a) + 2 * static_cast<int>(a) + 4;
    for (;;) {
        auto hf = hilbert_function_gr(upto);
        int streak = 0;
        for (size_t i = 0; i < hf.size(); ++i) {
            streak = (hf[i] == a) ? streak + 1 : 0;
            if (streak == static_cast<int>(a)) {
                size_t stable = i + 1 - static_cast<size_t>(a);  // first index of the plateau
                std::vector<Elem> h;
                for (size_t j = 0; j <= stable; ++j)
                    h.push_back(hf[j] - (j ? hf[j - 1] : 0));
                while (h.size() > 1 && h.back() == 0) h.pop_back();
                return h;
            }
        }
        upto *= 2;
    }
}

Elem NumericalSemigroup::c_value(int i) const {
    if (i < 1 || i > embdim()) fail("InvalidParams", "generator index out of range");
    std::vector<Elem> others;
    for (int j = 0; j < embdim(); ++j)
        if (j != i - 1) others.push_back(gens_[static_cast<size_t>(j)]);
    Elem ai = gens_[static_cast<size_t>(i - 1)];
    for (Elem k = 1;; ++k) {
        if (subsemigroup_contains(others, k * ai)) return k;
        if (k > 100000) fail("Internal", "c_value diverged");
    }
}

bool NumericalSemigroup::quadratic_necessary() const {
    int n = embdim();
    bool pair_ok = false;
    for (int k = 1; k < n && !pair_ok; ++k)
        for (int l = k; l < n; ++l)
            if ((gens_[static_cast<size_t>(k)] + gens_[static_cast<size_t>(l)]) % gens_[0] == 0) {
                pair_ok = true;
                break;
            }
    if (!pair_ok) return false;
    for (int i = 2; i <= n; ++i) {
        std::vector<Elem> others;
        for (int j = 0; j < n; ++j)
            if (j != i - 1) others.push_back(gens_[static_cast<size_t>(j)]);
        if (!subsemigroup_contains(others, 2 * gens_[static_cast<size_t>(i - 1)])) return false;
    }
    return true;
}

bool verify_not_cm_witness(const NumericalSemigroup& H, const Factorization& nu) {
    const auto& gens = H.generators();
    if (nu.coeffs.size() != gens.size() || nu.coeffs[0] != 0) return false;
    for (size_t i = 1; i < gens.size(); ++i)
        if (nu.coeffs[i] < 0) return false;
    Elem v = nu.value(gens);
    if (!H.contains(v - gens[0])) return false;
    Elem lnu = nu.length();
    for (const auto& mu : H.factorizations(v))
        if (mu.coeffs[0] > 0 && mu.length() >= lnu) return false;
    return true;
}

CMCertificate NumericalSemigroup::cm_tangent_cone() const {
    // A defect is h in H with ord(h) >= ord(h - a1) + 2; x1 is a
    // nonzerodivisor on gr iff there is none.  Every element of order d in
    // the Apery set of a1, and every defect of order d, contributes a basis
    // element of degree d to gr/(x1); nothing else does.  That quotient is
    // standard graded, so the first d >= 1 whose level is empty ends the
    // scan: all higher levels are empty too.  Elements of order d lie in
    // [d*a1, d*an], so each level is a finite window of the order table.
    Elem a1 = gens_[0];
    Elem an = gens_.back();
    Elem cap = frobenius_ + 2 * a1 + 16;  // far above the last live level
    std::vector<Elem> ord = order_table(2 * an);
    for (Elem d = 1; d <= cap; ++d) {
        if ((d + 1) * an >= static_cast<Elem>(ord.size())) ord = order_table((d + 2) * an);
        bool alive = false;
        for (Elem h = d * a1; h <= d * an; ++h) {
            if (ord[static_cast<size_t>(h)] != d) continue;
            Elem prev = h - a1;
            if (!contains(prev)) {
                alive = true;  // Apery element of order d
                continue;
            }
            if (ord[static_cast<size_t>(prev)] <= d - 2) {
                // maximal factorizations of a defect never use a1
                Factorization best;
                for (const auto& mu : factorizations(h))
                    if (mu.coeffs[0] == 0 && mu.length() == d) best = mu;
                CMCertificate cert;
                cert.cm = false;
                cert.witness = best;
                cert.witness_value = h;
                if (!verify_not_cm_witness(*this, best)) fail("Internal", "witness failed re-verification");
                return cert;
            }
        }
        if (!alive) return CMCertificate{};
    }
    fail("Internal", "cm_tangent_cone: level scan diverged");
}

std::string NumericalSemigroup::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ',';
        os << gens_[i];
    }
    return os.str();
}

}  // namespace tcone

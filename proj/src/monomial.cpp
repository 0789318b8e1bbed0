#include "tcone/monomial.hpp"

#include <numeric>

#include "tcone/errors.hpp"

namespace tcone {

MonomialOrder::MonomialOrder(Kind k, int nvars, std::vector<int> prio, int block,
                             std::vector<long long> weights)
    : kind_(k), nvars_(nvars), prio_(std::move(prio)), block_(block), weights_(std::move(weights)) {
    if (nvars_ < 1 || nvars_ > kMaxVars) fail("InvalidParams", "variable count out of range");
    if (prio_.empty()) {
        prio_.resize(static_cast<size_t>(nvars_));
        std::iota(prio_.begin(), prio_.end(), 0);
    }
    if (static_cast<int>(prio_.size()) != nvars_) fail("InvalidParams", "priority permutation size mismatch");
    std::vector<char> seen(static_cast<size_t>(nvars_), 0);
    for (int v : prio_) {
        if (v < 0 || v >= nvars_ || seen[static_cast<size_t>(v)]) fail("InvalidParams", "bad priority permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
}

MonomialOrder MonomialOrder::lex(int nvars) { return {Kind::Lex, nvars, {}, 0, {}}; }

MonomialOrder MonomialOrder::grevlex(int nvars) { return {Kind::GrevLex, nvars, {}, 0, {}}; }

MonomialOrder MonomialOrder::grevlex_perm(int nvars, std::vector<int> prio) {
    return {Kind::GrevLex, nvars, std::move(prio), 0, {}};
}

MonomialOrder MonomialOrder::elim_block(int nvars, int block) {
    if (block < 1 || block >= nvars) fail("InvalidParams", "elimination block out of range");
    return {Kind::ElimBlock, nvars, {}, block, {}};
}

MonomialOrder MonomialOrder::negdegrevlex(int nvars) { return {Kind::NegDegRevLex, nvars, {}, 0, {}}; }

MonomialOrder MonomialOrder::weighted(int nvars, std::vector<long long> weights) {
    if (static_cast<int>(weights.size()) != nvars) fail("InvalidParams", "weight vector size mismatch");
    for (long long w : weights)
        if (w <= 0) fail("InvalidParams", "weights must be positive");
    return {Kind::Weighted, nvars, {}, 0, std::move(weights)};
}

namespace {

// Reverse-lex tie-break on the priority ranks [lo, hi): scanning from the
// lowest-priority variable, the monomial with the smaller exponent at the
// first difference is the larger one.
int revlex_scan(const Monomial& a, const Monomial& b, const std::vector<int>& prio, int lo, int hi) {
    for (int p = hi - 1; p >= lo; --p) {
        int v = prio[static_cast<size_t>(p)];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

int deg_on(const Monomial& m, const std::vector<int>& prio, int lo, int hi) {
    int d = 0;
    for (int p = lo; p < hi; ++p) d += m.e[prio[static_cast<size_t>(p)]];
    return d;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex: {
            for (int p = 0; p < nvars_; ++p) {
                int v = prio_[static_cast<size_t>(p)];
                if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
            }
            return 0;
        }
        case Kind::GrevLex: {
            int da = deg_on(a, prio_, 0, nvars_), db = deg_on(b, prio_, 0, nvars_);
            if (da != db) return da > db ? 1 : -1;
            return revlex_scan(a, b, prio_, 0, nvars_);
        }
        case Kind::ElimBlock: {
            int da = deg_on(a, prio_, 0, block_), db = deg_on(b, prio_, 0, block_);
            if (da != db) return da > db ? 1 : -1;
            if (int c = revlex_scan(a, b, prio_, 0, block_)) return c;
            da = deg_on(a, prio_, block_, nvars_);
            db = deg_on(b, prio_, block_, nvars_);
            if (da != db) return da > db ? 1 : -1;
            return revlex_scan(a, b, prio_, block_, nvars_);
        }
        case Kind::NegDegRevLex: {
            int da = deg_on(a, prio_, 0, nvars_), db = deg_on(b, prio_, 0, nvars_);
            if (da != db) return da < db ? 1 : -1;  // smaller degree is larger
            return revlex_scan(a, b, prio_, 0, nvars_);
        }
        case Kind::Weighted: {
            long long wa = 0, wb = 0;
            for (int v = 0; v < nvars_; ++v) {
                wa += weights_[static_cast<size_t>(v)] * a.e[v];
                wb += weights_[static_cast<size_t>(v)] * b.e[v];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            int da = deg_on(a, prio_, 0, nvars_), db = deg_on(b, prio_, 0, nvars_);
            if (da != db) return da > db ? 1 : -1;
            return revlex_scan(a, b, prio_, 0, nvars_);
        }
    }
    return 0;
}

std::vector<long long> MonomialOrder::signature() const {
    std::vector<long long> s{static_cast<long long>(kind_), nvars_, block_};
    for (int v : prio_) s.push_back(v);
    for (long long w : weights_) s.push_back(w);
    return s;
}

}  // namespace tcone

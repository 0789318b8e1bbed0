#pragma once

/*
 * Dense exponent-vector monomials (fixed small width) and the monomial
 * orders used by the Groebner engines: lex, graded reverse lex, block
 * elimination orders, the local negative-degree reverse lex order, and
 * positive weight orders with grevlex tie-break.  Every order carries an
 * explicit variable priority permutation.
 */

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tcone {

inline constexpr int kMaxVars = 12;

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    bool is_one() const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) return false;
        return true;
    }
    bool operator==(const Monomial&) const = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = static_cast<unsigned>(a.e[i]) + b.e[i];
        assert(s <= 0xffffu);
        r.e[i] = static_cast<uint16_t>(s);
    }
    return r;
}

// a / b; requires b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        assert(a.e[i] >= b.e[i]);
        r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    }
    return r;
}

inline bool mono_divides(const Monomial& b, const Monomial& a) {
    for (int i = 0; i < kMaxVars; ++i)
        if (b.e[i] > a.e[i]) return false;
    return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline Monomial mono_var(int i, int pow = 1) {
    Monomial r;
    r.e[static_cast<size_t>(i)] = static_cast<uint16_t>(pow);
    return r;
}

// Fixed storage comparison (plain exponent lex), independent of any term
// order; used to keep polynomial term lists canonical.
inline int mono_storage_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, ElimBlock, NegDegRevLex, Weighted };

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    // prio[k] = variable index with the k-th highest priority.
    static MonomialOrder grevlex_perm(int nvars, std::vector<int> prio);
    // Variables at priority ranks [0, block) are eliminated first (block
    // degree dominates, grevlex inside each block).
    static MonomialOrder elim_block(int nvars, int block);
    static MonomialOrder negdegrevlex(int nvars);
    static MonomialOrder weighted(int nvars, std::vector<long long> weights);

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    int block() const { return block_; }
    const std::vector<int>& prio() const { return prio_; }

    // True for orders with 1 smallest (usable by Buchberger); the local
    // negdegrevlex order returns false and is handled by Mora's algorithm.
    bool is_global() const { return kind_ != Kind::NegDegRevLex; }

    // cmp(a,b) > 0 iff a comes strictly later (is larger) in the order.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // Stable identity for caches / debugging.
    std::vector<long long> signature() const;

private:
    MonomialOrder(Kind k, int nvars, std::vector<int> prio, int block,
                  std::vector<long long> weights);

    Kind kind_;
    int nvars_;
    std::vector<int> prio_;
    int block_ = 0;
    std::vector<long long> weights_;
};

}  // namespace tcone

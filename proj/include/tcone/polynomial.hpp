#pragma once

/*
 * Multivariate polynomials over Q with exact rational coefficients.  Term
 * lists are kept sorted under a fixed storage order, so equality and
 * hashing are representation-independent; leading terms w.r.t. a monomial
 * order are located by scan.  Plain-text parsing/printing round-trips
 * bit-exactly ("x3^2 - 2/3*x1*x4 + 1").
 */

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tcone/monomial.hpp"

namespace tcone {

struct Term {
    Monomial m;
    mpq_class c;
    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms);  // normalizes

    static Polynomial zero() { return {}; }
    static Polynomial constant(const mpq_class& c);
    static Polynomial variable(int i);
    static Polynomial term(const Monomial& m, const mpq_class& c);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_binomial() const { return t_.size() == 2; }

    // Max total degree of any term (-1 for 0).
    int degree() const;
    // Min total degree of any term (-1 for 0).
    int low_degree() const;
    // Max weighted degree over the given variable weights (-1 for 0).
    long long weighted_degree(const std::vector<long long>& w) const;
    bool is_homogeneous() const;

    // Sum of the terms of minimal total degree.
    Polynomial lowest_form() const;

    const Term& leading_term(const MonomialOrder& ord) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    // this += c * x^m * g  (the reduction workhorse).
    void add_scaled(const mpq_class& c, const Monomial& m, const Polynomial& g);

    Polynomial scaled(const mpq_class& c) const;
    Polynomial mul_monomial(const Monomial& m) const;

    // Divide by the leading coefficient w.r.t. ord.
    Polynomial monic(const MonomialOrder& ord) const;

    // Kill all terms with a positive exponent of variable v.
    Polynomial substitute_zero(int v) const;
    // Shift variables at positions >= at up by one (new empty slot at `at`).
    Polynomial insert_var(int at) const;
    // Remove variable slot v (every term must have exponent 0 there).
    Polynomial drop_var(int v) const;
    // x_i -> x_i * t for all i != t_var: multiplies each term by
    // t_var^(degree of the term outside t_var).
    Polynomial grade_by_var(int t_var) const;

private:
    void normalize();
    std::vector<Term> t_;  // sorted descending by mono_storage_cmp, no zero coefficients
};

// ---- text io -------------------------------------------------------------

std::string to_string(const Polynomial& f);
std::string to_string(const Polynomial& f, const MonomialOrder& ord);

// Parses the plain-text syntax; variables are x1..x<nvars>.  Throws
// Error("Parse") on malformed input or variable index > nvars.
Polynomial parse_polynomial(const std::string& text, int nvars);

// Comma/newline-separated polynomial list.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, int nvars);

std::string to_string(const std::vector<Polynomial>& ideal, const MonomialOrder& ord);

}  // namespace tcone

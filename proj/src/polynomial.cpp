#include "tcone/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tcone/errors.hpp"

namespace tcone {

void Polynomial::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return mono_storage_cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    t_ = std::move(out);
}

Polynomial::Polynomial(std::vector<Term> terms) : t_(std::move(terms)) { normalize(); }

Polynomial Polynomial::constant(const mpq_class& c) {
    Polynomial f;
    if (c != 0) f.t_.push_back({Monomial{}, c});
    return f;
}

Polynomial Polynomial::variable(int i) { return term(mono_var(i), 1); }

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c) {
    Polynomial f;
    if (c != 0) f.t_.push_back({m, c});
    return f;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.degree());
    return d;
}

int Polynomial::low_degree() const {
    int d = -1;
    for (const auto& t : t_) {
        int td = t.m.degree();
        if (d < 0 || td < d) d = td;
    }
    return d;
}

long long Polynomial::weighted_degree(const std::vector<long long>& w) const {
    long long d = -1;
    for (const auto& t : t_) {
        long long td = 0;
        for (size_t v = 0; v < w.size(); ++v) td += w[v] * t.m.e[v];
        d = std::max(d, td);
    }
    return d;
}

bool Polynomial::is_homogeneous() const { return is_zero() || degree() == low_degree(); }

Polynomial Polynomial::lowest_form() const {
    int d = low_degree();
    std::vector<Term> out;
    for (const auto& t : t_)
        if (t.m.degree() == d) out.push_back(t);
    return Polynomial(std::move(out));
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (t_.empty()) fail("Internal", "leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < t_.size(); ++i)
        if (ord.greater(t_[i].m, t_[best].m)) best = i;
    return t_[best];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    // merge of two storage-sorted lists
    Polynomial r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = mono_storage_cmp(t_[i].m, o.t_[j].m);
        if (c > 0)
            r.t_.push_back(t_[i++]);
        else if (c < 0)
            r.t_.push_back(o.t_[j++]);
        else {
            mpq_class s = t_[i].c + o.t_[j].c;
            if (s != 0) r.t_.push_back({t_[i].m, s});
            ++i, ++j;
        }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> out;
    out.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) out.push_back({mono_mul(a.m, b.m), a.c * b.c});
    return Polynomial(std::move(out));
}

void Polynomial::add_scaled(const mpq_class& c, const Monomial& m, const Polynomial& g) {
    std::vector<Term> scaled;
    scaled.reserve(g.t_.size());
    for (const auto& t : g.t_) scaled.push_back({mono_mul(t.m, m), c * t.c});
    // scaling by a fixed monomial preserves storage order
    Polynomial o;
    o.t_ = std::move(scaled);
    *this = *this + o;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.m = mono_mul(t.m, m);
    return r;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    mpq_class lc = leading_term(ord).c;
    return scaled(1 / lc);
}

Polynomial Polynomial::substitute_zero(int v) const {
    std::vector<Term> out;
    for (const auto& t : t_)
        if (t.m.e[v] == 0) out.push_back(t);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::insert_var(int at) const {
    Polynomial r = *this;
    for (auto& t : r.t_) {
        if (t.m.e[kMaxVars - 1] != 0) fail("InvalidParams", "no free variable slot");
        for (int v = kMaxVars - 1; v > at; --v) t.m.e[v] = t.m.e[v - 1];
        t.m.e[at] = 0;
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::drop_var(int v) const {
    Polynomial r = *this;
    for (auto& t : r.t_) {
        if (t.m.e[v] != 0) fail("InvalidParams", "variable still occurs");
        for (int w = v; w + 1 < kMaxVars; ++w) t.m.e[w] = t.m.e[w + 1];
        t.m.e[kMaxVars - 1] = 0;
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::grade_by_var(int t_var) const {
    Polynomial r = *this;
    for (auto& t : r.t_) {
        int d = t.m.degree() - t.m.e[t_var];
        unsigned s = static_cast<unsigned>(t.m.e[t_var]) + static_cast<unsigned>(d);
        if (s > 0xffffu) fail("Internal", "exponent overflow");
        t.m.e[t_var] = static_cast<uint16_t>(s);
    }
    r.normalize();
    return r;
}

// ---- printing -------------------------------------------------------------

namespace {

void print_monomial(std::ostringstream& os, const Monomial& m, bool lead_coeff_one) {
    bool first = true;
    for (int v = 0; v < kMaxVars; ++v) {
        if (!m.e[v]) continue;
        if (!first || !lead_coeff_one) os << '*';
        os << 'x' << (v + 1);
        if (m.e[v] > 1) os << '^' << m.e[v];
        first = false;
    }
}

void print_term(std::ostringstream& os, const Term& t, bool is_first) {
    mpq_class c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (is_first) {
        if (neg) os << '-';
    } else {
        os << (neg ? " - " : " + ");
    }
    if (t.m.is_one()) {
        os << c.get_str();
        return;
    }
    bool unit = (c == 1);
    if (!unit) os << c.get_str();
    print_monomial(os, t.m, unit);
}

}  // namespace

std::string to_string(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) return "0";
    std::vector<Term> terms = f.terms();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        int c = ord.cmp(a.m, b.m);
        if (c != 0) return c > 0;
        return mono_storage_cmp(a.m, b.m) > 0;
    });
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) print_term(os, terms[i], i == 0);
    return os.str();
}

std::string to_string(const Polynomial& f) {
    int n = kMaxVars;
    return to_string(f, MonomialOrder::grevlex(n));
}

std::string to_string(const std::vector<Polynomial>& ideal, const MonomialOrder& ord) {
    std::ostringstream os;
    for (size_t i = 0; i < ideal.size(); ++i) {
        if (i) os << ", ";
        os << to_string(ideal[i], ord);
    }
    return os.str();
}

// ---- parsing --------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("Parse", "expected a number at offset " + std::to_string(start));
        return s.substr(start, i - start);
    }
    long long number() {
        std::string d = digits();
        if (d.size() > 9) fail("Parse", "number too large: " + d);
        return std::stoll(d);
    }
    mpz_class bignum() { return mpz_class(digits()); }
};

// term := [sign] (coeff ["/" den])? factor* ;  factor := "x" idx ["^" exp]
Polynomial parse_term(Lexer& lx, int nvars, bool negate) {
    mpq_class coeff = negate ? -1 : 1;
    Monomial mono;
    bool saw_anything = false;
    bool need_star = false;  // factors must be separated by '*'

    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        mpz_class num = lx.bignum();
        if (lx.peek() == '/') {
            lx.get();
            mpz_class den = lx.bignum();
            if (den == 0) fail("Parse", "zero denominator");
            coeff *= mpq_class(num, den);
        } else {
            coeff *= num;
        }
        coeff.canonicalize();
        saw_anything = true;
        need_star = true;
    }
    for (;;) {
        char c = lx.peek();
        if (c == '*') {
            lx.get();
            if (lx.peek() != 'x') fail("Parse", "expected a variable after '*' at offset " + std::to_string(lx.i));
            need_star = false;
            continue;
        }
        if (c != 'x') break;
        if (need_star) fail("Parse", "missing '*' between factors at offset " + std::to_string(lx.i));
        lx.get();
        long long idx = lx.number();
        if (idx < 1 || idx > nvars) fail("Parse", "variable index x" + std::to_string(idx) + " out of range");
        long long exp = 1;
        if (lx.peek() == '^') {
            lx.get();
            exp = lx.number();
            if (exp < 0 || exp > 0xffff) fail("Parse", "exponent out of range");
        }
        unsigned s = static_cast<unsigned>(mono.e[idx - 1]) + static_cast<unsigned>(exp);
        if (s > 0xffffu) fail("Parse", "exponent out of range");
        mono.e[idx - 1] = static_cast<uint16_t>(s);
        saw_anything = true;
        need_star = true;
    }
    if (!saw_anything) fail("Parse", "expected a term at offset " + std::to_string(lx.i));
    return Polynomial::term(mono, coeff);
}

Polynomial parse_poly(Lexer& lx, int nvars) {
    Polynomial f;
    bool first = true;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == ',') break;
        bool neg = false;
        if (c == '+' || c == '-') {
            lx.get();
            neg = (c == '-');
        } else if (!first) {
            fail("Parse", "expected '+', '-' or ',' at offset " + std::to_string(lx.i));
        }
        f = f + parse_term(lx, nvars, neg);
        first = false;
    }
    if (first) fail("Parse", "empty polynomial");
    return f;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
    if (nvars < 1 || nvars > kMaxVars) fail("InvalidParams", "variable count out of range");
    Lexer lx{text};
    Polynomial f = parse_poly(lx, nvars);
    if (!lx.eof()) fail("Parse", "trailing input at offset " + std::to_string(lx.i));
    return f;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, int nvars) {
    if (nvars < 1 || nvars > kMaxVars) fail("InvalidParams", "variable count out of range");
    std::vector<Polynomial> out;
    Lexer lx{text};
    while (!lx.eof()) {
        out.push_back(parse_poly(lx, nvars));
        if (!lx.eof()) {
            if (lx.get() != ',') fail("Parse", "expected ','");
        }
    }
    return out;
}

}  // namespace tcone

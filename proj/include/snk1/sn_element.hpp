#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snk1/rational.hpp"

namespace snk1 {

// Normal-form monomial x^alpha y^beta of the algebra generated by
// x_1..x_n, y_1..y_n with y_i x_i = 1 and all cross commutations.
// The exponent pair (alpha, beta) IS the normal form.
struct SnMonomial {
    std::vector<uint32_t> alpha;
    std::vector<uint32_t> beta;

    SnMonomial() = default;
    explicit SnMonomial(int n) : alpha(n, 0), beta(n, 0) {}

    int n() const { return static_cast<int>(alpha.size()); }

    bool is_one() const
    {
        for (auto a : alpha)
            if (a) return false;
        for (auto b : beta)
            if (b) return false;
        return true;
    }

    auto operator<=>(const SnMonomial&) const = default;
};

// Exact finite linear combination of normal-form monomials.
class SnElement {
public:
    using TermMap = std::map<SnMonomial, Rational>;

    SnElement() : n_(0) {}
    explicit SnElement(int n) : n_(n) {}

    static SnElement zero(int n) { return SnElement(n); }

    static SnElement one(int n)
    {
        SnElement e(n);
        e.terms_[SnMonomial(n)] = 1;
        return e;
    }

    static SnElement scalar(int n, const Rational& c)
    {
        SnElement e(n);
        if (c != 0)
            e.terms_[SnMonomial(n)] = c;
        return e;
    }

    static SnElement monomial(int n, SnMonomial m, Rational c = 1)
    {
        SnElement e(n);
        if (c != 0)
            e.terms_[std::move(m)] = std::move(c);
        return e;
    }

    // x_i (1-based component index)
    static SnElement x(int n, int i)
    {
        check_index(n, i);
        SnMonomial m(n);
        m.alpha[i - 1] = 1;
        return monomial(n, m);
    }

    // y_i
    static SnElement y(int n, int i)
    {
        check_index(n, i);
        SnMonomial m(n);
        m.beta[i - 1] = 1;
        return monomial(n, m);
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_scalar() const
    {
        if (terms_.empty())
            return true;
        return terms_.size() == 1 && terms_.begin()->first.is_one();
    }

    Rational scalar_value() const
    {
        if (terms_.empty())
            return 0;
        if (!is_scalar())
            throw std::domain_error("element is not a scalar");
        return terms_.begin()->second;
    }

    bool operator==(const SnElement& o) const
    {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    SnElement& add_term(const SnMonomial& m, const Rational& c)
    {
        if (c == 0)
            return *this;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
        return *this;
    }

    SnElement operator+(const SnElement& o) const
    {
        check_same(o);
        SnElement r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    SnElement operator-(const SnElement& o) const
    {
        check_same(o);
        SnElement r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    SnElement operator-() const
    {
        SnElement r(n_);
        for (const auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    SnElement operator*(const Rational& c) const
    {
        SnElement r(n_);
        if (c == 0)
            return r;
        for (const auto& [m, k] : terms_)
            r.terms_[m] = k * c;
        return r;
    }

    friend SnElement operator*(const Rational& c, const SnElement& e)
    {
        return e * c;
    }

    // Product in normal form. Per component,
    //   (x^a y^b)(x^c y^d) = x^{a+max(c-b,0)} y^{d+max(b-c,0)},
    // extended bilinearly.
    SnElement operator*(const SnElement& o) const
    {
        check_same(o);
        SnElement r(n_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                SnMonomial m(n_);
                for (int k = 0; k < n_; ++k) {
                    uint32_t a = ma.alpha[k], b = ma.beta[k];
                    uint32_t c = mb.alpha[k], d = mb.beta[k];
                    if (c >= b) {
                        m.alpha[k] = a + (c - b);
                        m.beta[k] = d;
                    } else {
                        m.alpha[k] = a;
                        m.beta[k] = d + (b - c);
                    }
                }
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    SnElement& operator+=(const SnElement& o) { return *this = *this + o; }
    SnElement& operator-=(const SnElement& o) { return *this = *this - o; }
    SnElement& operator*=(const SnElement& o) { return *this = *this * o; }

    SnElement pow(uint32_t k) const
    {
        SnElement r = one(n_);
        SnElement base = *this;
        while (k) {
            if (k & 1)
                r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Deterministic canonical rendering, terms in lexicographic (alpha,beta)
    // order. Round-trips through the expression parser.
    std::string str() const;

    static void check_index(int n, int i)
    {
        if (i < 1 || i > n)
            throw std::out_of_range("component index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n));
    }

private:
    void check_same(const SnElement& o) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument("ambient dimension mismatch");
    }

    int n_;
    TermMap terms_;
};

inline SnElement ring_linear(const SnElement& a, const SnElement& b,
                             const Rational& lam, const Rational& mu)
{
    return a * lam + b * mu;
}

// E_{alpha beta}(I) = prod_{i in I} (x_i^{a_i} y_i^{b_i} - x_i^{a_i+1} y_i^{b_i+1}),
// expanded to its 2^{|I|}-term normal form.
inline SnElement matrix_unit(int n, const std::vector<int>& I,
                             const std::vector<uint32_t>& alpha,
                             const std::vector<uint32_t>& beta)
{
    if (I.empty())
        throw std::invalid_argument("matrix_unit: empty index set");
    if (alpha.size() != I.size() || beta.size() != I.size())
        throw std::invalid_argument("matrix_unit: exponent arity mismatch");
    std::set<int> seen;
    for (int i : I) {
        SnElement::check_index(n, i);
        if (!seen.insert(i).second)
            throw std::invalid_argument("matrix_unit: repeated index");
    }
    SnElement r = SnElement::one(n);
    for (std::size_t k = 0; k < I.size(); ++k) {
        int c = I[k] - 1;
        SnMonomial lo(n), hi(n);
        lo.alpha[c] = alpha[k];
        lo.beta[c] = beta[k];
        hi.alpha[c] = alpha[k] + 1;
        hi.beta[c] = beta[k] + 1;
        SnElement binom(n);
        binom.add_term(lo, 1);
        binom.add_term(hi, -1);
        r = r * binom;
    }
    return r;
}

// Single-component E_pq(i).
inline SnElement matrix_unit(int n, int i, uint32_t p, uint32_t q)
{
    return matrix_unit(n, std::vector<int>{i}, {p}, {q});
}

// Idempotent e_I = E_{00}(I) = prod_{i in I} (1 - x_i y_i).
inline SnElement idempotent(int n, const std::vector<int>& I)
{
    return matrix_unit(n, I, std::vector<uint32_t>(I.size(), 0),
                       std::vector<uint32_t>(I.size(), 0));
}

// ---------------------------------------------------------------------------
// The polynomial module K[x_1..x_n]: the faithful simple module, used as an
// independent oracle for the normal-form multiplication.

class PnPolynomial {
public:
    using TermMap = std::map<std::vector<uint32_t>, Rational>;

    PnPolynomial() = default;
    explicit PnPolynomial(int n) : n_(n) {}

    static PnPolynomial monomial(int n, std::vector<uint32_t> expo,
                                 Rational c = 1)
    {
        PnPolynomial p(n);
        if (c != 0)
            p.terms_[std::move(expo)] = std::move(c);
        return p;
    }

    static PnPolynomial one(int n)
    {
        return monomial(n, std::vector<uint32_t>(n, 0));
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const PnPolynomial& o) const
    {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    PnPolynomial& add_term(const std::vector<uint32_t>& e, const Rational& c)
    {
        if (c == 0)
            return *this;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
        return *this;
    }

private:
    int n_ = 0;
    TermMap terms_;
};

// Action of S_n on K[x_1..x_n]:
//   x_i * x^g = x^{g+e_i},  y_i * x^g = x^{g-e_i} (0 when g_i = 0).
// A normal-form monomial x^a y^b acts as the composite: y^b first.
inline PnPolynomial act_on_polynomial(const SnElement& a, const PnPolynomial& p)
{
    if (a.n() != p.n())
        throw std::invalid_argument("ambient dimension mismatch");
    int n = a.n();
    PnPolynomial r(n);
    for (const auto& [m, c] : a.terms()) {
        for (const auto& [g, k] : p.terms()) {
            bool killed = false;
            std::vector<uint32_t> e(n);
            for (int i = 0; i < n; ++i) {
                if (g[i] < m.beta[i]) {
                    killed = true;
                    break;
                }
                e[i] = g[i] - m.beta[i] + m.alpha[i];
            }
            if (!killed)
                r.add_term(e, c * k);
        }
    }
    return r;
}

namespace detail {

inline void enumerate_monomials(int n, int degree_bound,
                                std::vector<uint32_t>& cur, int pos,
                                int remaining,
                                std::vector<std::vector<uint32_t>>& out)
{
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= remaining; ++d) {
        cur[pos] = static_cast<uint32_t>(d);
        enumerate_monomials(n, degree_bound, cur, pos + 1, remaining - d, out);
    }
    cur[pos] = 0;
}

} // namespace detail

inline std::vector<std::vector<uint32_t>> monomials_up_to_degree(int n, int d)
{
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(n, 0);
    detail::enumerate_monomials(n, d, cur, 0, d, out);
    return out;
}

// Independent check of nf_mul through the module action: compares
// act(a*b, m) against act(a, act(b, m)) on every monomial of total
// degree <= d. Faithfulness of the module makes agreement on all
// monomials a genuine equality certificate at that degree.
inline bool oracle_compare(const SnElement& a, const SnElement& b, int d)
{
    if (a.n() != b.n())
        throw std::invalid_argument("ambient dimension mismatch");
    if (d < 0)
        throw std::invalid_argument("negative degree bound");
    SnElement ab = a * b;
    for (const auto& e : monomials_up_to_degree(a.n(), d)) {
        PnPolynomial m = PnPolynomial::monomial(a.n(), e);
        if (!(act_on_polynomial(ab, m) ==
              act_on_polynomial(a, act_on_polynomial(b, m))))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

inline std::string SnElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        for (int i = 0; i < n_; ++i) {
            if (m.alpha[i]) {
                std::string f = "x" + std::to_string(i + 1);
                if (m.alpha[i] > 1)
                    f += "^" + std::to_string(m.alpha[i]);
                factors.push_back(std::move(f));
            }
        }
        for (int i = 0; i < n_; ++i) {
            if (m.beta[i]) {
                std::string f = "y" + std::to_string(i + 1);
                if (m.beta[i] > 1)
                    f += "^" + std::to_string(m.beta[i]);
                factors.push_back(std::move(f));
            }
        }
        if (factors.empty()) {
            os << to_string(a);
        } else {
            if (a != 1)
                os << to_string(a) << "*";
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k)
                    os << "*";
                os << factors[k];
            }
        }
    }
    return os.str();
}

} // namespace snk1

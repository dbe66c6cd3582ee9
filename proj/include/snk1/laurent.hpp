#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "snk1/split.hpp"

namespace snk1 {

struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact Laurent polynomial over an index set of variables. `vars` holds the
// original component indices (sorted); exponent vectors are aligned with it.
class LaurentElement {
public:
    using Expo = std::vector<int64_t>;
    using TermMap = std::map<Expo, Rational>;

    LaurentElement() = default;
    explicit LaurentElement(std::vector<int> vars) : vars_(std::move(vars))
    {
        std::sort(vars_.begin(), vars_.end());
    }

    static LaurentElement scalar(std::vector<int> vars, const Rational& c)
    {
        LaurentElement e(std::move(vars));
        if (c != 0)
            e.terms_[Expo(e.vars_.size(), 0)] = c;
        return e;
    }

    static LaurentElement one(std::vector<int> vars)
    {
        return scalar(std::move(vars), 1);
    }

    static LaurentElement monomial(std::vector<int> vars, Expo expo,
                                   Rational c = 1)
    {
        LaurentElement e(std::move(vars));
        if (expo.size() != e.vars_.size())
            throw std::invalid_argument("exponent arity mismatch");
        if (c != 0)
            e.terms_[std::move(expo)] = std::move(c);
        return e;
    }

    const std::vector<int>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_one() const
    {
        return terms_.size() == 1 && terms_.begin()->second == 1 &&
               std::all_of(terms_.begin()->first.begin(),
                           terms_.begin()->first.end(),
                           [](int64_t e) { return e == 0; });
    }

    bool operator==(const LaurentElement& o) const
    {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    LaurentElement& add_term(const Expo& e, const Rational& c)
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

    LaurentElement operator+(const LaurentElement& o) const
    {
        check_same(o);
        LaurentElement r = *this;
        for (const auto& [e, c] : o.terms_)
            r.add_term(e, c);
        return r;
    }

    LaurentElement operator-(const LaurentElement& o) const
    {
        check_same(o);
        LaurentElement r = *this;
        for (const auto& [e, c] : o.terms_)
            r.add_term(e, -c);
        return r;
    }

    LaurentElement operator-() const
    {
        LaurentElement r(vars_);
        for (const auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }

    LaurentElement operator*(const LaurentElement& o) const
    {
        check_same(o);
        LaurentElement r(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(vars_.size());
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentElement operator*(const Rational& c) const
    {
        LaurentElement r(vars_);
        if (c == 0)
            return r;
        for (const auto& [e, k] : terms_)
            r.terms_[e] = k * c;
        return r;
    }

    LaurentElement& operator+=(const LaurentElement& o)
    {
        return *this = *this + o;
    }
    LaurentElement& operator*=(const LaurentElement& o)
    {
        return *this = *this * o;
    }

    // Exact quotient; the divisions performed by fraction-free elimination
    // are exact by the Sylvester identity. Greedy leading-term division in
    // the lex order (which is translation invariant on Z^k, so leading terms
    // multiply).
    LaurentElement divide_exact(const LaurentElement& b) const
    {
        check_same(b);
        if (b.is_zero())
            throw std::domain_error("division by zero Laurent polynomial");
        LaurentElement rem = *this;
        LaurentElement q(vars_);
        const auto& bl = *b.terms_.rbegin(); // lex-leading term
        std::size_t guard = 1u << 20; // inexact division would loop
        while (!rem.is_zero()) {
            if (guard-- == 0)
                throw std::domain_error("inexact Laurent division");
            const auto& rl = *rem.terms_.rbegin();
            Expo e(vars_.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = rl.first[k] - bl.first[k];
            Rational c = rl.second / bl.second;
            q.add_term(e, c);
            rem = rem - b * LaurentElement::monomial(vars_, e, c);
        }
        return q;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
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
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k]) {
                    std::string f = "x" + std::to_string(vars_[k]);
                    if (e[k] != 1)
                        f += "^" + std::to_string(e[k]);
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

private:
    void check_same(const LaurentElement& o) const
    {
        if (vars_ != o.vars_)
            throw std::invalid_argument("Laurent variable set mismatch");
    }

    std::vector<int> vars_;
    TermMap terms_;
};

// A unit of a Laurent polynomial ring: lambda * x^gamma with lambda != 0.
struct LaurentUnit {
    Rational coeff;
    std::vector<int> vars;
    std::vector<int64_t> expo;

    bool is_scalar() const
    {
        return std::all_of(expo.begin(), expo.end(),
                           [](int64_t e) { return e == 0; });
    }

    bool operator==(const LaurentUnit& o) const
    {
        return coeff == o.coeff && vars == o.vars && expo == o.expo;
    }

    LaurentElement as_element() const
    {
        return LaurentElement::monomial(vars, expo, coeff);
    }
};

inline LaurentUnit as_unit_monomial(const LaurentElement& a)
{
    if (a.term_count() != 1)
        throw NotAUnitError("Laurent element with " +
                            std::to_string(a.term_count()) +
                            " terms is not a unit");
    const auto& [e, c] = *a.terms().begin();
    return LaurentUnit{c, a.vars(), e};
}

inline int64_t deg_xj(const LaurentUnit& u, int j)
{
    auto it = std::find(u.vars.begin(), u.vars.end(), j);
    if (it == u.vars.end())
        throw std::out_of_range("variable x" + std::to_string(j) +
                                " not in unit's variable set");
    return u.expo[it - u.vars.begin()];
}

// ---------------------------------------------------------------------------
// N x N matrices over a Laurent ring equal to the identity outside a finite
// corner. Only the entries differing from the identity pattern are stored.

class LaurentCornerMatrix {
public:
    using Key = std::pair<int, int>;

    explicit LaurentCornerMatrix(std::vector<int> vars)
        : vars_(std::move(vars))
    {
        std::sort(vars_.begin(), vars_.end());
    }

    const std::vector<int>& vars() const { return vars_; }
    const std::map<Key, LaurentElement>& entries() const { return entries_; }

    void set(int row, int col, LaurentElement v)
    {
        if (row < 0 || col < 0)
            throw std::out_of_range("negative matrix index");
        if (v.vars() != vars_)
            throw std::invalid_argument("Laurent variable set mismatch");
        bool is_default = (row == col) ? v.is_one() : v.is_zero();
        if (is_default)
            entries_.erase({row, col});
        else
            entries_[{row, col}] = std::move(v);
    }

    LaurentElement at(int row, int col) const
    {
        auto it = entries_.find({row, col});
        if (it != entries_.end())
            return it->second;
        return row == col ? LaurentElement::one(vars_)
                          : LaurentElement(vars_);
    }

    int corner_extent() const
    {
        int k = 0;
        for (const auto& [key, v] : entries_)
            k = std::max({k, key.first + 1, key.second + 1});
        return k;
    }

    LaurentCornerMatrix operator*(const LaurentCornerMatrix& o) const
    {
        if (vars_ != o.vars_)
            throw std::invalid_argument("Laurent variable set mismatch");
        int k = std::max(corner_extent(), o.corner_extent());
        LaurentCornerMatrix r(vars_);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                LaurentElement s(vars_);
                for (int l = 0; l < k; ++l)
                    s += at(i, l) * o.at(l, j);
                r.set(i, j, std::move(s));
            }
        }
        return r;
    }

    bool operator==(const LaurentCornerMatrix& o) const
    {
        return vars_ == o.vars_ && entries_ == o.entries_;
    }

private:
    std::vector<int> vars_;
    std::map<Key, LaurentElement> entries_;
};

namespace detail {

inline LaurentElement det_cofactor(const std::vector<LaurentElement>& m, int k,
                                   const std::vector<int>& rows,
                                   const std::vector<int>& cols)
{
    const std::vector<int>& vars = m[0].vars();
    if (rows.size() == 1)
        return m[rows[0] * k + cols[0]];
    LaurentElement det(vars);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const LaurentElement& a = m[rows[0] * k + cols[j]];
        if (a.is_zero())
            continue;
        std::vector<int> sub_cols;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j)
                sub_cols.push_back(cols[l]);
        LaurentElement minor = det_cofactor(m, k, sub_rows, sub_cols);
        LaurentElement term = a * minor;
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// One-step fraction-free (Bareiss) elimination. Exact over any integral
// domain; requires pivoting only by row swaps, tracked by sign.
inline LaurentElement det_bareiss(std::vector<LaurentElement> m, int k)
{
    const std::vector<int> vars = m[0].vars();
    int sign = 1;
    LaurentElement prev = LaurentElement::one(vars);
    for (int p = 0; p < k - 1; ++p) {
        if (m[p * k + p].is_zero()) {
            int swap_row = -1;
            for (int i = p + 1; i < k; ++i) {
                if (!m[i * k + p].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0)
                return LaurentElement(vars); // singular
            for (int j = 0; j < k; ++j)
                std::swap(m[p * k + j], m[swap_row * k + j]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j) {
                LaurentElement t =
                    m[i * k + j] * m[p * k + p] - m[i * k + p] * m[p * k + j];
                m[i * k + j] = t.divide_exact(prev);
            }
        }
        prev = m[p * k + p];
    }
    LaurentElement d = m[(k - 1) * k + (k - 1)];
    return sign == 1 ? d : -d;
}

} // namespace detail

// Determinant of the finite corner (well defined: identity outside).
// Cofactor expansion for small corners, Bareiss elimination above.
inline LaurentElement laurent_det(const LaurentCornerMatrix& m)
{
    int k = m.corner_extent();
    if (k == 0)
        return LaurentElement::one(m.vars());
    std::vector<LaurentElement> dense;
    dense.reserve(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            dense.push_back(m.at(i, j));
    if (k <= 4) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        return detail::det_cofactor(dense, k, idx, idx);
    }
    return detail::det_bareiss(std::move(dense), k);
}

// ---------------------------------------------------------------------------
// Reduction modulo the matrix-unit content at the dropped components:
// x |-> x, y |-> x^{-1} there; any Unit factor at a dropped component kills
// the term. Undropped components must carry only scalar factors.

inline LaurentElement laurent_reduce(const SnElement& a,
                                     const std::vector<int>& drop)
{
    for (int i : drop)
        SnElement::check_index(a.n(), i);
    std::vector<int> vars(drop);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<int> pos(a.n() + 1, -1);
    for (std::size_t k = 0; k < vars.size(); ++k)
        pos[vars[k]] = static_cast<int>(k);

    LaurentElement r(vars);
    SplitElement s = to_split(a);
    for (const auto& [t, c] : s.terms()) {
        bool killed = false;
        LaurentElement::Expo e(vars.size(), 0);
        for (int i = 1; i <= a.n() && !killed; ++i) {
            const SplitFactor& f = t[i - 1];
            if (pos[i] >= 0) {
                switch (f.kind) {
                case SplitFactor::Kind::One:
                    break;
                case SplitFactor::Kind::XPow:
                    e[pos[i]] += f.p;
                    break;
                case SplitFactor::Kind::YPow:
                    e[pos[i]] -= f.p;
                    break;
                case SplitFactor::Kind::Unit:
                    killed = true;
                    break;
                }
            } else if (f.kind != SplitFactor::Kind::One) {
                throw std::domain_error(
                    "nonscalar factor at undropped component " +
                    std::to_string(i));
            }
        }
        if (!killed)
            r.add_term(e, c);
    }
    return r;
}

} // namespace snk1

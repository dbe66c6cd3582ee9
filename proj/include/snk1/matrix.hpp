#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "snk1/split.hpp"

namespace snk1 {

struct NotInCongruenceFormError : std::domain_error {
    using std::domain_error::domain_error;
};

// N x N matrix over S_m equal to the identity outside a finite corner.
// Entries hold the FULL value at (row, col); only entries differing from the
// identity pattern are stored. As the carrier of GL_infinity elements over
// S_{n-1} this is the matrix picture of the congruence group (1 + p_n)*.
class CornerMatrix {
public:
    using Key = std::pair<int, int>;

    explicit CornerMatrix(int entry_n) : m_(entry_n) {}

    static CornerMatrix identity(int entry_n) { return CornerMatrix(entry_n); }

    // entries live over S_m
    int entry_n() const { return m_; }
    const std::map<Key, SnElement>& entries() const { return entries_; }

    void set(int row, int col, SnElement v)
    {
        if (row < 0 || col < 0)
            throw std::out_of_range("negative matrix index");
        if (v.n() != m_)
            throw std::invalid_argument("entry dimension mismatch");
        bool is_default =
            (row == col) ? v == SnElement::one(m_) : v.is_zero();
        if (is_default)
            entries_.erase({row, col});
        else
            entries_[{row, col}] = std::move(v);
    }

    SnElement at(int row, int col) const
    {
        auto it = entries_.find({row, col});
        if (it != entries_.end())
            return it->second;
        return row == col ? SnElement::one(m_) : SnElement::zero(m_);
    }

    int corner_extent() const
    {
        int k = 0;
        for (const auto& [key, v] : entries_)
            k = std::max({k, key.first + 1, key.second + 1});
        return k;
    }

    bool is_identity() const { return entries_.empty(); }

    CornerMatrix operator*(const CornerMatrix& o) const
    {
        if (m_ != o.m_)
            throw std::invalid_argument("entry dimension mismatch");
        int k = std::max(corner_extent(), o.corner_extent());
        CornerMatrix r(m_);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                SnElement s(m_);
                for (int l = 0; l < k; ++l)
                    s += at(i, l) * o.at(l, j);
                r.set(i, j, std::move(s));
            }
        }
        return r;
    }

    bool operator==(const CornerMatrix& o) const
    {
        return m_ == o.m_ && entries_ == o.entries_;
    }

    // Elementary matrix 1 + a E_{ij}, i != j.
    static CornerMatrix elementary(int entry_n, int i, int j,
                                   const SnElement& a)
    {
        if (i == j)
            throw std::invalid_argument("elementary matrix needs i != j");
        CornerMatrix r(entry_n);
        r.set(i, j, a);
        return r;
    }

    static CornerMatrix diag2(int entry_n, SnElement d0, SnElement d1,
                              int row0 = 0, int row1 = 1)
    {
        CornerMatrix r(entry_n);
        r.set(row0, row0, std::move(d0));
        r.set(row1, row1, std::move(d1));
        return r;
    }

    // Embedding of a 2x2 block at rows/cols (row0, row1).
    static CornerMatrix block2(int entry_n, const SnElement& a00,
                               const SnElement& a01, const SnElement& a10,
                               const SnElement& a11, int row0 = 0,
                               int row1 = 1)
    {
        CornerMatrix r(entry_n);
        r.set(row0, row0, a00);
        r.set(row0, row1, a01);
        r.set(row1, row0, a10);
        r.set(row1, row1, a11);
        return r;
    }

private:
    int m_;
    std::map<Key, SnElement> entries_;
};

namespace detail {

// S_{n-1} -> S_n, appending a trivial last component.
inline SnElement embed_last(const SnElement& a)
{
    SnElement r(a.n() + 1);
    for (const auto& [m, c] : a.terms()) {
        SnMonomial m2 = m;
        m2.alpha.push_back(0);
        m2.beta.push_back(0);
        r.add_term(m2, c);
    }
    return r;
}

// Drop a trivial last component.
inline SnElement project_last(const SnElement& a)
{
    SnElement r(a.n() - 1);
    for (const auto& [m, c] : a.terms()) {
        if (m.alpha.back() != 0 || m.beta.back() != 0)
            throw std::domain_error("element not free of the last component");
        SnMonomial m2 = m;
        m2.alpha.pop_back();
        m2.beta.pop_back();
        r.add_term(m2, c);
    }
    return r;
}

} // namespace detail

// 1 + sum a_ij E_ij(n) |-> 1 + sum a_ij E_ij, the identification of
// (1 + p_n)* with GL_infinity(S_{n-1}). Fails when u - 1 is not in p_n.
inline CornerMatrix as_matrix(const SnElement& u)
{
    int n = u.n();
    if (n < 1)
        throw std::invalid_argument("as_matrix needs ambient n >= 1");
    SplitElement s = to_split(u - SnElement::one(n));
    CornerMatrix r(n - 1);
    // collect the S_{n-1} coefficient of each E_pq(n)
    std::map<std::pair<uint32_t, uint32_t>, SplitElement> coeffs;
    for (const auto& [t, c] : s.terms()) {
        const SplitFactor& fn = t[n - 1];
        if (fn.kind != SplitFactor::Kind::Unit)
            throw NotInCongruenceFormError(
                "u - 1 has a term without matrix-unit content at the "
                "distinguished component");
        SplitTuple rest(t.begin(), t.end() - 1);
        auto it = coeffs.find({fn.p, fn.q});
        if (it == coeffs.end())
            it = coeffs.emplace(std::make_pair(fn.p, fn.q),
                                SplitElement(n - 1))
                     .first;
        it->second.add_term(rest, c);
    }
    for (const auto& [pq, se] : coeffs) {
        SnElement a = from_split(se);
        int i = static_cast<int>(pq.first), j = static_cast<int>(pq.second);
        if (i == j)
            a += SnElement::one(n - 1);
        r.set(i, j, std::move(a));
    }
    return r;
}

inline SnElement as_element(const CornerMatrix& m)
{
    int n = m.entry_n() + 1;
    SnElement u = SnElement::one(n);
    for (const auto& [key, v] : m.entries()) {
        SnElement a = v;
        if (key.first == key.second)
            a -= SnElement::one(m.entry_n());
        u += detail::embed_last(a) *
             matrix_unit(n, n, static_cast<uint32_t>(key.first),
                         static_cast<uint32_t>(key.second));
    }
    return u;
}

inline bool verify_inverse(const SnElement& u, const SnElement& v)
{
    SnElement one = SnElement::one(u.n());
    return u * v == one && v * u == one;
}

inline bool verify_inverse(const CornerMatrix& u, const CornerMatrix& v)
{
    return (u * v).is_identity() && (v * u).is_identity();
}

} // namespace snk1

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "snk1/sn_element.hpp"

namespace snk1 {

namespace detail {

inline void check_index_set(int n, const std::vector<int>& I)
{
    if (I.empty())
        throw std::invalid_argument("empty index set");
    std::vector<int> s = I;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("repeated index in set");
    for (int i : s)
        SnElement::check_index(n, i);
}

inline bool contains(const std::vector<int>& I, int i)
{
    return std::find(I.begin(), I.end(), i) != I.end();
}

inline std::vector<int> without(const std::vector<int>& I, int i)
{
    std::vector<int> r;
    for (int k : I)
        if (k != i)
            r.push_back(k);
    return r;
}

} // namespace detail

// mu_I(lambda) = lambda e_I + 1 - e_I, a unit with inverse mu_I(1/lambda).
inline SnElement gen_mu(int n, const std::vector<int>& I, const Rational& lam)
{
    detail::check_index_set(n, I);
    if (lam == 0)
        throw std::invalid_argument("mu_I(0) is not a unit");
    SnElement e = idempotent(n, I);
    return SnElement::one(n) + e * (lam - 1);
}

// X(i,I) = mu_I(x_i) and Y(i,I) = mu_I(y_i); Y(i,I) X(i,I) = 1 but not the
// other way round: these are one-sided inverses of each other.
inline SnElement gen_X(int n, int i, const std::vector<int>& I)
{
    detail::check_index_set(n, I);
    SnElement::check_index(n, i);
    if (detail::contains(I, i))
        throw std::invalid_argument("X(i,I) requires i in the complement of I");
    SnElement e = idempotent(n, I);
    return SnElement::x(n, i) * e + SnElement::one(n) - e;
}

inline SnElement gen_Y(int n, int i, const std::vector<int>& I)
{
    detail::check_index_set(n, I);
    SnElement::check_index(n, i);
    if (detail::contains(I, i))
        throw std::invalid_argument("Y(i,I) requires i in the complement of I");
    SnElement e = idempotent(n, I);
    return SnElement::y(n, i) * e + SnElement::one(n) - e;
}

// theta_ij(J) = Y(i, J\i) X(j, J\j), a unit with inverse theta_ji(J).
inline SnElement gen_theta(int n, int i, int j, const std::vector<int>& J)
{
    detail::check_index_set(n, J);
    if (J.size() < 2)
        throw std::invalid_argument("theta needs |J| >= 2");
    if (i == j || !detail::contains(J, i) || !detail::contains(J, j))
        throw std::invalid_argument("theta needs distinct i, j in J");
    return gen_Y(n, i, detail::without(J, i)) *
           gen_X(n, j, detail::without(J, j));
}

} // namespace snk1

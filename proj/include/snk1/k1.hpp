#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snk1/generators.hpp"
#include "snk1/laurent.hpp"
#include "snk1/matrix.hpp"

namespace snk1 {

// Raised when a computed invariant contradicts the structure theory (e.g. a
// determinant that should be a scalar carries a nontrivial monomial part).
struct StructuralAnomaly : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Determinant-type invariants of units congruent to 1 modulo the level-s
// ideal. det_I projects onto the block of matrix-unit content exactly at the
// component set I (entries become Laurent polynomials in the complementary
// variables) and takes the determinant there.

inline LaurentElement det_I(const SnElement& u, const std::vector<int>& I)
{
    int n = u.n();
    detail::check_index_set(n, I);
    std::vector<int> Is = I;
    std::sort(Is.begin(), Is.end());
    std::size_t s = Is.size();

    std::vector<int> CI;
    for (int i = 1; i <= n; ++i)
        if (!detail::contains(Is, i))
            CI.push_back(i);

    std::vector<int> ipos(n + 1, -1), cpos(n + 1, -1);
    for (std::size_t k = 0; k < Is.size(); ++k)
        ipos[Is[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < CI.size(); ++k)
        cpos[CI[k]] = static_cast<int>(k);

    using Multi = std::vector<uint32_t>;
    std::map<std::pair<Multi, Multi>, LaurentElement> blocks;

    SplitElement split = to_split(u - SnElement::one(n));
    for (const auto& [t, c] : split.terms()) {
        std::size_t units = 0;
        bool exact = true;
        for (int i = 1; i <= n; ++i) {
            if (t[i - 1].kind == SplitFactor::Kind::Unit) {
                ++units;
                if (ipos[i] < 0)
                    exact = false;
            }
        }
        if (units < s)
            throw NotInCongruenceFormError(
                "element is not congruent to 1 modulo the level-" +
                std::to_string(s) + " ideal");
        if (units != s || !exact)
            continue; // deeper or different block: quotiented away
        Multi alpha(s), beta(s);
        LaurentElement::Expo e(CI.size(), 0);
        for (int i = 1; i <= n; ++i) {
            const SplitFactor& f = t[i - 1];
            if (ipos[i] >= 0) {
                alpha[ipos[i]] = f.p;
                beta[ipos[i]] = f.q;
            } else if (f.kind == SplitFactor::Kind::XPow) {
                e[cpos[i]] += f.p;
            } else if (f.kind == SplitFactor::Kind::YPow) {
                e[cpos[i]] -= f.p;
            }
        }
        auto it = blocks.find({alpha, beta});
        if (it == blocks.end())
            it = blocks.emplace(std::make_pair(alpha, beta),
                                LaurentElement(CI))
                     .first;
        it->second.add_term(e, c);
    }

    // enumerate the finitely many multi-indices that occur
    std::map<Multi, int> row;
    for (const auto& [ab, v] : blocks) {
        row.emplace(ab.first, 0);
        row.emplace(ab.second, 0);
    }
    int next = 0;
    for (auto& [m, r] : row)
        r = next++;

    LaurentCornerMatrix mat(CI);
    for (const auto& [ab, v] : blocks) {
        int r = row[ab.first], col = row[ab.second];
        LaurentElement entry = v;
        if (r == col)
            entry += LaurentElement::one(CI);
        mat.set(r, col, std::move(entry));
    }
    return laurent_det(mat);
}

inline int64_t deg_nIj(const SnElement& u, const std::vector<int>& I, int j)
{
    return deg_xj(as_unit_monomial(det_I(u, I)), j);
}

// ---------------------------------------------------------------------------
// The lattice invariant: coordinates (j, I) over all |I| = s, j outside I.

using LatticeCoord = std::pair<int, std::vector<int>>;
using LatticeVector = std::map<LatticeCoord, int64_t>;

namespace detail {

inline void subsets_of_size(int n, int s, std::vector<int>& cur, int from,
                            std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == s) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i <= n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, s, cur, i + 1, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int s)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_of_size(n, s, cur, 1, out);
    return out;
}

} // namespace detail

inline LatticeVector psi_prime(const SnElement& u, int s)
{
    int n = u.n();
    if (s < 1 || s >= n)
        throw std::invalid_argument("level s must satisfy 1 <= s < n");
    LatticeVector v;
    for (const auto& I : detail::subsets_of_size(n, s)) {
        LaurentUnit d = as_unit_monomial(det_I(u, I));
        for (std::size_t k = 0; k < d.vars.size(); ++k)
            if (d.expo[k] != 0)
                v[{d.vars[k], I}] = d.expo[k];
    }
    return v;
}

inline int64_t chi_J(const LatticeVector& v, const std::vector<int>& J)
{
    int64_t sum = 0;
    for (const auto& [coord, c] : v) {
        std::vector<int> u = coord.second;
        u.push_back(coord.first);
        std::sort(u.begin(), u.end());
        std::vector<int> Js = J;
        std::sort(Js.begin(), Js.end());
        if (u == Js)
            sum += c;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// The scalar determinant on GL_infinity(S_{n-1}) = (1 + p_n)*: reduce
// entries to the Laurent quotient and take the determinant.

inline LaurentUnit bdet(const SnElement& u)
{
    return as_unit_monomial(det_I(u, {u.n()}));
}

inline LaurentUnit bdet(const CornerMatrix& m)
{
    std::vector<int> vars;
    for (int i = 1; i <= m.entry_n(); ++i)
        vars.push_back(i);
    LaurentCornerMatrix lm(vars);
    for (const auto& [key, v] : m.entries())
        lm.set(key.first, key.second, laurent_reduce(v, vars));
    return as_unit_monomial(laurent_det(lm));
}

// ---------------------------------------------------------------------------
// Generator enumeration.

struct ThetaDescriptor {
    int i = 0, j = 0;
    std::vector<int> J;

    bool operator==(const ThetaDescriptor& o) const
    {
        return i == o.i && j == o.j && J == o.J;
    }
};

// The standard generating family for the non-scalar part of
// GL_infinity(S_{n-1}), one cyclic factor per (J, j): J contains n,
// |J| = s+1 for s = 2..n-1, and j runs over J minus n and the maximal
// element of J \ {n}.
inline std::vector<ThetaDescriptor> enumerate_generators(int n)
{
    std::vector<ThetaDescriptor> out;
    for (int s = 2; s <= n - 1; ++s) {
        for (auto rest : detail::subsets_of_size(n - 1, s)) {
            std::vector<int> J = rest;
            J.push_back(n);
            int m = *std::max_element(rest.begin(), rest.end());
            for (int j : rest)
                if (j != m)
                    out.push_back({m, j, J});
        }
    }
    return out;
}

// Congruence variant for the ideal with the given support: sets J meeting
// the support in exactly one element contribute generators avoiding that
// element; sets meeting it at least twice contribute the standard family.
inline std::vector<ThetaDescriptor>
enumerate_generators(int n, const std::vector<int>& supp)
{
    detail::check_index_set(n - 1, supp);
    std::vector<ThetaDescriptor> out;
    for (int s = 2; s <= n - 1; ++s) {
        for (auto rest : detail::subsets_of_size(n - 1, s)) {
            std::vector<int> J = rest;
            J.push_back(n);
            std::vector<int> meet;
            for (int k : rest)
                if (detail::contains(supp, k))
                    meet.push_back(k);
            if (meet.empty())
                continue;
            if (meet.size() == 1) {
                int i = meet[0];
                std::vector<int> pool = detail::without(rest, i);
                int m = *std::max_element(pool.begin(), pool.end());
                for (int j : pool)
                    if (j != m)
                        out.push_back({m, j, J});
            } else {
                int m = *std::max_element(rest.begin(), rest.end());
                for (int j : rest)
                    if (j != m)
                        out.push_back({m, j, J});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Effective decomposition in the congruence group of the idempotent prime
// ideal with the given support: a = prod theta_ij^{n_ij} prod mu_{k,n}(l_k)
// e with e a product of ideal-elementary matrices.

struct DecompositionReport {
    std::vector<int> supp;
    std::map<std::pair<int, int>, int64_t> theta_exponents; // keyed (i, j), i > j
    std::map<int, Rational> lambdas;                        // keyed k in supp
    SnElement elementary_part;
    bool invariants_vanish = false; // the residual has trivial invariants

    bool is_elementary() const
    {
        for (const auto& [ij, m] : theta_exponents)
            if (m != 0)
                return false;
        for (const auto& [k, l] : lambdas)
            if (l != 1)
                return false;
        return true;
    }
};

inline SnElement theta_pair(int n, int i, int j)
{
    std::vector<int> J = {i, j, n};
    std::sort(J.begin(), J.end());
    return gen_theta(n, i, j, J);
}

inline DecompositionReport decompose(const SnElement& a,
                                     const std::vector<int>& supp)
{
    int n = a.n();
    detail::check_index_set(n - 1, supp);
    std::vector<int> sp = supp;
    std::sort(sp.begin(), sp.end());

    DecompositionReport rep;
    rep.supp = sp;

    SnElement prefix = SnElement::one(n);
    SnElement prefix_inv = SnElement::one(n);
    for (std::size_t b = 0; b < sp.size(); ++b) {
        for (std::size_t c = 0; c < b; ++c) {
            int i = sp[b], j = sp[c]; // i > j
            int64_t m = deg_nIj(a, {i, n}, j);
            rep.theta_exponents[{i, j}] = m;
            if (m == 0)
                continue;
            SnElement th = theta_pair(n, i, j);
            SnElement thi = theta_pair(n, j, i);
            for (int64_t t = 0; t < (m > 0 ? m : -m); ++t) {
                prefix = prefix * (m > 0 ? th : thi);
                prefix_inv = (m > 0 ? thi : th) * prefix_inv;
            }
        }
    }

    SnElement remainder = prefix_inv * a;
    for (int k : sp) {
        LaurentUnit d = as_unit_monomial(det_I(remainder, {k, n}));
        if (!d.is_scalar())
            throw StructuralAnomaly(
                "determinant at {" + std::to_string(k) +
                ", n} is not a scalar after removing the theta part");
        rep.lambdas[k] = d.coeff;
        if (d.coeff != 1) {
            prefix = prefix * gen_mu(n, {k, n}, d.coeff);
            prefix_inv =
                gen_mu(n, {k, n}, inverse(d.coeff)) * prefix_inv;
        }
    }

    rep.elementary_part = prefix_inv * a;
    if (!(prefix * rep.elementary_part == a))
        throw StructuralAnomaly("decomposition failed to recompose");

    // the residual must have vanishing invariants
    bool ok = true;
    for (std::size_t b = 0; b < sp.size() && ok; ++b)
        for (std::size_t c = 0; c < b && ok; ++c)
            ok = deg_nIj(rep.elementary_part, {sp[b], n}, sp[c]) == 0;
    for (int k : sp) {
        if (!ok)
            break;
        LaurentUnit d = as_unit_monomial(det_I(rep.elementary_part, {k, n}));
        ok = d.is_scalar() && d.coeff == 1;
    }
    rep.invariants_vanish = ok;
    return rep;
}

// Membership criterion for the subgroup generated by ideal-elementary
// matrices: all theta exponents vanish and all scalar parts are 1.
inline bool is_elementary_product(const SnElement& a,
                                  const std::vector<int>& supp)
{
    int n = a.n();
    detail::check_index_set(n - 1, supp);
    std::vector<int> sp = supp;
    std::sort(sp.begin(), sp.end());
    for (std::size_t b = 0; b < sp.size(); ++b)
        for (std::size_t c = 0; c < b; ++c)
            if (deg_nIj(a, {sp[b], n}, sp[c]) != 0)
                return false;
    for (int k : sp) {
        LaurentUnit d = as_unit_monomial(det_I(a, {k, n}));
        if (!d.is_scalar() || d.coeff != 1)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Full general linear group: a = mu_n(lambda) e with lambda the scalar
// determinant and e in the elementary subgroup.

struct FullDecomposition {
    Rational lambda;
    SnElement elementary_part;
};

inline FullDecomposition decompose_full_gl(const SnElement& a)
{
    int n = a.n();
    LaurentUnit d = bdet(a);
    if (!d.is_scalar())
        throw StructuralAnomaly(
            "scalar determinant carries a nontrivial monomial part");
    FullDecomposition rep;
    rep.lambda = d.coeff;
    rep.elementary_part = gen_mu(n, {n}, inverse(d.coeff)) * a;
    return rep;
}

// ---------------------------------------------------------------------------
// Structure of the K_1 group.

struct K1Report {
    int n = 0;              // distinguished ambient component count
    std::vector<int> supp;  // empty: the full (non-congruence) case
    int64_t free_rank = 0;  // rank of the free abelian part
    int torus_rank = 1;     // number of K* factors
    std::vector<ThetaDescriptor> free_generators; // basis of the free part
    std::vector<ThetaDescriptor> gl_generators;   // non-scalar GL generators

    std::string group() const
    {
        std::string s;
        if (free_rank > 0)
            s += "Z^" + std::to_string(free_rank) + " x ";
        s += torus_rank == 1 ? "K*" : "(K*)^" + std::to_string(torus_rank);
        return s;
    }
};

inline K1Report k1_report(int n)
{
    K1Report r;
    r.n = n;
    r.free_rank = 0;
    r.torus_rank = 1;
    r.gl_generators = enumerate_generators(n);
    return r;
}

inline K1Report k1_report(int n, const std::vector<int>& supp)
{
    detail::check_index_set(n - 1, supp);
    K1Report r;
    r.n = n;
    r.supp = supp;
    std::sort(r.supp.begin(), r.supp.end());
    int m = static_cast<int>(r.supp.size());
    r.free_rank = m == 1 ? 0 : static_cast<int64_t>(m) * (m - 1) / 2;
    r.torus_rank = m;
    for (int b = 0; b < m; ++b)
        for (int c = 0; c < b; ++c) {
            std::vector<int> J = {r.supp[c], r.supp[b], n};
            std::sort(J.begin(), J.end());
            r.free_generators.push_back({r.supp[b], r.supp[c], J});
        }
    r.gl_generators = enumerate_generators(n, r.supp);
    return r;
}

} // namespace snk1

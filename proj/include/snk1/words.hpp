#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "snk1/generators.hpp"
#include "snk1/matrix.hpp"

namespace snk1 {

// One invertible generator of GL_infinity(S_{n-1}) = (1 + p_n)*, with its
// exponent. Elem entries live over the entry algebra S_{n-1}; Mu and Theta
// are element-level generators whose index sets contain the distinguished
// component n.
struct GeneratorToken {
    enum class Kind { Elem, Mu, Theta };

    Kind kind;
    int row = 0, col = 0; // Elem
    SnElement entry;      // Elem (over S_{n-1})
    std::vector<int> set; // Mu: I with n in I; Theta: J with n in J
    Rational lam;         // Mu
    int ti = 0, tj = 0;   // Theta
    int exponent = 1;

    static GeneratorToken elem(int i, int j, SnElement a, int exponent = 1)
    {
        if (i == j)
            throw std::invalid_argument("elementary token needs i != j");
        GeneratorToken t;
        t.kind = Kind::Elem;
        t.row = i;
        t.col = j;
        t.entry = std::move(a);
        t.exponent = exponent;
        return t;
    }

    static GeneratorToken mu(std::vector<int> I, Rational lam,
                             int exponent = 1)
    {
        if (lam == 0)
            throw std::invalid_argument("mu token needs lambda != 0");
        GeneratorToken t;
        t.kind = Kind::Mu;
        t.set = std::move(I);
        t.lam = std::move(lam);
        t.exponent = exponent;
        return t;
    }

    static GeneratorToken theta(int i, int j, std::vector<int> J,
                                int exponent = 1)
    {
        GeneratorToken t;
        t.kind = Kind::Theta;
        t.ti = i;
        t.tj = j;
        t.set = std::move(J);
        t.exponent = exponent;
        return t;
    }

    GeneratorToken inverse() const
    {
        GeneratorToken t = *this;
        t.exponent = -t.exponent;
        return t;
    }
};

// A word in invertible generators; the carrier of known inverses. `n` is the
// ambient count: matrices evaluate over S_{n-1}, elements inside S_n.
struct GroupWord {
    int n = 0;
    std::vector<GeneratorToken> tokens;

    explicit GroupWord(int ambient) : n(ambient) {}

    GroupWord& push(GeneratorToken t)
    {
        tokens.push_back(std::move(t));
        return *this;
    }

    GroupWord& append(const GroupWord& o)
    {
        if (o.n != n)
            throw std::invalid_argument("ambient dimension mismatch");
        tokens.insert(tokens.end(), o.tokens.begin(), o.tokens.end());
        return *this;
    }

    bool purely_elementary() const
    {
        return std::all_of(tokens.begin(), tokens.end(), [](const auto& t) {
            return t.kind == GeneratorToken::Kind::Elem;
        });
    }
};

inline CornerMatrix token_matrix(const GeneratorToken& t, int ambient)
{
    int m = ambient - 1;
    switch (t.kind) {
    case GeneratorToken::Kind::Elem:
        // (1 + aE_ij)^k = 1 + ka E_ij
        return CornerMatrix::elementary(m, t.row, t.col,
                                        t.entry * Rational(t.exponent));
    case GeneratorToken::Kind::Mu: {
        Rational l = 1;
        int k = t.exponent;
        Rational base = k >= 0 ? t.lam : inverse(t.lam);
        for (int i = 0; i < std::abs(k); ++i)
            l *= base;
        return as_matrix(gen_mu(ambient, t.set, l));
    }
    case GeneratorToken::Kind::Theta: {
        int i = t.exponent >= 0 ? t.ti : t.tj;
        int j = t.exponent >= 0 ? t.tj : t.ti;
        CornerMatrix g = as_matrix(gen_theta(ambient, i, j, t.set));
        CornerMatrix r = CornerMatrix::identity(m);
        for (int k = 0; k < std::abs(t.exponent); ++k)
            r = r * g;
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

// The same token as a unit of S_n (under 1 + sum a_ij E_ij(n) <-> matrix).
inline SnElement token_element(const GeneratorToken& t, int ambient)
{
    return as_element(token_matrix(t, ambient));
}

inline CornerMatrix word_eval(const GroupWord& w)
{
    CornerMatrix r = CornerMatrix::identity(w.n - 1);
    for (const auto& t : w.tokens)
        r = r * token_matrix(t, w.n);
    return r;
}

inline SnElement word_eval_element(const GroupWord& w)
{
    SnElement r = SnElement::one(w.n);
    for (const auto& t : w.tokens)
        r = r * token_element(t, w.n);
    return r;
}

inline GroupWord word_inverse(const GroupWord& w)
{
    GroupWord r(w.n);
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it)
        r.push(it->inverse());
    return r;
}

// ---------------------------------------------------------------------------
// Whitehead factorization: diag(u, u^{-1}) at rows (i, j) as the fixed
// 6-token elementary word
//   e_ij(u) e_ji(-u^{-1}) e_ij(u) e_ij(-1) e_ji(1) e_ij(-1).

inline GroupWord whitehead_diag(int ambient, const SnElement& u,
                                const SnElement& u_inv, int i, int j)
{
    if (i == j)
        throw std::invalid_argument("whitehead_diag needs i != j");
    if (!verify_inverse(u, u_inv))
        throw std::invalid_argument("whitehead_diag: inverse check failed");
    int m = ambient - 1;
    SnElement one = SnElement::one(m);
    GroupWord w(ambient);
    w.push(GeneratorToken::elem(i, j, u));
    w.push(GeneratorToken::elem(j, i, -u_inv));
    w.push(GeneratorToken::elem(i, j, u));
    w.push(GeneratorToken::elem(i, j, -one));
    w.push(GeneratorToken::elem(j, i, one));
    w.push(GeneratorToken::elem(i, j, -one));
    return w;
}

namespace detail {

// Elementary word for the matrix diag(1 + lam * e * E00(c), 1, ...) at rows
// (r0, r0+1), where e is a central idempotent of the entry algebra S_{n-1}
// not involving component c, and lam != -1. Built from the four-matrix
// identity over S_1(c)
//   e21(-(1+lam) y) e12(lam' x) e21(y) e12(lam x)
//     = diag(1+lam', 1/(1+lam')) diag(1 + lam E00, 1),   lam' = -lam/(1+lam),
// scaled through u |-> eu + 1 - e (a group homomorphism on corner matrices),
// with the leading diagonal factor cancelled by a Whitehead word.
inline GroupWord mu_block_word(int ambient, int c, const SnElement& e,
                               const Rational& lam, int r0 = 0)
{
    if (lam == -1)
        throw std::invalid_argument("mu_block_word: lam = -1 is not a unit");
    int m = ambient - 1;
    SnElement::check_index(m, c);
    Rational lamp = -lam / (1 + lam); // the involution phi
    SnElement xc = SnElement::x(m, c);
    SnElement yc = SnElement::y(m, c);
    int r1 = r0 + 1;

    // diag(1/(1+lam'), 1+lam') scaled by e; 1+lam' = 1/(1+lam)
    SnElement u = SnElement::scalar(m, 1 + lam) * e +
                  (SnElement::one(m) - e);
    SnElement u_inv = SnElement::scalar(m, inverse(1 + lam)) * e +
                      (SnElement::one(m) - e);
    GroupWord w = whitehead_diag(ambient, u, u_inv, r0, r1);

    w.push(GeneratorToken::elem(r1, r0, yc * Rational(-(1 + lam)) * e));
    w.push(GeneratorToken::elem(r0, r1, xc * lamp * e));
    w.push(GeneratorToken::elem(r1, r0, yc * e));
    w.push(GeneratorToken::elem(r0, r1, xc * lam * e));
    return w;
}

// Elementary word for the block (x_c E00(c); 0 y_c) at rows (r0, r0+1):
// invert the six-matrix identity that reduces (y_c 0; E00(c) x_c) to
// diag(1 - 2E00(c), 1).
inline GroupWord blockxy_word(int ambient, int c, int r0 = 0)
{
    int m = ambient - 1;
    SnElement::check_index(m, c);
    SnElement xc = SnElement::x(m, c);
    SnElement yc = SnElement::y(m, c);
    SnElement one = SnElement::one(m);
    int r1 = r0 + 1;

    GroupWord w(ambient);
    w.push(GeneratorToken::elem(r0, r1, xc));
    w.push(GeneratorToken::elem(r1, r0, -yc));
    w.append(mu_block_word(ambient, c, one, -2, r0)); // self-inverse factor
    w.push(GeneratorToken::elem(r1, r0, one));
    w.push(GeneratorToken::elem(r0, r1, -one));
    w.push(GeneratorToken::elem(r1, r0, one - xc));
    return w;
}

} // namespace detail

// Elementary word evaluating to the matrix of mu_I(lambda), for n in I,
// |I| >= 2 and lambda != 0. mu_I(1) = 1 gives the empty word.
inline GroupWord factor_mu_elementary(int ambient,
                                      const std::vector<int>& I,
                                      const Rational& lam)
{
    detail::check_index_set(ambient, I);
    if (!detail::contains(I, ambient))
        throw std::invalid_argument("factor_mu: I must contain n");
    if (I.size() < 2)
        throw std::invalid_argument("factor_mu: |I| >= 2 required");
    if (lam == 0)
        throw std::invalid_argument("factor_mu: lambda != 0 required");
    GroupWord w(ambient);
    if (lam == 1)
        return w;
    std::vector<int> rest = detail::without(I, ambient);
    int c = *std::max_element(rest.begin(), rest.end());
    std::vector<int> eset = detail::without(rest, c);
    SnElement e = eset.empty() ? SnElement::one(ambient - 1)
                               : idempotent(ambient - 1, eset);
    // target diag(1 + (lam-1) e_{I\n}, 1); lam - 1 != -1 since lam != 0
    return detail::mu_block_word(ambient, c, e, lam - 1);
}

// Elementary word evaluating to diag(theta_ij(J), 1, ...) where J is a
// subset of {1..n-1} with |J| >= 2 and i != j in J. Assembled from the
// constructive factorization chain: the (x e; 0 y) block, the lower
// triangular five-matrix product, and (for |J| >= 3) the inverse of the
// upper-triangular residue, whose diagonal core 1 - 2e_j(1 - e_I) splits
// into two mu-type blocks.
inline GroupWord factor_theta_elementary(int ambient, int i, int j,
                                         const std::vector<int>& J)
{
    detail::check_index_set(ambient - 1, J);
    if (J.size() < 2)
        throw std::invalid_argument("factor_theta: |J| >= 2 required");
    if (i == j || !detail::contains(J, i) || !detail::contains(J, j))
        throw std::invalid_argument("factor_theta: need distinct i, j in J");
    int m = ambient - 1;
    SnElement xi = SnElement::x(m, i), yi = SnElement::y(m, i);
    SnElement xj = SnElement::x(m, j), yj = SnElement::y(m, j);
    SnElement ej = idempotent(m, {j});
    SnElement one = SnElement::one(m);

    GroupWord w = detail::blockxy_word(ambient, j);

    std::vector<int> rest = detail::without(detail::without(J, i), j);
    if (rest.empty()) {
        // five lower/upper factors assembling (1+(y_j-1)x_i y_i, 0; e_j y_i, x_j)
        w.push(GeneratorToken::elem(1, 0, -(xj * yi)));
        w.push(GeneratorToken::elem(0, 1, (yj - one) * xi));
        w.push(GeneratorToken::elem(1, 0, yi));
        w.push(GeneratorToken::elem(0, 1, -((yj - one) * xi)));
        w.push(GeneratorToken::elem(0, 1, (yj - one) * (one - xj) * xi));
        return w;
    }

    SnElement eI = idempotent(m, rest);
    SnElement co = one - eI;

    // (1+(y_j-1)x_i y_i e_I, 0; e_j y_i e_I, 1+(x_j-1)e_I)
    w.push(GeneratorToken::elem(1, 0, -(xj * yi * eI)));
    w.push(GeneratorToken::elem(0, 1, (yj - one) * xi));
    w.push(GeneratorToken::elem(1, 0, yi * eI));
    w.push(GeneratorToken::elem(0, 1, -((yj - one) * xi)));
    w.push(GeneratorToken::elem(0, 1, (yj - one) * (one - xj) * xi * eI));

    // inverse of the residue R = (1+(x_j-1)(1-e_I), e_j(1-e_I); 0, e_I+(1-e_I)y_j):
    // R^{-1} = C3 C4 C5 G C1 with G = diag(1-2e_j(1-e_I), 1) self-inverse
    w.push(GeneratorToken::elem(1, 0, xj));
    w.push(GeneratorToken::elem(0, 1, (one - yj) * co));
    w.push(GeneratorToken::elem(1, 0, -one - (xj - one) * eI));
    w.append(detail::mu_block_word(ambient, j, one, -2));
    w.append(detail::mu_block_word(ambient, j, eI, -2));
    w.push(GeneratorToken::elem(0, 1, -((xj - one + ej * 2) * co)));
    return w;
}

} // namespace snk1

#pragma once

#include <string>
#include <vector>

#include "snk1/generators.hpp"
#include "snk1/matrix.hpp"

namespace snk1 {

// One replayed identity: `passed` is the result of an exact comparison of
// both sides computed independently in normal-form arithmetic.
struct IdentityCheck {
    std::string id;
    std::string description;
    bool passed = false;
};

namespace detail {

inline CornerMatrix e12m(int m, const SnElement& a)
{
    return CornerMatrix::elementary(m, 0, 1, a);
}

inline CornerMatrix e21m(int m, const SnElement& a)
{
    return CornerMatrix::elementary(m, 1, 0, a);
}

inline const std::vector<Rational>& identity_lambdas()
{
    static const std::vector<Rational> ls = {2, 3, Rational(-1, 2),
                                             Rational(1, 7)};
    return ls;
}

} // namespace detail

// Replays, with exact arithmetic, the chain of 2x2 matrix identities that
// underlies the constructive elementary factorization, plus the commutator
// identities used for the congruence-subgroup generators. Every check
// recomputes both sides from scratch.
inline std::vector<IdentityCheck> identity_suite()
{
    using detail::e12m;
    using detail::e21m;
    std::vector<IdentityCheck> out;
    auto record = [&out](std::string id, std::string desc, bool ok) {
        out.push_back({std::move(id), std::move(desc), ok});
    };

    // --- scalar mu-block reduction, over S_1 ------------------------------
    {
        bool ok = true;
        int m = 1;
        auto x = SnElement::x(m, 1), y = SnElement::y(m, 1);
        auto E00 = matrix_unit(m, 1, 0, 0);
        for (const Rational& l : detail::identity_lambdas()) {
            Rational f = l / (1 + l);
            auto lhs = e21m(m, y * (-inverse(1 + l))) * e12m(m, x * l) *
                       e21m(m, y) * e12m(m, x * (-f));
            auto rhs = CornerMatrix::diag2(m, SnElement::scalar(m, 1 + l),
                                           SnElement::scalar(m,
                                                             inverse(1 + l))) *
                       CornerMatrix::diag2(m, SnElement::one(m) - E00 * f,
                                           SnElement::one(m));
            ok = ok && lhs == rhs;
        }
        record("mu-block-reduction",
               "four elementaries reduce to diag(1+l, 1/(1+l)) "
               "diag(1 - l/(1+l) E00, 1)",
               ok);
    }

    // --- mu-block reduction twisted by a central idempotent ---------------
    for (bool lower_e : {false, true}) {
        bool ok = true;
        int m = 4;
        auto x = SnElement::x(m, 1), y = SnElement::y(m, 1);
        auto E00 = matrix_unit(m, 1, 0, 0);
        auto one = SnElement::one(m);
        for (const std::vector<int>& I :
             {std::vector<int>{2}, {3, 4}, {2, 3, 4}}) {
            auto e = idempotent(m, I);
            for (const Rational& l : detail::identity_lambdas()) {
                Rational f = l / (1 + l);
                auto u = one + e * l;        // 1 + l e
                auto ui = one - e * f;       // its inverse
                auto ylow = lower_e ? e * y : y;
                auto lhs = e21m(m, -(ui * ylow)) * e12m(m, e * x * l) *
                           e21m(m, ylow) * e12m(m, -(e * x * f));
                auto rhs = CornerMatrix::diag2(m, u, ui) *
                           CornerMatrix::diag2(m, one - e * E00 * f, one);
                ok = ok && lhs == rhs;
            }
        }
        record(lower_e ? "mu-block-reduction-idempotent-variant"
                       : "mu-block-reduction-idempotent",
               "mu-block reduction with entries scaled by a central "
               "idempotent e",
               ok);
    }

    // --- six elementaries flatten the (y 0; E00 x) block ------------------
    {
        int m = 1;
        auto x = SnElement::x(m, 1), y = SnElement::y(m, 1);
        auto E00 = matrix_unit(m, 1, 0, 0);
        auto one = SnElement::one(m);
        auto lhs = e21m(m, one) * e12m(m, -one) * e21m(m, one - x) *
                   CornerMatrix::block2(m, y, SnElement::zero(m), E00, x) *
                   e12m(m, x) * e21m(m, -y);
        record("block-diag-reduction",
               "six-factor product collapses (y 0; E00 x) to "
               "diag(1-2E00, 1)",
               lhs == CornerMatrix::diag2(m, one - E00 * 2, one));
    }

    // --- two-sided inverse of the twisted block ---------------------------
    {
        bool ok = true;
        int m = 2;
        auto x = SnElement::x(m, 1), y = SnElement::y(m, 1);
        auto E00 = matrix_unit(m, 1, 0, 0);
        auto one = SnElement::one(m);
        auto e = idempotent(m, {2});
        for (const Rational& l : detail::identity_lambdas()) {
            auto u = one + e * l;
            auto ui = one - e * (l / (1 + l));
            auto A = CornerMatrix::block2(m, y, SnElement::zero(m), u * E00, x);
            auto B = CornerMatrix::block2(m, x, ui * E00, SnElement::zero(m), y);
            ok = ok && (A * B).is_identity() && (B * A).is_identity();
        }
        record("block-inverse",
               "(y 0; uE00 x) and (x u^{-1}E00; 0 y) are mutual inverses",
               ok);
    }

    // --- flattening the twisted block, and its diagonal split -------------
    {
        bool ok = true;
        int m = 2;
        auto x = SnElement::x(m, 1), y = SnElement::y(m, 1);
        auto E00 = matrix_unit(m, 1, 0, 0);
        auto one = SnElement::one(m);
        auto e = idempotent(m, {2});
        for (const Rational& l : detail::identity_lambdas()) {
            auto u = one + e * l;
            auto lhs = e21m(m, one) * e12m(m, -one) * e21m(m, one - x) *
                       CornerMatrix::block2(m, y, SnElement::zero(m), u * E00,
                                            x) *
                       e12m(m, x) * e21m(m, -y);
            auto core = one - (one * 2 + e * l) * E00;
            ok = ok && lhs == CornerMatrix::diag2(m, core, one);
            ok = ok && CornerMatrix::diag2(m, core, one) ==
                           CornerMatrix::diag2(m, one - E00 * 2, one) *
                               CornerMatrix::diag2(m, one + e * E00 * l, one);
        }
        record("block-diag-reduction-twisted",
               "the twisted block collapses to diag(1-(2+le)E00, 1), which "
               "splits into two diagonal factors",
               ok);
    }

    // --- lower five-factor product ----------------------------------------
    {
        int m = 2;
        auto x1 = SnElement::x(m, 1), y1 = SnElement::y(m, 1);
        auto x2 = SnElement::x(m, 2), y2 = SnElement::y(m, 2);
        auto e2 = idempotent(m, {2});
        auto one = SnElement::one(m);
        auto lhs = e21m(m, -(x2 * y1)) * e12m(m, (y2 - one) * x1) *
                   e21m(m, y1) * e12m(m, -((y2 - one) * x1)) *
                   e12m(m, (y2 - one) * (one - x2) * x1);
        auto rhs = CornerMatrix::block2(m, one + (y2 - one) * x1 * y1,
                                        SnElement::zero(m), e2 * y1, x2);
        record("lower-five-product",
               "five elementaries assemble the lower-triangular companion "
               "of the theta block",
               lhs == rhs);
    }

    // --- lower five-factor product scaled by an idempotent ----------------
    {
        bool ok = true;
        for (const auto& [m, I] : std::vector<std::pair<int, std::vector<int>>>{
                 {3, {3}}, {4, {3, 4}}}) {
            auto x1 = SnElement::x(m, 1), y1 = SnElement::y(m, 1);
            auto x2 = SnElement::x(m, 2), y2 = SnElement::y(m, 2);
            auto e2 = idempotent(m, {2});
            auto eI = idempotent(m, I);
            auto one = SnElement::one(m);
            auto lhs = e21m(m, -(x2 * y1 * eI)) * e12m(m, (y2 - one) * x1) *
                       e21m(m, y1 * eI) * e12m(m, -((y2 - one) * x1)) *
                       e12m(m, (y2 - one) * (one - x2) * x1 * eI);
            auto rhs = CornerMatrix::block2(
                m, one + (y2 - one) * x1 * y1 * eI, SnElement::zero(m),
                e2 * y1 * eI, one + (x2 - one) * eI);
            ok = ok && lhs == rhs;
        }
        record("lower-five-product-idempotent",
               "idempotent-scaled variant of the five-factor lower product",
               ok);
    }

    // --- split-sum form of theta ------------------------------------------
    {
        bool ok = true;
        for (int m : {2, 3, 4}) {
            std::vector<int> J;
            for (int k = 1; k <= m; ++k)
                J.push_back(k);
            auto one = SnElement::one(m);
            auto e1 = idempotent(m, {1});
            auto e2 = idempotent(m, {2});
            SnElement eI = one;
            if (m >= 3) {
                std::vector<int> I(J.begin() + 2, J.end());
                eI = idempotent(m, I);
            }
            auto rhs = SnElement::x(m, 2) * e1 * eI +
                       (one - e1 * eI) * (one - e2 * eI) +
                       SnElement::y(m, 1) * e2 * eI;
            ok = ok && gen_theta(m, 1, 2, J) == rhs;
        }
        record("theta-split-sum",
               "theta_12(J) = x2 e1 eI + (1 - e1 eI)(1 - e2 eI) + y1 e2 eI",
               ok);
    }

    // --- theta block products ---------------------------------------------
    {
        int m = 2;
        auto x1 = SnElement::x(m, 1), y1 = SnElement::y(m, 1);
        auto x2 = SnElement::x(m, 2), y2 = SnElement::y(m, 2);
        auto e2 = idempotent(m, {2});
        auto one = SnElement::one(m);
        auto lhs =
            CornerMatrix::block2(m, x2, e2, SnElement::zero(m), y2) *
            CornerMatrix::block2(m, one + (y2 - one) * x1 * y1,
                                 SnElement::zero(m), e2 * y1, x2);
        record("theta-block-product",
               "block times lower companion equals diag(theta_12({1,2}), 1)",
               lhs == CornerMatrix::diag2(m, gen_theta(m, 1, 2, {1, 2}), one));
    }
    {
        bool ok = true;
        for (const auto& [m, I] : std::vector<std::pair<int, std::vector<int>>>{
                 {3, {3}}, {4, {3, 4}}}) {
            std::vector<int> J;
            for (int k = 1; k <= m; ++k)
                J.push_back(k);
            auto x1 = SnElement::x(m, 1), y1 = SnElement::y(m, 1);
            auto x2 = SnElement::x(m, 2), y2 = SnElement::y(m, 2);
            auto e2 = idempotent(m, {2});
            auto eI = idempotent(m, I);
            auto one = SnElement::one(m);
            auto co = one - eI;
            auto lhs =
                CornerMatrix::block2(m, x2, e2, SnElement::zero(m), y2) *
                CornerMatrix::block2(m, one + (y2 - one) * x1 * y1 * eI,
                                     SnElement::zero(m), e2 * y1 * eI,
                                     one + (x2 - one) * eI);
            auto th = gen_theta(m, 1, 2, J);
            auto residue = CornerMatrix::block2(m, one + (x2 - one) * co,
                                                e2 * co, SnElement::zero(m),
                                                eI + co * y2);
            ok = ok && lhs == CornerMatrix::block2(m, th + (x2 - one) * co,
                                                   e2 * co,
                                                   SnElement::zero(m),
                                                   eI + co * y2);
            ok = ok && lhs == CornerMatrix::diag2(m, th, one) * residue;
            // theta fixes the complement face
            ok = ok && th * co == co;
        }
        record("theta-block-product-idempotent",
               "block times idempotent-scaled companion factors through "
               "diag(theta_12(J), 1) and an upper-triangular residue",
               ok);
    }

    // --- residue reduction and diagonal split -----------------------------
    {
        bool ok = true;
        for (const auto& [m, I] : std::vector<std::pair<int, std::vector<int>>>{
                 {3, {3}}, {4, {3, 4}}}) {
            auto x2 = SnElement::x(m, 2), y2 = SnElement::y(m, 2);
            auto e2 = idempotent(m, {2});
            auto eI = idempotent(m, I);
            auto one = SnElement::one(m);
            auto co = one - eI;
            auto residue = CornerMatrix::block2(m, one + (x2 - one) * co,
                                                e2 * co, SnElement::zero(m),
                                                eI + co * y2);
            auto lhs = e12m(m, -((x2 - one + e2 * 2) * co)) * residue *
                       e21m(m, x2) * e12m(m, (one - y2) * co) *
                       e21m(m, -one - (x2 - one) * eI);
            auto core = one - e2 * co * 2;
            ok = ok && lhs == CornerMatrix::diag2(m, core, one);
            ok = ok && CornerMatrix::diag2(m, core, one) ==
                           CornerMatrix::diag2(m, one - e2 * 2, one) *
                               CornerMatrix::diag2(m, one - e2 * eI * 2, one);
        }
        record("residue-reduction",
               "the upper-triangular residue reduces to "
               "diag(1 - 2 e2 (1-eI), 1), which splits diagonally",
               ok);
    }

    // --- mu-block reduction over ambient components -----------------------
    {
        bool ok = true;
        int n = 4;
        auto one = SnElement::one(n);
        for (const Rational& l : detail::identity_lambdas()) {
            for (const std::vector<int>& I :
                 {std::vector<int>{1, 4}, {2, 4}, {1, 3, 4}, {1, 2, 3, 4}}) {
                auto mu = gen_mu(n, I, l);
                ok = ok && verify_inverse(mu, gen_mu(n, I, inverse(l)));
                // 1 + l' e_I with l' = l - 1 has inverse 1 - l'/(1+l') e_I
                auto e = idempotent(n, I);
                Rational lp = l - 1;
                if (lp != -1)
                    ok = ok &&
                         verify_inverse(one + e * lp,
                                        one - e * (lp / (1 + lp)));
            }
        }
        record("mu-inverse",
               "mu_I(l)^{-1} = mu_I(1/l) and (1+l e)^{-1} = 1 - l/(1+l) e",
               ok);
    }

    // --- commutator expansion ---------------------------------------------
    {
        bool ok = true;
        int n = 3;
        std::vector<std::pair<SnElement, SnElement>> pool = {
            {gen_mu(n, {1, 2}, 3), gen_mu(n, {1, 2}, Rational(1, 3))},
            {gen_theta(n, 1, 2, {1, 2}), gen_theta(n, 2, 1, {1, 2})},
            {gen_theta(n, 2, 3, {1, 2, 3}), gen_theta(n, 3, 2, {1, 2, 3})},
            {gen_mu(n, {3}, Rational(-1, 2)), gen_mu(n, {3}, -2)},
        };
        auto comm = [](const SnElement& a, const SnElement& ai,
                       const SnElement& b, const SnElement& bi) {
            return a * b * ai * bi;
        };
        auto conj = [](const SnElement& g, const SnElement& gi,
                       const SnElement& v) { return g * v * gi; };
        for (std::size_t p = 0; p < pool.size(); ++p) {
            for (std::size_t q = 0; q < pool.size(); ++q) {
                auto [a1, a1i] = pool[p];
                auto [b1, b1i] = pool[(p + 1) % pool.size()];
                auto [a2, a2i] = pool[q];
                auto [b2, b2i] = pool[(q + 2) % pool.size()];
                auto lhs = comm(a1 * b1, b1i * a1i, a2 * b2, b2i * a2i);
                auto rhs = conj(a1, a1i, comm(b1, b1i, a2, a2i)) *
                           conj(a1 * a2, a2i * a1i, comm(b1, b1i, b2, b2i)) *
                           comm(a1, a1i, a2, a2i) *
                           conj(a2, a2i, comm(a1, a1i, b2, b2i));
                ok = ok && lhs == rhs;
            }
        }
        record("commutator-expansion",
               "[a1 b1, a2 b2] expands through conjugated commutators",
               ok);
    }

    // --- theta/mu commutators ---------------------------------------------
    {
        bool okd = true, okr = true, okc = true;
        int n = 4;
        auto one = SnElement::one(n);
        int i = 1, j = 2;
        std::vector<int> J = {i, j, n};
        auto th = gen_theta(n, i, j, J);
        auto thi = gen_theta(n, j, i, J);
        for (const Rational& l : detail::identity_lambdas()) {
            auto comm = [&](int k) {
                auto mu = gen_mu(n, {k, n}, l);
                auto mui = gen_mu(n, {k, n}, inverse(l));
                return th * mu * thi * mui;
            };
            okd = okd && comm(3) == one;
            okr = okr && comm(i) == gen_mu(n, J, inverse(l));
            okc = okc &&
                  comm(j) == one + matrix_unit(n, j, 1, 1) *
                                 idempotent(n, {i, n}) * (l - 1);
        }
        record("theta-mu-commutator-disjoint",
               "[theta_ij(J), mu_{k,n}(l)] = 1 for k outside {i, j}", okd);
        record("theta-mu-commutator-row",
               "[theta_ij(J), mu_{i,n}(l)] = mu_J(l)^{-1}", okr);
        record("theta-mu-commutator-column",
               "[theta_ij(J), mu_{j,n}(l)] = 1 + (l-1) E11(j) e_i e_n", okc);
    }

    return out;
}

inline bool identity_suite_passed(const std::vector<IdentityCheck>& checks)
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

} // namespace snk1

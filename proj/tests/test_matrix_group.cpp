#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snk1/words.hpp"
#include "test_util.hpp"

using namespace snk1;

namespace {

std::vector<std::vector<int>> subsets_ge2(const std::vector<int>& base)
{
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(base.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                s.push_back(base[i]);
        if (s.size() >= 2)
            out.push_back(std::move(s));
    }
    return out;
}

// pool of units of S_n with known inverses
std::vector<std::pair<SnElement, SnElement>> unit_pool(int n)
{
    std::vector<std::pair<SnElement, SnElement>> pool;
    pool.emplace_back(gen_mu(n, {1, 2}, 3), gen_mu(n, {1, 2}, Rational(1, 3)));
    pool.emplace_back(gen_mu(n, {2}, Rational(-1, 2)), gen_mu(n, {2}, -2));
    pool.emplace_back(gen_theta(n, 1, 2, {1, 2}), gen_theta(n, 2, 1, {1, 2}));
    if (n >= 3) {
        pool.emplace_back(gen_theta(n, 1, 3, {1, 2, 3}),
                          gen_theta(n, 3, 1, {1, 2, 3}));
        pool.emplace_back(gen_mu(n, {1, 3}, 5),
                          gen_mu(n, {1, 3}, Rational(1, 5)));
    }
    auto a = SnElement::x(n, 1) * matrix_unit(n, 2, 0, 1);
    pool.emplace_back(SnElement::one(n) + a, SnElement::one(n) - a);
    auto b = matrix_unit(n, 1, 2, 0) * SnElement::y(n, 2);
    pool.emplace_back(SnElement::one(n) + b, SnElement::one(n) - b);
    return pool;
}

} // namespace

TEST_CASE("theta relations over all J in {1..4}, ambient 5")
{
    int n = 5;
    for (const auto& J : subsets_ge2({1, 2, 3, 4})) {
        for (int i : J) {
            for (int j : J) {
                if (i == j)
                    continue;
                auto tij = gen_theta(n, i, j, J);
                auto tji = gen_theta(n, j, i, J);
                REQUIRE(verify_inverse(tij, tji));
                for (int k : J) {
                    if (k == i || k == j)
                        continue;
                    REQUIRE(tij * gen_theta(n, j, k, J) ==
                            gen_theta(n, i, k, J));
                }
            }
        }
        // theta fixes the complement face: theta_ij(J)(1-e_{J\{i,j}}) = 1-e_I
        if (J.size() >= 3) {
            int i = J[0], j = J[1];
            std::vector<int> I(J.begin() + 2, J.end());
            auto co = SnElement::one(n) - idempotent(n, I);
            REQUIRE(gen_theta(n, i, j, J) * co == co);
        }
    }
}

TEST_CASE("mu relations")
{
    CHECK(verify_inverse(gen_mu(3, {1, 3}, 7), gen_mu(3, {1, 3}, Rational(1, 7))));
    CHECK(gen_mu(2, {1}, 2) * gen_mu(2, {1}, 3) == gen_mu(2, {1}, 6));
    CHECK(gen_mu(2, {1, 2}, 1) == SnElement::one(2));
    CHECK_THROWS_AS(gen_mu(2, {1}, 0), std::invalid_argument);

    // Y(i,I) X(i,I) = 1 but X(i,I) Y(i,I) != 1
    auto X = gen_X(3, 1, {2, 3});
    auto Y = gen_Y(3, 1, {2, 3});
    CHECK(Y * X == SnElement::one(3));
    CHECK(X * Y != SnElement::one(3));
}

TEST_CASE("as_matrix / as_element round trips")
{
    int n = 3;
    auto u = gen_theta(n, 1, 2, {1, 2, 3}); // contains component n = 3
    auto m = as_matrix(u);
    CHECK(as_element(m) == u);

    auto v = gen_mu(n, {2, 3}, 4);
    CHECK(as_element(as_matrix(v)) == v);

    // an element with no matrix-unit content at component n is rejected
    CHECK_THROWS_AS(as_matrix(SnElement::one(3) + SnElement::x(3, 1)),
                    NotInCongruenceFormError);

    // matrix -> element -> matrix on non-generator corner data
    CornerMatrix c(2);
    c.set(0, 2, SnElement::x(2, 1) * Rational(3, 2));
    c.set(1, 1, SnElement::one(2) + idempotent(2, {1, 2}));
    c.set(2, 0, -SnElement::y(2, 2));
    CHECK(as_matrix(as_element(c)) == c);
}

TEST_CASE("word evaluation is a homomorphism carrying inverses")
{
    int n = 3;
    GroupWord w(n);
    w.push(GeneratorToken::elem(0, 1, SnElement::x(2, 1)));
    w.push(GeneratorToken::mu({1, 3}, 5));
    w.push(GeneratorToken::theta(1, 2, {1, 2, 3}, 2));
    w.push(GeneratorToken::elem(2, 0, idempotent(2, {2}), -3));

    GroupWord w2(n);
    w2.push(GeneratorToken::theta(2, 1, {1, 2, 3}));
    w2.push(GeneratorToken::mu({2, 3}, Rational(-1, 2)));

    CHECK(word_eval(GroupWord(w).append(w2)) == word_eval(w) * word_eval(w2));
    CHECK(verify_inverse(word_eval(w), word_eval(word_inverse(w))));

    // the element picture agrees with the matrix picture
    CHECK(as_matrix(word_eval_element(w)) == word_eval(w));
}

TEST_CASE("whitehead word gives diag(u, u^{-1})")
{
    int n = 2;
    auto u = gen_mu(1, {1}, Rational(2, 3));
    auto ui = gen_mu(1, {1}, Rational(3, 2));
    auto w = whitehead_diag(n, u, ui, 0, 1);
    CHECK(word_eval(w) == CornerMatrix::diag2(1, u, ui));

    auto w2 = whitehead_diag(n, ui, u, 2, 4);
    CHECK(word_eval(w2) == CornerMatrix::diag2(1, ui, u, 2, 4));

    CHECK_THROWS_AS(whitehead_diag(n, u, u, 0, 1), std::invalid_argument);
}

TEST_CASE("mu block word hits diag(1 + lam e E00(c), 1)")
{
    int n = 3; // entry algebra S_2
    for (const Rational& lam :
         {Rational(1), Rational(-2), Rational(5), Rational(1, 2),
          Rational(-1, 3), Rational(-4)}) {
        for (int c : {1, 2}) {
            auto e = c == 1 ? idempotent(2, {2}) : SnElement::one(2);
            auto w = detail::mu_block_word(n, c, e, lam);
            CHECK(w.purely_elementary());
            auto target = CornerMatrix::diag2(
                2, SnElement::one(2) + matrix_unit(2, c, 0, 0) * e * lam,
                SnElement::one(2));
            REQUIRE(word_eval(w) == target);
        }
    }
    CHECK_THROWS_AS(detail::mu_block_word(3, 1, SnElement::one(2), -1),
                    std::invalid_argument);
}

TEST_CASE("block word hits (x_c, e_c; 0, y_c)")
{
    int n = 3;
    for (int c : {1, 2}) {
        auto w = detail::blockxy_word(n, c);
        CHECK(w.purely_elementary());
        auto target = CornerMatrix::block2(
            2, SnElement::x(2, c), matrix_unit(2, c, 0, 0),
            SnElement::zero(2), SnElement::y(2, c));
        REQUIRE(word_eval(w) == target);
    }
}

TEST_CASE("factor_mu_elementary")
{
    for (const Rational& lam :
         {Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 4),
          Rational(5), Rational(1)}) {
        for (const auto& [n, I] : std::vector<std::pair<int, std::vector<int>>>{
                 {2, {1, 2}}, {3, {1, 3}}, {3, {2, 3}}, {3, {1, 2, 3}},
                 {4, {1, 3, 4}}, {4, {1, 2, 3, 4}}}) {
            auto w = factor_mu_elementary(n, I, lam);
            CHECK(w.purely_elementary());
            REQUIRE(word_eval(w) == as_matrix(gen_mu(n, I, lam)));
        }
    }
    CHECK_THROWS_AS(factor_mu_elementary(3, {1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(factor_mu_elementary(3, {3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(factor_mu_elementary(3, {1, 3}, 0), std::invalid_argument);
}

TEST_CASE("factor_theta_elementary, |J| = 2")
{
    for (const auto& [n, i, j] : std::vector<std::array<int, 3>>{
             {3, 1, 2}, {3, 2, 1}, {4, 1, 3}, {4, 3, 2}}) {
        std::vector<int> J = {std::min(i, j), std::max(i, j)};
        auto w = factor_theta_elementary(n, i, j, J);
        CHECK(w.purely_elementary());
        auto target = CornerMatrix::diag2(n - 1, gen_theta(n - 1, i, j, J),
                                          SnElement::one(n - 1));
        REQUIRE(word_eval(w) == target);
    }
}

TEST_CASE("factor_theta_elementary, |J| = 3")
{
    for (const auto& [n, i, j, J] :
         std::vector<std::tuple<int, int, int, std::vector<int>>>{
             {4, 1, 2, {1, 2, 3}},
             {4, 3, 1, {1, 2, 3}},
             {4, 2, 3, {1, 2, 3}},
             {5, 2, 4, {1, 2, 4}}}) {
        auto w = factor_theta_elementary(n, i, j, J);
        CHECK(w.purely_elementary());
        REQUIRE(word_eval(w) ==
                CornerMatrix::diag2(n - 1, gen_theta(n - 1, i, j, J),
                                    SnElement::one(n - 1)));
    }
}

TEST_CASE("commutator expansion identity on random unit quadruples")
{
    int n = 3;
    auto pool = unit_pool(n);
    auto comm = [](const SnElement& a, const SnElement& ai, const SnElement& b,
                   const SnElement& bi) { return a * b * ai * bi; };
    auto conj = [](const SnElement& u, const SnElement& ui,
                   const SnElement& v) { return u * v * ui; };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 50; ++t) {
        auto [a1, a1i] = pool[pick(testutil::rng())];
        auto [b1, b1i] = pool[pick(testutil::rng())];
        auto [a2, a2i] = pool[pick(testutil::rng())];
        auto [b2, b2i] = pool[pick(testutil::rng())];
        auto lhs = comm(a1 * b1, b1i * a1i, a2 * b2, b2i * a2i);
        auto rhs = conj(a1, a1i, comm(b1, b1i, a2, a2i)) *
                   conj(a1 * a2, a2i * a1i, comm(b1, b1i, b2, b2i)) *
                   comm(a1, a1i, a2, a2i) *
                   conj(a2, a2i, comm(a1, a1i, b2, b2i));
        REQUIRE(lhs == rhs);
    }
}

#include "snk1/identities.hpp"

TEST_CASE("identity suite replays clean")
{
    auto checks = identity_suite();
    CHECK(checks.size() >= 15);
    for (const auto& c : checks) {
        INFO(c.id);
        REQUIRE(c.passed);
    }
}

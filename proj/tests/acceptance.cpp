// Acceptance battery: nine exact end-to-end criteria, one line of output
// each, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "snk1/identities.hpp"
#include "snk1/k1.hpp"
#include "snk1/words.hpp"
#include "test_util.hpp"

using namespace snk1;

namespace {

using Clock = std::chrono::steady_clock;

bool all_passed = true;

void report(int number, const char* name, bool ok, double seconds)
{
    all_passed = all_passed && ok;
    std::printf("%s  %d %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, name,
                seconds);
    std::fflush(stdout);
}

template <typename F>
void criterion(int number, const char* name, double budget, F&& f)
{
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        ok = false;
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && s > budget)
        ok = false;
    report(number, name, ok, s);
}

std::vector<std::vector<int>> subsets(const std::vector<int>& base,
                                      std::size_t min_size)
{
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(base.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                s.push_back(base[i]);
        if (s.size() >= min_size)
            out.push_back(std::move(s));
    }
    return out;
}

SnElement p_elementary(int n, const std::vector<int>& supp, int salt)
{
    auto& rng = testutil::rng();
    std::uniform_int_distribution<int> pick(0,
                                            static_cast<int>(supp.size()) - 1);
    std::uniform_int_distribution<int> pq(0, 2);
    int k = supp[pick(rng)];
    int p = pq(rng), q = pq(rng);
    if (p == q)
        q = (q + 1) % 3;
    SnElement b = idempotent(n, {k}) * testutil::random_rational();
    if (salt % 2)
        b = b * SnElement::x(n, k == 1 ? 2 : 1);
    return SnElement::one(n) +
           b * matrix_unit(n, n, static_cast<uint32_t>(p),
                           static_cast<uint32_t>(q));
}

struct TrackedUnit {
    SnElement a;
    std::map<std::pair<int, int>, int64_t> theta;
    std::map<int, Rational> lambda;
};

TrackedUnit tracked_unit(int n, const std::vector<int>& supp, int len)
{
    auto& rng = testutil::rng();
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::uniform_int_distribution<int> pick(0,
                                            static_cast<int>(supp.size()) - 1);
    static const std::vector<Rational> ls = {2, 3, Rational(1, 2),
                                             Rational(-3, 5)};
    TrackedUnit r{SnElement::one(n), {}, {}};
    for (int b = 0; b < static_cast<int>(supp.size()); ++b)
        for (int c = 0; c < b; ++c)
            r.theta[{supp[b], supp[c]}] = 0;
    for (int k : supp)
        r.lambda[k] = 1;
    for (int t = 0; t < len; ++t) {
        switch (kind(rng)) {
        case 0: {
            if (supp.size() < 2) {
                r.a = r.a * p_elementary(n, supp, t);
                break;
            }
            int bi = pick(rng), ci = pick(rng);
            if (bi == ci)
                break;
            int i = std::max(supp[bi], supp[ci]);
            int j = std::min(supp[bi], supp[ci]);
            bool inv = sgn(rng) == 1;
            r.a = r.a * (inv ? theta_pair(n, j, i) : theta_pair(n, i, j));
            r.theta[{i, j}] += inv ? -1 : 1;
            break;
        }
        case 1: {
            int k = supp[pick(rng)];
            const Rational& l = ls[static_cast<std::size_t>(t) % ls.size()];
            r.a = r.a * gen_mu(n, {k, n}, l);
            r.lambda[k] *= l;
            break;
        }
        default:
            r.a = r.a * p_elementary(n, supp, t);
        }
    }
    return r;
}

// --------------------------------------------------------------------------

bool identity_replay() { return identity_suite_passed(identity_suite()); }

bool theta_relations()
{
    int n = 5;
    for (const auto& J : subsets({1, 2, 3, 4}, 2)) {
        for (int i : J) {
            for (int j : J) {
                if (i == j)
                    continue;
                if (!verify_inverse(gen_theta(n, i, j, J),
                                    gen_theta(n, j, i, J)))
                    return false;
                for (int k : J) {
                    if (k == i || k == j)
                        continue;
                    if (!(gen_theta(n, i, j, J) * gen_theta(n, j, k, J) ==
                          gen_theta(n, i, k, J)))
                        return false;
                }
            }
        }
    }
    return true;
}

bool degree_table()
{
    for (int n : {3, 4}) {
        std::vector<int> base(n);
        std::iota(base.begin(), base.end(), 1);
        for (int s = 1; s <= n - 1; ++s) {
            for (const auto& J : subsets(base, static_cast<std::size_t>(s + 1))) {
                if (static_cast<int>(J.size()) != s + 1 || J.back() != n)
                    continue;
                int m = *std::max_element(J.begin(), J.end() - 1);
                for (int j : J) {
                    if (j == m)
                        continue;
                    auto th = gen_theta(n, m, j, J);
                    for (const auto& I :
                         subsets(base, static_cast<std::size_t>(s))) {
                        if (static_cast<int>(I.size()) != s)
                            continue;
                        for (int i : base) {
                            if (std::find(I.begin(), I.end(), i) != I.end())
                                continue;
                            std::vector<int> Jm = J, Jj = J;
                            Jm.erase(std::find(Jm.begin(), Jm.end(), m));
                            Jj.erase(std::find(Jj.begin(), Jj.end(), j));
                            int64_t expect = 0;
                            if (I == Jm && i == m)
                                expect = -1;
                            else if (I == Jj && i == j)
                                expect = 1;
                            if (deg_nIj(th, I, i) != expect)
                                return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool theta_factorization(int n, int i, int j, const std::vector<int>& J)
{
    GroupWord w = factor_theta_elementary(n, i, j, J);
    return w.purely_elementary() &&
           word_eval(w) == CornerMatrix::diag2(n - 1,
                                               gen_theta(n - 1, i, j, J),
                                               SnElement::one(n - 1));
}

bool generator_counts()
{
    const std::vector<std::size_t> expect = {1, 5, 17, 49, 129};
    for (int k = 0; k < 5; ++k)
        if (enumerate_generators(3 + k).size() != expect[k])
            return false;
    return true;
}

bool decompose_round_trip()
{
    int n = 4;
    auto supports = subsets({1, 2, 3}, 1);
    for (int t = 0; t < 100; ++t) {
        const auto& supp = supports[static_cast<std::size_t>(t) %
                                    supports.size()];
        auto r = tracked_unit(n, supp, 4);
        auto rep = decompose(r.a, supp);
        if (rep.theta_exponents != r.theta || rep.lambdas != r.lambda ||
            !rep.invariants_vanish)
            return false;
        // recomposition is verified inside decompose; confirm the membership
        // verdict matches the tallies
        bool trivial = true;
        for (const auto& [ij, m] : r.theta)
            trivial = trivial && m == 0;
        for (const auto& [k, l] : r.lambda)
            trivial = trivial && l == 1;
        if (rep.is_elementary() != trivial)
            return false;
    }
    return true;
}

bool multiplication_oracle()
{
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 2;
        SnElement a = SnElement::monomial(n, testutil::random_monomial(n, 4),
                                          testutil::random_rational());
        SnElement b = SnElement::monomial(n, testutil::random_monomial(n, 4),
                                          testutil::random_rational());
        if (!oracle_compare(a, b, 8))
            return false;
    }
    return true;
}

bool full_gl_classifier()
{
    int n = 3;
    auto& rng = testutil::rng();
    std::uniform_int_distribution<int> kind(0, 3);
    static const std::vector<Rational> ls = {Rational(7), Rational(-2),
                                             Rational(3, 4), Rational(1, 6)};
    for (int t = 0; t < 50; ++t) {
        SnElement a = SnElement::one(n);
        Rational expect = 1;
        for (int q = 0; q < 5; ++q) {
            switch (kind(rng)) {
            case 0: {
                const Rational& l =
                    ls[static_cast<std::size_t>(q + t) % ls.size()];
                a = a * gen_mu(n, {n}, l);
                expect *= l;
                break;
            }
            case 1:
                a = a * theta_pair(n, 2, 1);
                break;
            case 2:
                a = a * gen_mu(n, {1, n}, 5);
                break;
            default:
                a = a * p_elementary(n, {1, 2}, q + 5 * t);
            }
        }
        auto rep = decompose_full_gl(a);
        if (rep.lambda != expect)
            return false;
        LaurentUnit d = bdet(rep.elementary_part);
        if (!d.is_scalar() || d.coeff != 1)
            return false;
        if (!(gen_mu(n, {n}, rep.lambda) * rep.elementary_part == a))
            return false;
    }
    return true;
}

bool membership_criterion()
{
    int n = 3;
    std::vector<int> supp = {1, 2};
    for (int t = 0; t < 100; ++t) {
        SnElement a = SnElement::one(n);
        for (int q = 0; q < 4; ++q)
            a = a * p_elementary(n, supp, 4 * t + q);
        if (!is_elementary_product(a, supp))
            return false;
        SnElement spoiled = t % 2 ? theta_pair(n, 2, 1) * a
                                  : gen_mu(n, {1 + t % 2, n}, 5) * a;
        if (is_elementary_product(spoiled, supp))
            return false;
    }
    return true;
}

} // namespace

int main()
{
    criterion(1, "identity-replay", 10.0, identity_replay);
    criterion(2, "theta-relations", 5.0, theta_relations);
    criterion(3, "degree-table", 0.0, degree_table);
    criterion(4, "theta-factorization", 60.0, [] {
        return theta_factorization(3, 1, 2, {1, 2}) &&
               theta_factorization(4, 1, 2, {1, 2, 3});
    });
    criterion(5, "generator-counts", 0.0, generator_counts);
    criterion(6, "decompose-round-trip", 60.0, decompose_round_trip);
    criterion(7, "multiplication-oracle", 0.0, multiplication_oracle);
    criterion(8, "full-gl-classifier", 0.0, full_gl_classifier);
    criterion(9, "membership-criterion", 0.0, membership_criterion);
    std::printf("%s\n", all_passed ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
    return all_passed ? 0 : 1;
}

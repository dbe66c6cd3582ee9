// snk1 — command-line front end. Every command is a thin shell over the
// library operations; this file only parses arguments, moves data in and
// out, and formats results.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "snk1/identities.hpp"
#include "snk1/json_io.hpp"
#include "snk1/k1.hpp"
#include "snk1/parser.hpp"
#include "snk1/words.hpp"

namespace {

using namespace snk1;

// ---------------------------------------------------------------------------
// Formatting helpers (presentation only).

std::string split_factor_str(int component, const SplitFactor& f)
{
    switch (f.kind) {
    case SplitFactor::Kind::One:
        return "1";
    case SplitFactor::Kind::XPow:
        return "x" + std::to_string(component) +
               (f.p > 1 ? "^" + std::to_string(f.p) : "");
    case SplitFactor::Kind::YPow:
        return "y" + std::to_string(component) +
               (f.p > 1 ? "^" + std::to_string(f.p) : "");
    default:
        return "E(" + std::to_string(component) + ";" + std::to_string(f.p) +
               "," + std::to_string(f.q) + ")";
    }
}

std::string set_str(const std::vector<int>& I)
{
    std::string s = "{";
    for (std::size_t k = 0; k < I.size(); ++k)
        s += (k ? "," : "") + std::to_string(I[k]);
    return s + "}";
}

std::string token_str(const GeneratorToken& t)
{
    std::string s;
    switch (t.kind) {
    case GeneratorToken::Kind::Elem:
        s = "elem(" + std::to_string(t.row) + "," + std::to_string(t.col) +
            "; " + t.entry.str() + ")";
        break;
    case GeneratorToken::Kind::Mu:
        s = "mu(" + set_str(t.set) + "; " + to_string(t.lam) + ")";
        break;
    default:
        s = "theta(" + std::to_string(t.ti) + "," + std::to_string(t.tj) +
            "; " + set_str(t.set) + ")";
    }
    if (t.exponent != 1)
        s += "^" + std::to_string(t.exponent);
    return s;
}

// ---------------------------------------------------------------------------
// Input helpers.

Json read_json_source(const std::string& src)
{
    if (src == "-")
        return Json::parse(std::cin);
    std::ifstream in(src);
    if (!in)
        throw std::invalid_argument("cannot open " + src);
    return Json::parse(in);
}

// Element from expression text or, when matrix_src is set, from matrix JSON.
SnElement read_element(int n, const std::string& text,
                       const std::string& matrix_src)
{
    if (!matrix_src.empty()) {
        CornerMatrix m = matrix_from_json(read_json_source(matrix_src));
        if (m.entry_n() + 1 != n)
            throw std::invalid_argument(
                "matrix ambient count " + std::to_string(m.entry_n() + 1) +
                " does not match --n " + std::to_string(n));
        return as_element(m);
    }
    if (text.empty())
        throw std::invalid_argument("an element expression is required");
    return parse_element(text, n);
}


// "1,2,3" -> {1, 2, 3}
std::vector<int> int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad index list: " + text);
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty index list");
    return out;
}

// ---------------------------------------------------------------------------
// verify batteries: invariant checks beyond the displayed-identity replays.

std::mt19937_64& cli_rng()
{
    static std::mt19937_64 rng(20260823u);
    return rng;
}

SnElement random_word_unit(int n, int len)
{
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> comp(1, n - 1);
    std::uniform_int_distribution<int> pq(0, 2);
    static const std::vector<Rational> ls = {2, 3, Rational(-1, 2),
                                             Rational(5, 3)};
    SnElement u = SnElement::one(n);
    for (int t = 0; t < len; ++t) {
        switch (kind(cli_rng())) {
        case 0: {
            int i = comp(cli_rng());
            int j = comp(cli_rng());
            if (i == j)
                j = 1 + j % (n - 1);
            if (i == j)
                break;
            u = u * theta_pair(n, i, j);
            break;
        }
        case 1:
            u = u * gen_mu(n, {comp(cli_rng()), n},
                           ls[static_cast<std::size_t>(t) % ls.size()]);
            break;
        default: {
            int p = pq(cli_rng()), q = pq(cli_rng());
            if (p == q)
                q = (q + 1) % 3;
            SnElement a = idempotent(n, {comp(cli_rng())}) * Rational(t + 1, 2);
            u = u + u * a *
                        matrix_unit(n, n, static_cast<uint32_t>(p),
                                    static_cast<uint32_t>(q));
            break;
        }
        }
    }
    return u;
}

SnElement random_element(int n)
{
    std::uniform_int_distribution<int> tc(0, 4);
    std::uniform_int_distribution<int> ed(0, 2);
    std::uniform_int_distribution<int64_t> num(-9, 9);
    std::uniform_int_distribution<int64_t> den(1, 9);
    SnElement e = SnElement::zero(n);
    int k = tc(cli_rng());
    for (int t = 0; t < k; ++t) {
        SnMonomial m;
        m.alpha.resize(n);
        m.beta.resize(n);
        for (int i = 0; i < n; ++i) {
            m.alpha[i] = static_cast<uint32_t>(ed(cli_rng()));
            m.beta[i] = static_cast<uint32_t>(ed(cli_rng()));
        }
        e += SnElement::monomial(n, m,
                                 Rational(num(cli_rng()), den(cli_rng())));
    }
    return e;
}

std::vector<IdentityCheck> battery_checks()
{
    std::vector<IdentityCheck> out;
    auto add = [&out](std::string id, std::string desc, bool ok) {
        out.push_back({std::move(id), std::move(desc), ok});
    };

    {
        bool ok = true;
        int n = 4;
        for (int mask = 1; mask < 8; ++mask) {
            std::vector<int> J;
            for (int i = 0; i < 3; ++i)
                if (mask & (1 << i))
                    J.push_back(i + 1);
            if (J.size() < 2)
                continue;
            for (int i : J)
                for (int j : J) {
                    if (i == j)
                        continue;
                    ok = ok && verify_inverse(gen_theta(n, i, j, J),
                                              gen_theta(n, j, i, J));
                    for (int k : J)
                        if (k != i && k != j)
                            ok = ok &&
                                 gen_theta(n, i, j, J) *
                                         gen_theta(n, j, k, J) ==
                                     gen_theta(n, i, k, J);
                }
        }
        add("theta-relations", "inverse and composition relations", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            SnElement u = random_word_unit(3, 4);
            ok = as_element(as_matrix(u)) == u;
        }
        add("matrix-element-round-trip",
            "as_element after as_matrix is the identity", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            SnElement u = random_word_unit(3, 3);
            SnElement v = random_word_unit(3, 3);
            LaurentUnit du = bdet(u), dv = bdet(v), duv = bdet(u * v);
            ok = duv.as_element() == du.as_element() * dv.as_element() &&
                 duv.is_scalar();
        }
        add("bdet-multiplicative",
            "scalar determinant is multiplicative with vanishing exponent",
            ok);
    }
    {
        bool ok = true;
        int n = 4;
        auto a = gen_theta(n, 1, 2, {1, 2, 4});
        auto b = gen_theta(n, 3, 1, {1, 3, 4});
        for (const auto& u : {a, b, a * b})
            for (int mask = 1; mask < 8 && ok; ++mask) {
                std::vector<int> Jp;
                for (int i = 0; i < 3; ++i)
                    if (mask & (1 << i))
                        Jp.push_back(i + 1);
                if (Jp.size() != 2)
                    continue;
                Jp.push_back(4);
                ok = chi_J(psi_prime(u, 2), Jp) == 0;
            }
        add("lattice-character-kernel",
            "lattice invariant lies in the common character kernel", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            int n = 1 + t % 3;
            SnElement e = random_element(n);
            ok = parse_element(e.str(), n) == e;
        }
        add("parse-print-round-trip",
            "parser inverts the canonical printer on random elements", ok);
    }
    return out;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv)
{
    CLI::App app{"exact computations in the algebras of one-sided inverses"};
    app.require_subcommand(1);

    int n = 1;
    bool json = false;
    std::string expr, expr2, matrix_src, lam_text;
    std::string set_text, support_text;
    int gi = 0, gj = 0, degj = 0;

    auto add_common = [&](CLI::App* sub, bool needs_n = true) {
        auto* opt = sub->add_option("--n", n, "ambient component count");
        if (needs_n)
            opt->required();
        sub->add_flag("--json", json, "machine-readable output");
        return sub;
    };

    int code = 0;
    auto emit = [&json](const Json& j, const std::string& text) {
        if (json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text << "\n";
    };

    auto* c_eval = add_common(app.add_subcommand(
        "eval", "normal form of an element expression"));
    c_eval->add_option("expr", expr)->required();
    c_eval->callback([&] {
        SnElement e = parse_element(expr, n);
        emit(Json{{"n", n}, {"value", e.str()}}, e.str());
    });

    auto* c_mul = add_common(
        app.add_subcommand("mul", "product of two element expressions"));
    c_mul->add_option("lhs", expr)->required();
    c_mul->add_option("rhs", expr2)->required();
    c_mul->callback([&] {
        SnElement e = parse_element(expr, n) * parse_element(expr2, n);
        emit(Json{{"n", n}, {"value", e.str()}}, e.str());
    });

    auto* c_split = add_common(app.add_subcommand(
        "split", "decomposition in the per-component split basis"));
    c_split->add_option("expr", expr)->required();
    c_split->callback([&] {
        SplitElement s = to_split(parse_element(expr, n));
        Json terms = Json::array();
        std::ostringstream os;
        for (const auto& [t, c] : s.terms()) {
            Json factors = Json::array();
            std::string line = to_string(c);
            for (int i = 1; i <= n; ++i) {
                factors.push_back(split_factor_str(i, t[i - 1]));
                line += " * " + split_factor_str(i, t[i - 1]);
            }
            terms.push_back({{"coeff", to_string(c)}, {"factors", factors}});
            os << line << "\n";
        }
        if (json)
            std::cout << Json{{"n", n}, {"terms", terms}}.dump(2) << "\n";
        else
            std::cout << os.str();
    });

    auto* c_laurent = add_common(app.add_subcommand(
        "laurent", "image in the Laurent quotient (x -> x, y -> x^-1)"));
    c_laurent->add_option("expr", expr)->required();
    c_laurent->callback([&] {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        auto l = laurent_reduce(parse_element(expr, n), all);
        emit(Json{{"n", n}, {"value", l.str()}}, l.str());
    });

    auto* c_level = add_common(app.add_subcommand(
        "level", "ideal level (minimum matrix-unit count over split terms)"));
    c_level->add_option("expr", expr)->required();
    c_level->callback([&] {
        int l = ideal_level(parse_element(expr, n));
        emit(Json{{"n", n}, {"level", l}}, std::to_string(l));
    });

    auto* c_bdet = add_common(app.add_subcommand(
        "bdet", "scalar determinant of a congruence unit"));
    c_bdet->add_option("expr", expr);
    c_bdet->add_option("--matrix", matrix_src,
                       "matrix JSON file ('-' for stdin)");
    c_bdet->callback([&] {
        LaurentUnit d = bdet(read_element(n, expr, matrix_src));
        emit(Json{{"n", n},
                  {"coeff", to_string(d.coeff)},
                  {"exponent", d.expo.empty() ? int64_t{0} : d.expo[0]},
                  {"value", d.as_element().str()}},
             d.as_element().str());
    });

    auto* c_detI = add_common(app.add_subcommand(
        "detI", "determinant-type homomorphism at an index set"));
    c_detI->add_option("--set", set_text, "index set I")->required();
    c_detI->add_option("expr", expr)->required();
    c_detI->callback([&] {
        auto d = det_I(parse_element(expr, n), int_list(set_text));
        emit(Json{{"n", n}, {"I", int_list(set_text)}, {"value", d.str()}}, d.str());
    });

    auto* c_deg = add_common(app.add_subcommand(
        "deg", "degree homomorphism at an index set and variable"));
    c_deg->add_option("--set", set_text, "index set I")->required();
    c_deg->add_option("--j", degj, "variable index")->required();
    c_deg->add_option("expr", expr)->required();
    c_deg->callback([&] {
        int64_t d = deg_nIj(parse_element(expr, n), int_list(set_text), degj);
        emit(Json{{"n", n}, {"I", int_list(set_text)}, {"j", degj}, {"value", d}},
             std::to_string(d));
    });

    auto* c_theta = add_common(
        app.add_subcommand("theta", "the unit theta_ij(J) in normal form"));
    c_theta->add_option("i", gi)->required();
    c_theta->add_option("j", gj)->required();
    c_theta->add_option("--set", set_text, "index set J")->required();
    c_theta->callback([&] {
        auto e = gen_theta(n, gi, gj, int_list(set_text));
        emit(Json{{"n", n}, {"value", e.str()}}, e.str());
    });

    auto* c_mu = add_common(
        app.add_subcommand("mu", "the unit mu_I(lambda) in normal form"));
    c_mu->add_option("lambda", lam_text)->required();
    c_mu->add_option("--set", set_text, "index set I")->required();
    c_mu->callback([&] {
        auto e = gen_mu(n, int_list(set_text), rational_from_string(lam_text));
        emit(Json{{"n", n}, {"value", e.str()}}, e.str());
    });

    auto* c_dec = add_common(app.add_subcommand(
        "decompose", "canonical theta/mu/elementary decomposition"));
    c_dec->add_option("--support", support_text, "support index set")
        ->required();
    c_dec->add_option("expr", expr);
    c_dec->add_option("--matrix", matrix_src,
                      "matrix JSON file ('-' for stdin)");
    c_dec->callback([&] {
        auto rep = decompose(read_element(n, expr, matrix_src), int_list(support_text));
        if (json) {
            std::cout << decomposition_to_json(rep).dump(2) << "\n";
            return;
        }
        for (const auto& [ij, m] : rep.theta_exponents)
            std::cout << "n_" << ij.first << ij.second << " = " << m << "\n";
        for (const auto& [k, l] : rep.lambdas)
            std::cout << "lambda_" << k << " = " << to_string(l) << "\n";
        std::cout << "residual = " << rep.elementary_part.str() << "\n";
        std::cout << "is_elementary = "
                  << (rep.is_elementary() ? "true" : "false") << "\n";
    });

    auto* c_isel = add_common(app.add_subcommand(
        "is-elementary", "membership in the elementary subgroup"));
    c_isel->add_option("--support", support_text, "support index set")
        ->required();
    c_isel->add_option("expr", expr);
    c_isel->add_option("--matrix", matrix_src,
                       "matrix JSON file ('-' for stdin)");
    c_isel->callback([&] {
        bool el =
            is_elementary_product(read_element(n, expr, matrix_src), int_list(support_text));
        emit(Json{{"n", n}, {"is_elementary", el}}, el ? "true" : "false");
    });

    auto* c_fth = add_common(app.add_subcommand(
        "factor-theta",
        "all-elementary word for diag(theta_ij(J), 1) with exact check"));
    c_fth->add_option("i", gi)->required();
    c_fth->add_option("j", gj)->required();
    c_fth->add_option("--set", set_text, "index set J (inside 1..n-1)")
        ->required();
    c_fth->callback([&] {
        GroupWord w = factor_theta_elementary(n, gi, gj, int_list(set_text));
        bool ok = word_eval(w) ==
                  CornerMatrix::diag2(n - 1, gen_theta(n - 1, gi, gj, int_list(set_text)),
                                      SnElement::one(n - 1));
        if (json) {
            Json out = word_to_json(w);
            out["check"] = ok ? "pass" : "fail";
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& t : w.tokens)
                std::cout << token_str(t) << "\n";
            std::cout << "check: " << (ok ? "pass" : "fail") << "\n";
        }
        if (!ok)
            code = 3;
    });

    auto* c_k1 = add_common(
        app.add_subcommand("k1", "structure of the K_1 group"));
    c_k1->add_option("--support", support_text, "congruence support index set")
        ;
    c_k1->callback([&] {
        K1Report rep = support_text.empty() ? k1_report(n)
                                            : k1_report(n, int_list(support_text));
        emit(k1_to_json(rep), rep.group());
    });

    auto* c_verify = add_common(
        app.add_subcommand("verify-paper",
                           "replay the identity suite and invariant checks"),
        /*needs_n=*/false);
    c_verify->callback([&] {
        auto checks = identity_suite();
        auto extra = battery_checks();
        checks.insert(checks.end(), extra.begin(), extra.end());
        bool all = true;
        for (const auto& c : checks)
            all = all && c.passed;
        if (json) {
            Json out = identity_checks_to_json(checks);
            std::cout << Json{{"checks", out}, {"all_passed", all}}.dump(2)
                      << "\n";
        } else {
            for (const auto& c : checks)
                std::cout << (c.passed ? "pass  " : "FAIL  ") << c.id << " ("
                          << c.description << ")\n";
            std::cout << (all ? "all checks passed" : "CHECKS FAILED")
                      << "\n";
        }
        if (!all)
            code = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotAUnitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotInCongruenceFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralAnomaly& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }

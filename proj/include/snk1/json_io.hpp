#pragma once

#include <json.hpp>

#include "snk1/identities.hpp"
#include "snk1/k1.hpp"
#include "snk1/matrix.hpp"
#include "snk1/parser.hpp"
#include "snk1/words.hpp"

namespace snk1 {

using Json = nlohmann::json;

// Matrix schema: {"n": N, "entries": [{"row", "col", "value"}]} where N is
// the ambient component count and entries live over S_{N-1}. Each entry is
// the FULL value at its position; unspecified positions follow the identity
// pattern (diagonal "1", off-diagonal "0").
inline Json matrix_to_json(const CornerMatrix& m)
{
    Json entries = Json::array();
    for (const auto& [key, v] : m.entries())
        entries.push_back(
            {{"row", key.first}, {"col", key.second}, {"value", v.str()}});
    return Json{{"n", m.entry_n() + 1}, {"entries", std::move(entries)}};
}

inline CornerMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument(
            "matrix JSON needs an object with an integer \"n\"");
    int n = j["n"].get<int>();
    if (n < 1)
        throw std::invalid_argument("matrix JSON needs n >= 1");
    CornerMatrix m(n - 1);
    if (!j.contains("entries"))
        return m;
    if (!j["entries"].is_array())
        throw std::invalid_argument("matrix JSON \"entries\" must be a list");
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("row") || !e.contains("col") ||
            !e.contains("value") || !e["row"].is_number_integer() ||
            !e["col"].is_number_integer() || !e["value"].is_string())
            throw std::invalid_argument(
                "matrix entry needs integer \"row\"/\"col\" and a string "
                "\"value\"");
        if (e["row"].get<int>() < 0 || e["col"].get<int>() < 0)
            throw std::invalid_argument("matrix entry index is negative");
        m.set(e["row"].get<int>(), e["col"].get<int>(),
              parse_element(e["value"].get<std::string>(), n - 1));
    }
    return m;
}

inline Json theta_to_json(const ThetaDescriptor& t)
{
    return Json{{"i", t.i}, {"j", t.j}, {"J", t.J}};
}

inline Json decomposition_to_json(const DecompositionReport& rep)
{
    Json nij = Json::array();
    for (const auto& [ij, m] : rep.theta_exponents)
        nij.push_back({{"i", ij.first}, {"j", ij.second}, {"value", m}});
    Json lambda = Json::array();
    for (const auto& [k, l] : rep.lambdas)
        lambda.push_back({{"k", k}, {"value", to_string(l)}});
    return Json{{"support", rep.supp},
                {"n_ij", std::move(nij)},
                {"lambda", std::move(lambda)},
                {"residual", rep.elementary_part.str()},
                {"is_elementary", rep.is_elementary()}};
}

inline Json k1_to_json(const K1Report& rep)
{
    Json fg = Json::array(), gg = Json::array();
    for (const auto& t : rep.free_generators)
        fg.push_back(theta_to_json(t));
    for (const auto& t : rep.gl_generators)
        gg.push_back(theta_to_json(t));
    return Json{{"n", rep.n},
                {"support", rep.supp},
                {"group", rep.group()},
                {"free_rank", rep.free_rank},
                {"torus_rank", rep.torus_rank},
                {"free_generators", std::move(fg)},
                {"gl_generators", std::move(gg)}};
}

inline Json identity_checks_to_json(const std::vector<IdentityCheck>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back({{"id", c.id},
                       {"description", c.description},
                       {"status", c.passed ? "pass" : "fail"}});
    return out;
}

inline Json token_to_json(const GeneratorToken& t)
{
    switch (t.kind) {
    case GeneratorToken::Kind::Elem:
        return Json{{"kind", "elem"},
                    {"row", t.row},
                    {"col", t.col},
                    {"entry", t.entry.str()},
                    {"exponent", t.exponent}};
    case GeneratorToken::Kind::Mu:
        return Json{{"kind", "mu"},
                    {"I", t.set},
                    {"lambda", to_string(t.lam)},
                    {"exponent", t.exponent}};
    default:
        return Json{{"kind", "theta"},
                    {"i", t.ti},
                    {"j", t.tj},
                    {"J", t.set},
                    {"exponent", t.exponent}};
    }
}

inline Json word_to_json(const GroupWord& w)
{
    Json tokens = Json::array();
    for (const auto& t : w.tokens)
        tokens.push_back(token_to_json(t));
    return Json{{"n", w.n}, {"tokens", std::move(tokens)}};
}

} // namespace snk1

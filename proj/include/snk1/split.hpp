#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "snk1/sn_element.hpp"

namespace snk1 {

// Per-component factor of the direct-sum basis
//   S_1 = K (+) xK[x] (+) yK[y] (+) F.
// Unit(p,q) stands for the matrix unit E_pq of that component.
struct SplitFactor {
    enum class Kind : uint8_t { One, XPow, YPow, Unit };

    Kind kind = Kind::One;
    uint32_t p = 0; // XPow/YPow exponent, or Unit row
    uint32_t q = 0; // Unit column

    static SplitFactor one() { return {}; }
    static SplitFactor x_pow(uint32_t m)
    {
        if (m == 0)
            throw std::invalid_argument("XPow exponent must be positive");
        return {Kind::XPow, m, 0};
    }
    static SplitFactor y_pow(uint32_t m)
    {
        if (m == 0)
            throw std::invalid_argument("YPow exponent must be positive");
        return {Kind::YPow, m, 0};
    }
    static SplitFactor unit(uint32_t p, uint32_t q)
    {
        return {Kind::Unit, p, q};
    }

    bool is_unit_factor() const { return kind == Kind::Unit; }

    auto operator<=>(const SplitFactor&) const = default;
};

using SplitTuple = std::vector<SplitFactor>;

// The same element written in the per-component split basis; this is the
// basis in which the ideal-membership tests are closed form.
class SplitElement {
public:
    using TermMap = std::map<SplitTuple, Rational>;

    SplitElement() : n_(0) {}
    explicit SplitElement(int n) : n_(n) {}

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const SplitElement& o) const
    {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    SplitElement& add_term(const SplitTuple& t, const Rational& c)
    {
        if (c == 0)
            return *this;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
        return *this;
    }

private:
    int n_;
    TermMap terms_;
};

namespace detail {

// Split expansion of a single component x^a y^b:
//   a > b : x^{a-b} - sum_{k<b} E_{a-b+k,k}
//   a < b : y^{b-a} - sum_{k<a} E_{k,b-a+k}
//   a = b : 1 - sum_{k<a} E_{kk}
inline std::vector<std::pair<SplitFactor, int>>
split_component(uint32_t a, uint32_t b)
{
    std::vector<std::pair<SplitFactor, int>> out;
    if (a >= b) {
        uint32_t d = a - b;
        out.emplace_back(d ? SplitFactor::x_pow(d) : SplitFactor::one(), 1);
        for (uint32_t k = 0; k < b; ++k)
            out.emplace_back(SplitFactor::unit(d + k, k), -1);
    } else {
        uint32_t d = b - a;
        out.emplace_back(SplitFactor::y_pow(d), 1);
        for (uint32_t k = 0; k < a; ++k)
            out.emplace_back(SplitFactor::unit(k, d + k), -1);
    }
    return out;
}

} // namespace detail

inline SplitElement to_split(const SnElement& e)
{
    int n = e.n();
    SplitElement r(n);
    for (const auto& [m, c] : e.terms()) {
        // tensor product of the per-component expansions
        std::vector<std::pair<SplitTuple, int>> acc;
        acc.emplace_back(SplitTuple{}, 1);
        for (int i = 0; i < n; ++i) {
            auto comp = detail::split_component(m.alpha[i], m.beta[i]);
            std::vector<std::pair<SplitTuple, int>> next;
            next.reserve(acc.size() * comp.size());
            for (const auto& [t, s] : acc) {
                for (const auto& [f, fs] : comp) {
                    SplitTuple t2 = t;
                    t2.push_back(f);
                    next.emplace_back(std::move(t2), s * fs);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [t, s] : acc)
            r.add_term(t, c * s);
    }
    return r;
}

inline SnElement from_split(const SplitElement& s)
{
    int n = s.n();
    SnElement r(n);
    for (const auto& [t, c] : s.terms()) {
        // each factor is a monomial or a two-term binomial
        std::vector<std::pair<SnMonomial, int>> acc;
        acc.emplace_back(SnMonomial(n), 1);
        for (int i = 0; i < n; ++i) {
            const SplitFactor& f = t[i];
            std::vector<std::pair<std::pair<uint32_t, uint32_t>, int>> parts;
            switch (f.kind) {
            case SplitFactor::Kind::One:
                parts = {{{0u, 0u}, 1}};
                break;
            case SplitFactor::Kind::XPow:
                parts = {{{f.p, 0u}, 1}};
                break;
            case SplitFactor::Kind::YPow:
                parts = {{{0u, f.p}, 1}};
                break;
            case SplitFactor::Kind::Unit:
                parts = {{{f.p, f.q}, 1}, {{f.p + 1, f.q + 1}, -1}};
                break;
            }
            std::vector<std::pair<SnMonomial, int>> next;
            next.reserve(acc.size() * parts.size());
            for (const auto& [m, sg] : acc) {
                for (const auto& [ab, psg] : parts) {
                    SnMonomial m2 = m;
                    m2.alpha[i] = ab.first;
                    m2.beta[i] = ab.second;
                    next.emplace_back(std::move(m2), sg * psg);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [m, sg] : acc)
            r.add_term(m, c * sg);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ideal membership, decided on the split basis: the prime p_i is spanned by
// the split-basis terms carrying a Unit factor at component i.

struct IdealSpec {
    enum class Kind { HeightOne, PI, Ans, PPn };

    Kind kind;
    std::vector<int> indices; // HeightOne/PI: the index set; PPn: the support
    int level = 0;            // Ans: s
    int distinguished = 0;    // PPn: n

    static IdealSpec height_one(int i) { return {Kind::HeightOne, {i}, 0, 0}; }
    static IdealSpec p_I(std::vector<int> I)
    {
        return {Kind::PI, std::move(I), 0, 0};
    }
    static IdealSpec a_ns(int s) { return {Kind::Ans, {}, s, 0}; }
    static IdealSpec p_pn(std::vector<int> support, int n)
    {
        if (support.empty())
            throw std::invalid_argument("PPn: empty support");
        return {Kind::PPn, std::move(support), 0, n};
    }
};

namespace detail {

inline bool term_matches(const SplitTuple& t, const IdealSpec& spec)
{
    switch (spec.kind) {
    case IdealSpec::Kind::HeightOne:
    case IdealSpec::Kind::PI:
        for (int i : spec.indices)
            if (!t[i - 1].is_unit_factor())
                return false;
        return true;
    case IdealSpec::Kind::Ans: {
        int units = 0;
        for (const auto& f : t)
            units += f.is_unit_factor();
        return units >= spec.level;
    }
    case IdealSpec::Kind::PPn: {
        if (!t[spec.distinguished - 1].is_unit_factor())
            return false;
        for (int i : spec.indices)
            if (t[i - 1].is_unit_factor())
                return true;
        return false;
    }
    }
    return false;
}

} // namespace detail

inline bool in_ideal(const SnElement& a, const IdealSpec& spec)
{
    for (int i : spec.indices)
        SnElement::check_index(a.n(), i);
    if (spec.kind == IdealSpec::Kind::PPn)
        SnElement::check_index(a.n(), spec.distinguished);
    if (spec.kind == IdealSpec::Kind::Ans &&
        (spec.level < 1 || spec.level > a.n()))
        throw std::out_of_range("Ans level outside 1..n");
    SplitElement s = to_split(a);
    for (const auto& [t, c] : s.terms())
        if (!detail::term_matches(t, spec))
            return false;
    return true;
}

// Largest s with a in a_{n,s}; 0 when a is not in a_{n,1}. The zero element
// lies in every ideal, so it reports level n.
inline int ideal_level(const SnElement& a)
{
    SplitElement s = to_split(a);
    if (s.is_zero())
        return a.n();
    int level = a.n();
    for (const auto& [t, c] : s.terms()) {
        int units = 0;
        for (const auto& f : t)
            units += f.is_unit_factor();
        level = std::min(level, units);
    }
    return level;
}

} // namespace snk1

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "snk1/sn_element.hpp"

namespace snk1 {

// Syntax error with the 0-based offset of the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

// Recursive-descent parser for the element grammar:
//   expr   := ("+" | "-")? term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := rational | ("x"|"y") uint | "E(" uint ";" uint "," uint ")"
//           | "e(" uint ("," uint)* ")" | "(" expr ")"
// The optional leading sign closes the grammar over the canonical printer.
class ElementParser {
public:
    ElementParser(std::string_view text, int n) : text_(text), n_(n) {}

    SnElement parse()
    {
        SnElement v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    uint64_t parse_uint()
    {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an unsigned integer", pos_);
        uint64_t v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<uint64_t>(text_[pos_] - '0');
            if (v > (1u << 24))
                throw ParseError("integer literal too large", pos_);
            ++pos_;
        }
        return v;
    }

    int parse_index()
    {
        std::size_t at = pos_;
        uint64_t k = parse_uint();
        if (k < 1 || k > static_cast<uint64_t>(n_))
            throw ParseError("component index outside 1.." +
                                 std::to_string(n_),
                             at);
        return static_cast<int>(k);
    }

    SnElement expr()
    {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        SnElement v = term();
        if (neg)
            v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    SnElement term()
    {
        SnElement v = factor();
        while (eat('*'))
            v *= factor();
        return v;
    }

    SnElement factor()
    {
        SnElement v = atom();
        if (eat('^')) {
            uint64_t k = parse_uint();
            SnElement r = SnElement::one(n_);
            for (uint64_t t = 0; t < k; ++t)
                r *= v;
            return r;
        }
        return v;
    }

    SnElement atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected an atom", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return rational_atom();
        switch (c) {
        case 'x':
        case 'y': {
            ++pos_;
            int i = parse_index();
            return c == 'x' ? SnElement::x(n_, i) : SnElement::y(n_, i);
        }
        case 'E': {
            ++pos_;
            expect('(');
            int k = parse_index();
            expect(';');
            uint64_t p = parse_uint();
            expect(',');
            uint64_t q = parse_uint();
            expect(')');
            return matrix_unit(n_, k, static_cast<uint32_t>(p),
                               static_cast<uint32_t>(q));
        }
        case 'e': {
            ++pos_;
            expect('(');
            std::size_t at = pos_;
            std::vector<int> I = {parse_index()};
            while (eat(','))
                I.push_back(parse_index());
            expect(')');
            for (std::size_t a = 0; a < I.size(); ++a)
                for (std::size_t b = a + 1; b < I.size(); ++b)
                    if (I[a] == I[b])
                        throw ParseError("repeated index in idempotent", at);
            return idempotent(n_, I);
        }
        case '(': {
            ++pos_;
            SnElement v = expr();
            expect(')');
            return v;
        }
        default:
            throw ParseError("expected an atom", pos_);
        }
    }

    SnElement rational_atom()
    {
        uint64_t num = parse_uint();
        Rational r(num);
        if (eat('/')) {
            std::size_t at = pos_;
            uint64_t den = parse_uint();
            if (den == 0)
                throw ParseError("zero denominator", at);
            r /= Rational(den);
        }
        return SnElement::scalar(n_, r);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
};

} // namespace detail

inline SnElement parse_element(std::string_view text, int n)
{
    if (n < 1)
        throw std::invalid_argument("ambient count must be >= 1");
    return detail::ElementParser(text, n).parse();
}

} // namespace snk1

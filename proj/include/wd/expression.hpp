#ifndef WD_EXPRESSION_HPP
#define WD_EXPRESSION_HPP

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "wd/errors.hpp"
#include "wd/rational.hpp"

namespace wd {

// Recursive-descent parser for sums of products over a ring T:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' ['-'] digits]
//   primary := integer ['/' integer] | '(' expr ')' | ident ['[' ['-'] digits ']']
//
// Identifiers are resolved by the atom callback, which receives the full
// identifier text (including any "[n]" suffix) and the exponent applied to
// it, so Laurent atoms can accept negative powers. T needs +, -, * and
// multiplication by Rational.
template <class T>
class ExpressionParser {
public:
    using AtomResolver = std::function<std::optional<T>(std::string_view name, std::int64_t power)>;

    ExpressionParser(T one, AtomResolver atom) : one_(std::move(one)), atom_(std::move(atom)) {}

    T parse(std::string_view text)
    {
        text_ = text;
        pos_ = 0;
        T result = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    T parse_expr()
    {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        T acc = parse_term();
        if (negate)
            acc = acc * Rational(-1);
        while (true) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    T parse_term()
    {
        T acc = parse_factor();
        while (accept('*'))
            acc = acc * parse_factor();
        return acc;
    }

    std::string read_digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::optional<std::int64_t> read_exponent()
    {
        if (!accept('^'))
            return std::nullopt;
        bool neg = accept('-');
        std::int64_t k = std::stoll(read_digits());
        return neg ? -k : k;
    }

    T power_of(const T& base, std::int64_t k)
    {
        if (k < 0)
            fail("negative exponent on a non-atomic factor");
        T acc = one_;
        for (std::int64_t i = 0; i < k; ++i)
            acc = acc * base;
        return acc;
    }

    T parse_factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = read_digits();
            if (accept('/'))
                lit += "/" + read_digits();
            T value = one_ * parse_rational(lit);
            if (auto k = read_exponent())
                return power_of(value, *k);
            return value;
        }
        if (c == '(') {
            ++pos_;
            T inner = parse_expr();
            if (!accept(')'))
                fail("expected ')'");
            if (auto k = read_exponent())
                return power_of(inner, *k);
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '[') {
                ++pos_;
                accept('-');
                read_digits();
                if (!accept(']'))
                    fail("expected ']'");
            }
            std::string name;
            for (char ch : text_.substr(start, pos_ - start))
                if (!std::isspace(static_cast<unsigned char>(ch)))
                    name += ch;
            std::int64_t k = read_exponent().value_or(1);
            std::optional<T> atom = atom_(name, k);
            if (!atom)
                fail("unknown symbol '" + name + "'");
            return *atom;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    T one_;
    AtomResolver atom_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace wd

#endif

#include "solitonlab/symbolic/expr_parser.hpp"

#include <cctype>
#include <string>

#include "solitonlab/errors.hpp"
#include "solitonlab/symbolic/diff_poly.hpp"

namespace solitonlab::sym {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    DiffPoly run() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        DiffPoly out = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_space();
        if (!at_end() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    DiffPoly expr() {
        DiffPoly out = term();
        for (;;) {
            if (accept('+')) {
                out += term();
            } else if (accept('-')) {
                out -= term();
            } else {
                return out;
            }
        }
    }

    DiffPoly term() {
        DiffPoly out = unary();
        while (accept('*')) out *= unary();
        return out;
    }

    DiffPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    DiffPoly power() {
        DiffPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const std::string digits = integer();
            if (digits.size() > 4) throw ParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    DiffPoly primary() {
        skip_space();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            DiffPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Rational value{mpz_class{integer()}};
            skip_space();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                const std::size_t at = pos_;
                mpz_class den{integer()};
                if (den == 0) throw ParseError("zero denominator", at);
                value /= Rational(den);
            }
            return DiffPoly(value);
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            while (!at_end() && text_[pos_] == '\'') ++pos_;
            return DiffPoly(Symbol::from_name(text_.substr(start, pos_ - start)));
        }
        throw ParseError(std::string("unexpected '") + ch + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_diff_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace solitonlab::sym

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "qhnf/bivpoly.hpp"
#include "qhnf/errors.hpp"
#include "qhnf/field.hpp"

namespace qhnf {

namespace detail {

// Recursive-descent parser for polynomial expressions in x, y with scalar
// coefficients (integers, the parameter t, '+ - * / ^', parentheses).
// Division is only allowed by expressions free of x and y.
template <ExactField F>
class ExprParser {
public:
    ExprParser(std::string_view text, bool allow_xy) : s_(normalize(text)), allow_xy_(allow_xy) {}

    BivPoly<F> parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        BivPoly<F> v = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return v;
    }

private:
    // Maps the unicode minus sign and middle dot to ASCII so positions refer to the normalized text.
    static std::string normalize(std::string_view in) {
        std::string out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (in.substr(i, 3) == "\xE2\x88\x92") {
                out += '-';
                i += 2;
            } else if (in.substr(i, 2) == "\xC2\xB7") {
                out += '*';
                i += 1;
            } else {
                out += in[i];
            }
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    BivPoly<F> expr() {
        BivPoly<F> v = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    BivPoly<F> term() {
        BivPoly<F> v = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                v = v * factor();
            } else if (peek('/')) {
                ++pos_;
                std::size_t at = pos_;
                BivPoly<F> d = factor();
                if (d.is_zero()) throw DivisionByZero();
                if (d.size() != 1 || d.terms().begin()->first != Mono{0, 0}) {
                    pos_ = at;
                    fail("division by an expression in x or y");
                }
                v = v.scaled(d.constant_term().inv());
            } else if (starts_factor()) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    BivPoly<F> factor() {
        skip();
        if (peek('-')) {
            ++pos_;
            return -factor();
        }
        if (peek('+')) {
            ++pos_;
            return factor();
        }
        BivPoly<F> b = base();
        if (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (peek('-')) {
                neg = true;
                ++pos_;
            }
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            if (pos_ - start > 5) fail("exponent too large");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (neg) {
                if (b.size() != 1 || b.terms().begin()->first != Mono{0, 0}) fail("negative exponent of a non-scalar");
                return BivPoly<F>(b.constant_term().pow(-e));
            }
            BivPoly<F> r(F(1));
            for (long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    BivPoly<F> base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BivPoly<F> v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class n(std::string(s_.substr(start, pos_ - start)));
            return BivPoly<F>(F(Rational(n)));
        }
        if (c == 'x' || c == 'y') {
            if (!allow_xy_) fail(std::string("variable '") + c + "' not allowed in a scalar");
            ++pos_;
            return c == 'x' ? BivPoly<F>::x() : BivPoly<F>::y();
        }
        if (c == 't') {
            if constexpr (requires { F::t(); }) {
                ++pos_;
                return BivPoly<F>(F::t());
            } else {
                fail("parameter 't' requires the rational-functions field");
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string s_;
    bool allow_xy_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <ExactField F>
BivPoly<F> parse_poly(std::string_view text) {
    return detail::ExprParser<F>(text, true).parse();
}

template <ExactField F>
F parse_scalar(std::string_view text) {
    return detail::ExprParser<F>(text, false).parse().constant_term();
}

}  // namespace qhnf

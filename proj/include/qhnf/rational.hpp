#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qhnf {

/// Arbitrary-precision rational number, always stored in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT: implicit integer literals are convenient in formulas
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpz_class v) : v_(std::move(v)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// The prime field: every rational is a rational constant.
    bool is_rational_constant() const { return true; }
    Rational to_rational() const { return *this; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inv() const;
    Rational pow(long e) const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// floor(a): the usual integer part [a[.
    mpz_class floor() const;
    /// Strict integer part ]a]: the integer with ]a] < a <= ]a]+1.
    mpz_class strict_floor() const;

    std::string to_string() const;
    /// Whether printing needs parentheses when used as a factor.
    bool needs_parens() const { return false; }

    static Rational parse(std::string_view text);

private:
    mpq_class v_;
};

}  // namespace qhnf

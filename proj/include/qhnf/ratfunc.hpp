#pragma once

#include <string>
#include <string_view>

#include "qhnf/rational.hpp"
#include "qhnf/zpoly.hpp"

namespace qhnf {

/// Element of Q(t), the field of rational functions in one transcendental parameter.
///
/// Canonical form: num/den with num, den in Z[t], gcd(num, den) = 1 in Z[t]
/// (so the pair is jointly content-free) and lc(den) > 0. Zero is 0/1.
/// Equal values therefore have identical representations.
class RatFunc {
public:
    RatFunc() : den_(mpz_class(1)) {}
    RatFunc(long v) : num_(mpz_class(v)), den_(mpz_class(1)) {}  // NOLINT
    RatFunc(const Rational& r) : num_(r.num()), den_(r.den()) {}  // NOLINT
    RatFunc(ZPoly num, ZPoly den);
    explicit RatFunc(ZPoly num) : num_(std::move(num)), den_(mpz_class(1)) {}

    static RatFunc zero() { return RatFunc(0); }
    static RatFunc one() { return RatFunc(1); }
    /// The transcendental parameter t.
    static RatFunc t() { return RatFunc(ZPoly::t()); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    /// True iff the value lies in the prime field Q.
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_rational_constant().
    Rational to_rational() const;
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inv() const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Evaluates at t = t0; throws DivisionByZero at a pole.
    Rational eval(const Rational& t0) const;

    std::string to_string() const;
    bool needs_parens() const { return !is_rational_constant(); }

    static RatFunc parse(std::string_view text);

private:
    struct Raw {};
    RatFunc(ZPoly num, ZPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    ZPoly num_;
    ZPoly den_;
};

}  // namespace qhnf

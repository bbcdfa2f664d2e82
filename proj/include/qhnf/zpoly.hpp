#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qhnf/rational.hpp"

namespace qhnf {

/// Dense univariate polynomial in t with integer coefficients, low degree first.
/// The zero polynomial has no coefficients.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit ZPoly(const mpz_class& c) {
        if (c != 0) c_.push_back(c);
    }
    static ZPoly t() { return ZPoly(std::vector<mpz_class>{0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0); }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly scaled(const mpz_class& s) const;
    /// Divides every coefficient by `s`, which must divide all of them.
    ZPoly divexact(const mpz_class& s) const;
    /// Exact quotient in Z[t]; throws NotDivisible if `b` does not divide `*this`.
    ZPoly divexact(const ZPoly& b) const;

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Content-free part with positive leading coefficient.
    ZPoly primitive_part() const;
    /// lc(b)^(deg a - deg b + 1) * a mod b.
    ZPoly pseudo_remainder(const ZPoly& b) const;
    ZPoly derivative() const;
    Rational eval(const Rational& x) const;
    /// p(t0 + s) as a polynomial in s.
    std::vector<Rational> taylor_shift(const Rational& t0) const;

    /// Greatest common divisor in Z[t] with positive leading coefficient.
    friend ZPoly gcd(const ZPoly& a, const ZPoly& b);

    /// e.g. "3*t^2-t+1".
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

}  // namespace qhnf

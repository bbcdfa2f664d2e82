#include "qhnf/ratfunc.hpp"

#include "qhnf/errors.hpp"
#include "qhnf/parse.hpp"

namespace qhnf {

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(mpz_class(1));
        return;
    }
    ZPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational RatFunc::to_rational() const {
    if (!is_rational_constant()) throw Error("value depends on t: " + to_string());
    return Rational(num_.coeff(0), den_.coeff(0));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        return RatFunc(a.num_ + b.num_, ZPoly(mpz_class(1)), RatFunc::Raw{});
    }
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    ZPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Raw{});
    }
    ZPoly bd = a.den_.divexact(g);
    ZPoly dd = b.den_.divexact(g);
    ZPoly num = a.num_ * dd + b.num_ * bd;
    if (num.is_zero()) return RatFunc();
    ZPoly den = bd * b.den_;
    ZPoly g2 = gcd(num, g);
    if (!g2.is_one()) {
        num = num.divexact(g2);
        den = den.divexact(g2);
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::Raw{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) {
        return RatFunc(a.num_ * b.num_, ZPoly(mpz_class(1)), RatFunc::Raw{});
    }
    ZPoly g1 = gcd(a.num_, b.den_);
    ZPoly g2 = gcd(b.num_, a.den_);
    ZPoly an = g1.is_one() ? a.num_ : a.num_.divexact(g1);
    ZPoly bd = g1.is_one() ? b.den_ : b.den_.divexact(g1);
    ZPoly bn = g2.is_one() ? b.num_ : b.num_.divexact(g2);
    ZPoly ad = g2.is_one() ? a.den_ : a.den_.divexact(g2);
    return RatFunc(an * bn, ad * bd, RatFunc::Raw{});
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (num_.lc() < 0) return RatFunc(-den_, -num_, Raw{});
    return RatFunc(den_, num_, Raw{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational RatFunc::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero()) throw DivisionByZero();
    return num_.eval(t0) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    if (is_rational_constant()) return to_rational().to_string();
    auto wrap = [](const ZPoly& p) {
        std::string s = p.to_string();
        return p.is_constant() && p.lc() > 0 ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFunc RatFunc::parse(std::string_view text) { return parse_scalar<RatFunc>(text); }

}  // namespace qhnf

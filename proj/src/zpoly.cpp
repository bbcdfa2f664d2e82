#include "qhnf/zpoly.hpp"

#include <algorithm>
#include <utility>

#include "qhnf/errors.hpp"

namespace qhnf {

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a : b;
    const auto& small = a.c_.size() >= b.c_.size() ? b : a;
    ZPoly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::scaled(const mpz_class& s) const {
    if (s == 0) return {};
    ZPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

ZPoly ZPoly::divexact(const mpz_class& s) const {
    ZPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    return r;
}

ZPoly ZPoly::divexact(const ZPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) {
        for (const auto& c : c_) {
            if (!mpz_divisible_p(c.get_mpz_t(), b.c_[0].get_mpz_t())) throw NotDivisible();
        }
        return divexact(b.c_[0]);
    }
    if (degree() < b.degree()) {
        if (is_zero()) return {};
        throw NotDivisible();
    }
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(c_.size() - b.c_.size() + 1);
    const int db = b.degree();
    for (int i = degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.lc().get_mpz_t())) throw NotDivisible();
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), b.lc().get_mpz_t());
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) {
            mpz_submul(rem[i - db + j].get_mpz_t(), f.get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    for (int i = 0; i < db; ++i) {
        if (rem[i] != 0) throw NotDivisible();
    }
    return ZPoly(std::move(q));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lc() < 0) g = -g;
    return g == 1 ? *this : divexact(g);
}

ZPoly ZPoly::pseudo_remainder(const ZPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<mpz_class> r = c_;
    const int db = b.degree();
    int dr = degree();
    while (dr >= db && dr >= 0) {
        mpz_class lead = r[dr];
        for (auto& c : r) c *= b.lc();
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[dr - db + j].get_mpz_t(), lead.get_mpz_t(), b.c_[j].get_mpz_t());
        }
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(dr + 1);
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(r));
}

Rational ZPoly::eval(const Rational& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.value() + *it;
    return Rational(acc);
}

std::vector<Rational> ZPoly::taylor_shift(const Rational& t0) const {
    std::vector<mpq_class> a(c_.begin(), c_.end());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += t0.value() * a[j];
    }
    std::vector<Rational> r;
    r.reserve(n);
    for (auto& v : a) r.emplace_back(v);
    return r;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.primitive_part().scaled(b.content());
    if (b.is_zero()) return a.primitive_part().scaled(a.content());
    mpz_class cg;
    {
        mpz_class ca = a.content(), cb = b.content();
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    if (a.is_constant() || b.is_constant()) return ZPoly(cg);
    ZPoly p = a.primitive_part(), q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        if (q.is_constant()) return ZPoly(cg);
        ZPoly r = p.pseudo_remainder(q);
        p = std::move(q);
        q = r.primitive_part();
    }
    return p.primitive_part().scaled(cg);
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qhnf

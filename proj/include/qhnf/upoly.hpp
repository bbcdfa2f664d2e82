#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhnf/errors.hpp"
#include "qhnf/field.hpp"

namespace qhnf {

/// Dense univariate polynomial over an exact field, low degree first.
template <ExactField F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
    explicit UniPoly(const F& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    static UniPoly var() { return UniPoly(std::vector<F>{F(0), F(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& lc() const { return c_.back(); }
    F coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : F(0); }
    const std::vector<F>& coeffs() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const F& s) const {
        if (s.is_zero()) return {};
        UniPoly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& b) const {
        if (b.is_zero()) throw DivisionByZero();
        std::vector<F> rem = c_;
        if (degree() < b.degree()) return {UniPoly(), *this};
        std::vector<F> q(c_.size() - b.c_.size() + 1, F(0));
        const F inv_lc = b.lc().inv();
        const int db = b.degree();
        for (int i = degree(); i >= db; --i) {
            if (rem[i].is_zero()) continue;
            F f = rem[i] * inv_lc;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
        }
        rem.resize(db);
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const { return is_zero() ? *this : scaled(lc().inv()); }
    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> r(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
        return UniPoly(std::move(r));
    }
    F eval(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    bool is_squarefree() const {
        if (degree() <= 0) return true;
        return gcd(*this, derivative()).degree() == 0;
    }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            auto [neg, mag] = signed_text(c_[i]);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

}  // namespace qhnf

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhnf/errors.hpp"
#include "qhnf/field.hpp"
#include "qhnf/upoly.hpp"

namespace qhnf {

/// Exponent pair of the monomial x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;
    auto operator<=>(const Mono&) const = default;
};

/// (k,l)-weighted degree k*i + l*j.
inline long qdeg(Mono m, int k, int l) { return static_cast<long>(k) * m.i + static_cast<long>(l) * m.j; }

/// Sparse polynomial in x, y over an exact field. No zero coefficient is ever stored.
template <ExactField F>
class BivPoly {
public:
    using Terms = std::map<Mono, F>;

    BivPoly() = default;
    explicit BivPoly(const F& c) {
        if (!c.is_zero()) t_.emplace(Mono{0, 0}, c);
    }
    static BivPoly monomial(int i, int j, const F& c = F(1)) {
        BivPoly p;
        if (!c.is_zero()) p.t_.emplace(Mono{i, j}, c);
        return p;
    }
    static BivPoly x() { return monomial(1, 0); }
    static BivPoly y() { return monomial(0, 1); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    F coeff(int i, int j) const {
        auto it = t_.find(Mono{i, j});
        return it == t_.end() ? F(0) : it->second;
    }
    F constant_term() const { return coeff(0, 0); }

    void add_term(Mono m, const F& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    BivPoly& operator+=(const BivPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    BivPoly& operator-=(const BivPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend BivPoly operator+(BivPoly a, const BivPoly& b) { return a += b; }
    friend BivPoly operator-(BivPoly a, const BivPoly& b) { return a -= b; }
    BivPoly operator-() const {
        BivPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend BivPoly operator*(const BivPoly& a, const BivPoly& b) {
        BivPoly r;
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) r.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, ca * cb);
        }
        return r;
    }
    BivPoly& operator*=(const BivPoly& o) { return *this = *this * o; }
    BivPoly scaled(const F& s) const {
        if (s.is_zero()) return {};
        BivPoly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    friend bool operator==(const BivPoly& a, const BivPoly& b) { return a.t_ == b.t_; }

    BivPoly deriv_x() const {
        BivPoly r;
        for (const auto& [m, c] : t_) {
            if (m.i > 0) r.t_.emplace(Mono{m.i - 1, m.j}, c * F(static_cast<long>(m.i)));
        }
        return r;
    }
    BivPoly deriv_y() const {
        BivPoly r;
        for (const auto& [m, c] : t_) {
            if (m.j > 0) r.t_.emplace(Mono{m.i, m.j - 1}, c * F(static_cast<long>(m.j)));
        }
        return r;
    }

    /// Multiplies by x^di y^dj.
    BivPoly shifted(int di, int dj) const {
        BivPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), Mono{m.i + di, m.j + dj}, c);
        return r;
    }
    bool divisible_by_monomial(int di, int dj) const {
        return std::all_of(t_.begin(), t_.end(), [&](const auto& kv) { return kv.first.i >= di && kv.first.j >= dj; });
    }
    /// Divides by x^di y^dj; throws NotDivisible when some term is not a multiple.
    BivPoly div_monomial(int di, int dj) const {
        if (!divisible_by_monomial(di, dj)) throw NotDivisible();
        return shifted(-di, -dj);
    }

    int deg_x() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.i);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.j);
        return d;
    }
    std::optional<long> min_qdeg(int k, int l) const {
        std::optional<long> r;
        for (const auto& [m, c] : t_) {
            long d = qdeg(m, k, l);
            if (!r || d < *r) r = d;
        }
        return r;
    }
    std::optional<long> max_qdeg(int k, int l) const {
        std::optional<long> r;
        for (const auto& [m, c] : t_) {
            long d = qdeg(m, k, l);
            if (!r || d > *r) r = d;
        }
        return r;
    }
    /// The (k,l)-quasi-homogeneous component of degree m.
    BivPoly slice(long m, int k, int l) const {
        BivPoly r;
        for (const auto& [mo, c] : t_) {
            if (qdeg(mo, k, l) == m) r.t_.emplace_hint(r.t_.end(), mo, c);
        }
        return r;
    }
    /// Drops every monomial of quasi-degree > dmax.
    BivPoly truncated(long dmax, int k, int l) const {
        BivPoly r;
        for (const auto& [mo, c] : t_) {
            if (qdeg(mo, k, l) <= dmax) r.t_.emplace_hint(r.t_.end(), mo, c);
        }
        return r;
    }
    bool is_quasi_homogeneous(long m, int k, int l) const {
        return std::all_of(t_.begin(), t_.end(), [&](const auto& kv) { return qdeg(kv.first, k, l) == m; });
    }

    F eval(const F& x0, const F& y0) const {
        F acc(0);
        for (const auto& [m, c] : t_) acc += c * pow_field(x0, m.i) * pow_field(y0, m.j);
        return acc;
    }

    /// Terms listed by ascending quasi-degree, ties by ascending x-exponent.
    std::vector<std::pair<Mono, F>> ordered_terms(int k = 1, int l = 1) const {
        std::vector<std::pair<Mono, F>> v(t_.begin(), t_.end());
        std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
            long da = qdeg(a.first, k, l), db = qdeg(b.first, k, l);
            return da != db ? da < db : a.first.i < b.first.i;
        });
        return v;
    }

    std::string to_string(int k = 1, int l = 1) const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : ordered_terms(k, l)) {
            auto [neg, mag] = signed_text(c);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            if (m.i > 0) mono += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
            if (m.j > 0) mono += (mono.empty() ? "" : "*") + (m.j == 1 ? std::string("y") : "y^" + std::to_string(m.j));
            if (mono.empty()) {
                out += mag;
            } else if (mag == "1") {
                out += mono;
            } else {
                out += mag + "*" + mono;
            }
        }
        return out;
    }

private:
    static F pow_field(const F& b, int e) {
        F r(1);
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    }
    Terms t_;
};

/// Quasi-homogeneous components indexed by quasi-degree.
template <ExactField F>
using GradedSlices = std::map<long, BivPoly<F>>;

template <ExactField F>
GradedSlices<F> qh_components(const BivPoly<F>& p, int k, int l) {
    GradedSlices<F> out;
    for (const auto& [m, c] : p.terms()) out[qdeg(m, k, l)].add_term(m, c);
    return out;
}

template <ExactField F>
BivPoly<F> sum_slices(const GradedSlices<F>& s) {
    BivPoly<F> r;
    for (const auto& [d, p] : s) r += p;
    return r;
}

/// k x dP/dx + l y dP/dy; on a quasi-homogeneous slice of degree m this is m*P.
template <ExactField F>
BivPoly<F> radial_apply(const BivPoly<F>& p, int k, int l) {
    BivPoly<F> r;
    for (const auto& [m, c] : p.terms()) {
        long w = qdeg(m, k, l);
        if (w != 0) r.add_term(m, c * F(w));
    }
    return r;
}

/// Product with every monomial of quasi-degree > dmax discarded.
template <ExactField F>
BivPoly<F> mul_truncated(const BivPoly<F>& a, const BivPoly<F>& b, int k, int l, long dmax) {
    struct Entry {
        long d;
        Mono m;
        const F* c;
    };
    auto sorted = [&](const BivPoly<F>& p) {
        std::vector<Entry> v;
        v.reserve(p.size());
        for (const auto& [m, c] : p.terms()) v.push_back({qdeg(m, k, l), m, &c});
        std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.d < y.d; });
        return v;
    };
    auto va = sorted(a), vb = sorted(b);
    BivPoly<F> r;
    for (const auto& ea : va) {
        for (const auto& eb : vb) {
            if (ea.d + eb.d > dmax) break;
            r.add_term(Mono{ea.m.i + eb.m.i, ea.m.j + eb.m.j}, *ea.c * *eb.c);
        }
    }
    return r;
}

/// P(X, Y) with all monomials of quasi-degree > dmax discarded. X - x and Y - y
/// must only contain monomials of quasi-degree > k and > l respectively.
template <ExactField F>
BivPoly<F> compose_truncated(const BivPoly<F>& p, const BivPoly<F>& X, const BivPoly<F>& Y, int k, int l, long dmax) {
    const BivPoly<F> ax = X - BivPoly<F>::x();
    const BivPoly<F> by = Y - BivPoly<F>::y();
    auto tail_ok = [&](const BivPoly<F>& tail, long lead) {
        return std::all_of(tail.terms().begin(), tail.terms().end(),
                           [&](const auto& kv) { return qdeg(kv.first, k, l) > lead; });
    };
    if (!tail_ok(ax, k) || !tail_ok(by, l)) throw NotStrictMap();

    // Group by y-exponent: P = sum_j P_j(x) y^j, so P(X,Y) = sum_j P_j(X) Y^j.
    std::map<int, std::vector<std::pair<int, F>>> by_j;
    for (const auto& [m, c] : p.terms()) {
        if (qdeg(m, k, l) <= dmax) by_j[m.j].emplace_back(m.i, c);
    }
    if (by_j.empty()) return {};
    int max_i = 0, max_j = by_j.rbegin()->first;
    for (const auto& [j, v] : by_j) {
        for (const auto& [i, c] : v) max_i = std::max(max_i, i);
    }
    std::vector<BivPoly<F>> xp{BivPoly<F>(F(1))}, yp{BivPoly<F>(F(1))};
    for (int i = 1; i <= max_i; ++i) xp.push_back(mul_truncated(xp.back(), X, k, l, dmax));
    for (int j = 1; j <= max_j; ++j) yp.push_back(mul_truncated(yp.back(), Y, k, l, dmax));

    BivPoly<F> result;
    for (const auto& [j, v] : by_j) {
        BivPoly<F> inner;
        for (const auto& [i, c] : v) inner += xp[i].scaled(c);
        result += j == 0 ? inner.truncated(dmax, k, l) : mul_truncated(inner, yp[j], k, l, dmax);
    }
    return result;
}

/// Substitutes the monomial map (x, y) = (X^a Y^b, X^c Y^d) exponent-wise.
template <ExactField F>
BivPoly<F> apply_monomial_map(const BivPoly<F>& p, int a, int b, int c, int d) {
    BivPoly<F> r;
    for (const auto& [m, co] : p.terms()) r.add_term(Mono{a * m.i + c * m.j, b * m.i + d * m.j}, co);
    return r;
}

namespace detail {

// Leading monomial for division and gcd normalization: highest y-degree, then highest x-degree.
inline bool lead_less(Mono a, Mono b) { return a.j != b.j ? a.j < b.j : a.i < b.i; }

template <ExactField F>
std::pair<Mono, F> leading(const BivPoly<F>& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
        if (lead_less(best->first, it->first)) best = it;
    }
    return *best;
}

// P viewed in F[x][y]: element j holds the coefficient of y^j.
template <ExactField F>
std::vector<UniPoly<F>> to_y_major(const BivPoly<F>& p) {
    std::vector<std::vector<F>> raw(std::max(0, p.deg_y() + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& v = raw[m.j];
        if (static_cast<int>(v.size()) <= m.i) v.resize(m.i + 1, F(0));
        v[m.i] = c;
    }
    std::vector<UniPoly<F>> r;
    r.reserve(raw.size());
    for (auto& v : raw) r.emplace_back(std::move(v));
    return r;
}

template <ExactField F>
BivPoly<F> from_y_major(const std::vector<UniPoly<F>>& v) {
    BivPoly<F> r;
    for (std::size_t j = 0; j < v.size(); ++j) {
        for (int i = 0; i <= v[j].degree(); ++i) r.add_term(Mono{i, static_cast<int>(j)}, v[j].coeff(i));
    }
    return r;
}

template <ExactField F>
void trim_y(std::vector<UniPoly<F>>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

template <ExactField F>
UniPoly<F> content_y(const std::vector<UniPoly<F>>& v) {
    UniPoly<F> g;
    for (const auto& c : v) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

template <ExactField F>
std::vector<UniPoly<F>> divide_coeffs(const std::vector<UniPoly<F>>& v, const UniPoly<F>& g) {
    std::vector<UniPoly<F>> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(c.divmod(g).first);
    return r;
}

template <ExactField F>
std::vector<UniPoly<F>> primitive_y(const std::vector<UniPoly<F>>& v) {
    if (v.empty()) return v;
    return divide_coeffs(v, content_y(v));
}

// Pseudo-remainder of a by b in F[x][y].
template <ExactField F>
std::vector<UniPoly<F>> prem_y(std::vector<UniPoly<F>> a, const std::vector<UniPoly<F>>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UniPoly<F>& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        UniPoly<F> la = a.back();
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
        trim_y(a);
    }
    return a;
}

}  // namespace detail

/// Exact quotient P / Q; throws NotDivisible when Q does not divide P.
template <ExactField F>
BivPoly<F> exact_div(const BivPoly<F>& p, const BivPoly<F>& q) {
    if (q.is_zero()) throw DivisionByZero();
    auto [lm, lc] = detail::leading(q);
    const F inv_lc = lc.inv();
    BivPoly<F> rem = p, quot;
    while (!rem.is_zero()) {
        auto [rm, rc] = detail::leading(rem);
        if (rm.i < lm.i || rm.j < lm.j) throw NotDivisible();
        BivPoly<F> t = BivPoly<F>::monomial(rm.i - lm.i, rm.j - lm.j, rc * inv_lc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

/// Scales P so that its leading coefficient (highest y-degree, then highest x-degree) is 1.
template <ExactField F>
BivPoly<F> normalize_gcd(const BivPoly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(detail::leading(p).second.inv());
}

/// Greatest common divisor, normalized by normalize_gcd; gcd(0, 0) = 0.
template <ExactField F>
BivPoly<F> poly_gcd(const BivPoly<F>& p, const BivPoly<F>& q) {
    if (p.is_zero()) return normalize_gcd(q);
    if (q.is_zero()) return normalize_gcd(p);
    auto a = detail::to_y_major(p), b = detail::to_y_major(q);
    UniPoly<F> cont = gcd(detail::content_y(a), detail::content_y(b));
    a = detail::primitive_y(a);
    b = detail::primitive_y(b);
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<UniPoly<F>> g;
    if (b.size() <= 1) {
        g = {UniPoly<F>(F(1))};
    } else {
        while (true) {
            auto r = detail::prem_y(a, b);
            if (r.empty()) {
                g = b;
                break;
            }
            if (r.size() == 1) {
                g = {UniPoly<F>(F(1))};
                break;
            }
            a = std::move(b);
            b = detail::primitive_y(r);
        }
    }
    for (auto& c : g) c = c * cont;
    return normalize_gcd(detail::from_y_major(g));
}

}  // namespace qhnf

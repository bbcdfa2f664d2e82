#pragma once

#include <algorithm>

#include "qhnf/bivpoly.hpp"
#include "qhnf/counting.hpp"
#include "qhnf/errors.hpp"

namespace qhnf {

/// The 1-form a dx + b dy.
template <ExactField F>
struct OneForm {
    BivPoly<F> a;
    BivPoly<F> b;

    friend bool operator==(const OneForm&, const OneForm&) = default;
    OneForm& operator+=(const OneForm& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend OneForm operator+(OneForm x, const OneForm& y) { return x += y; }
    friend OneForm operator-(OneForm x, const OneForm& y) {
        x.a -= y.a;
        x.b -= y.b;
        return x;
    }
    OneForm scaled(const F& c) const { return {a.scaled(c), b.scaled(c)}; }

    /// Graded component omega_m = a_{m-k} dx + b_{m-l} dy.
    OneForm component(long m, int k, int l) const { return {a.slice(m - k, k, l), b.slice(m - l, k, l)}; }
    /// Lowest m with omega_m != 0, if any.
    std::optional<long> order(int k, int l) const {
        auto da = a.min_qdeg(k, l), db = b.min_qdeg(k, l);
        std::optional<long> r;
        if (da) r = *da + k;
        if (db && (!r || *db + l < *r)) r = *db + l;
        return r;
    }
    OneForm truncated(long dmax, int k, int l) const { return {a.truncated(dmax - k, k, l), b.truncated(dmax - l, k, l)}; }
    bool is_quasi_homogeneous(long m, int k, int l) const {
        return a.is_quasi_homogeneous(m - k, k, l) && b.is_quasi_homogeneous(m - l, k, l);
    }

    static OneForm exact(const BivPoly<F>& f) { return {f.deriv_x(), f.deriv_y()}; }
    /// The quasi-radial form l y dx - k x dy.
    static OneForm radial(int k, int l) {
        return {BivPoly<F>::monomial(0, 1, F(static_cast<long>(l))), BivPoly<F>::monomial(1, 0, F(-static_cast<long>(k)))};
    }
};

/// A 1-form known exactly in every graded component omega_m with m <= dmax.
template <ExactField F>
class Jet {
public:
    Jet(OneForm<F> form, int k, int l, long dmax) : form_(form.truncated(dmax, k, l)), k_(k), l_(l), dmax_(dmax) {}

    const OneForm<F>& form() const { return form_; }
    const BivPoly<F>& a() const { return form_.a; }
    const BivPoly<F>& b() const { return form_.b; }
    int k() const { return k_; }
    int l() const { return l_; }
    long dmax() const { return dmax_; }
    OneForm<F> component(long m) const { return form_.component(m, k_, l_); }
    Jet truncated(long dmax) const { return Jet(form_, k_, l_, std::min(dmax, dmax_)); }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    OneForm<F> form_;
    int k_;
    int l_;
    long dmax_;
};

/// omega = dh + s (l y dx - k x dy), both series cut at the jet's precision.
template <ExactField F>
struct HSDecomposition {
    BivPoly<F> h;  // quasi-degrees <= dmax
    BivPoly<F> s;  // quasi-degrees <= dmax - k - l
    long dmax = 0;
    friend bool operator==(const HSDecomposition&, const HSDecomposition&) = default;
};

/// q = omega(R) = k x a + l y b.
template <ExactField F>
BivPoly<F> contract_q(const OneForm<F>& w, int k, int l) {
    return w.a.shifted(1, 0).scaled(F(static_cast<long>(k))) + w.b.shifted(0, 1).scaled(F(static_cast<long>(l)));
}

/// p = (k - v) x a + (l - u) y b.
template <ExactField F>
BivPoly<F> contract_p(const OneForm<F>& w, const Weights& wt) {
    return w.a.shifted(1, 0).scaled(F(static_cast<long>(wt.k - wt.v))) +
           w.b.shifted(0, 1).scaled(F(static_cast<long>(wt.l - wt.u)));
}

template <ExactField F>
HSDecomposition<F> decompose_hs(const Jet<F>& jet) {
    const int k = jet.k(), l = jet.l();
    const BivPoly<F> q = contract_q(jet.form(), k, l);
    if (!q.constant_term().is_zero()) throw DegreeZeroObstruction();
    HSDecomposition<F> r;
    r.dmax = jet.dmax();
    // h_m = q_m / m, degree by degree.
    for (const auto& [m, c] : q.terms()) r.h.add_term(m, c / F(qdeg(m, k, l)));
    // s_m = (d_y a_{m+l} - d_x b_{m+k}) / (m + k + l).
    const BivPoly<F> curl = jet.a().deriv_y() - jet.b().deriv_x();
    for (const auto& [m, c] : curl.terms()) r.s.add_term(m, c / F(qdeg(m, k, l) + k + l));
    r.h = r.h.truncated(jet.dmax(), k, l);
    r.s = r.s.truncated(jet.dmax() - k - l, k, l);
    return r;
}

/// (d_x h + l y s) dx + (d_y h - k x s) dy, cut at dmax.
template <ExactField F>
Jet<F> reconstruct(const BivPoly<F>& h, const BivPoly<F>& s, int k, int l, long dmax) {
    OneForm<F> w = OneForm<F>::exact(h);
    w.a += s.shifted(0, 1).scaled(F(static_cast<long>(l)));
    w.b -= s.shifted(1, 0).scaled(F(static_cast<long>(k)));
    return Jet<F>(w, k, l, dmax);
}

/// Checks that x + alpha, y + beta, 1 + delta raise the weighted filtration strictly.
template <ExactField F>
bool is_strict_gauge(const BivPoly<F>& alpha, const BivPoly<F>& beta, const BivPoly<F>& delta, int k, int l) {
    auto above = [&](const BivPoly<F>& p, long lead) {
        auto lo = p.min_qdeg(k, l);
        return !lo || *lo > lead;
    };
    return above(alpha, k) && above(beta, l) && above(delta, 0);
}

/// (1 + delta) * phi^* omega with phi(x, y) = (x + alpha, y + beta), exact in every
/// graded component up to the jet's precision.
template <ExactField F>
Jet<F> gauge_pullback(const Jet<F>& jet, const BivPoly<F>& alpha, const BivPoly<F>& beta, const BivPoly<F>& delta) {
    const int k = jet.k(), l = jet.l();
    if (!is_strict_gauge(alpha, beta, delta, k, l)) throw NotStrictGauge();
    if (alpha.is_zero() && beta.is_zero() && delta.is_zero()) return jet;
    const long dmax = jet.dmax();
    const long ca = dmax - k, cb = dmax - l;
    const BivPoly<F> X = BivPoly<F>::x() + alpha, Y = BivPoly<F>::y() + beta;
    const BivPoly<F> ac = compose_truncated(jet.a(), X, Y, k, l, ca);
    const BivPoly<F> bc = compose_truncated(jet.b(), X, Y, k, l, cb);
    const BivPoly<F> one(F(1));

    BivPoly<F> na = mul_truncated(one + alpha.deriv_x(), ac, k, l, ca) + mul_truncated(beta.deriv_x(), bc, k, l, ca);
    BivPoly<F> nb = mul_truncated(alpha.deriv_y(), ac, k, l, cb) + mul_truncated(one + beta.deriv_y(), bc, k, l, cb);
    if (!delta.is_zero()) {
        na = mul_truncated(one + delta, na, k, l, ca);
        nb = mul_truncated(one + delta, nb, k, l, cb);
    }
    return Jet<F>(OneForm<F>{std::move(na), std::move(nb)}, k, l, dmax);
}

}  // namespace qhnf

#pragma once

#include <string>
#include <vector>

#include "qhnf/counting.hpp"
#include "qhnf/oneform.hpp"
#include "qhnf/spectral.hpp"
#include "qhnf/upoly.hpp"

namespace qhnf {

/// (x, y) = (X^A Y^B, X^C Y^D) in chart coordinates (X, Y).
struct MonomialMap {
    int A = 1, B = 0, C = 0, D = 1;

    long det() const { return static_cast<long>(A) * D - static_cast<long>(B) * C; }
    /// (this o other): first substitute `other`, then this map's exponents.
    MonomialMap after(const MonomialMap& o) const {
        // x = X^A Y^B with X = X'^{oA} Y'^{oB}, Y = X'^{oC} Y'^{oD}.
        return {A * o.A + B * o.C, A * o.B + B * o.D, C * o.A + D * o.C, C * o.B + D * o.D};
    }
    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// Chart of the principal divisor: (x, y) = (X^{k-v} Y^k, X^{l-u} Y^l); the divisor is {Y = 0}.
inline MonomialMap principal_chart(const Weights& w) { return {w.k - w.v, w.k, w.l - w.u, w.l}; }

/// The same divisor seen from its other end: X = 1/x_c, Y = x_c y_c, so that
/// (x, y) = (X^v Y^k, X^u Y^l). The point at infinity of the principal chart is X = 0.
inline MonomialMap opposite_chart(const Weights& w) { return {w.v, w.k, w.u, w.l}; }

/// (x, y) = (X^k Y^v, X^l Y^u): the chart where the principal divisor is {X = 0}
/// and meets the previous component at Y = 0.
inline MonomialMap previous_chart(const Weights& w) { return {w.k, w.v, w.l, w.u}; }

/// sigma^* omega = X^expX Y^expY * strict, with strict free of common monomial factors.
template <ExactField F>
struct FactoredPullback {
    int exp_x = 0;
    int exp_y = 0;
    OneForm<F> strict;
    friend bool operator==(const FactoredPullback&, const FactoredPullback&) = default;
};

template <ExactField F>
FactoredPullback<F> pullback_monomial(const OneForm<F>& w, const MonomialMap& m) {
    // dx = x (A dX/X + B dY/Y), dy = y (C dX/X + D dY/Y).
    const BivPoly<F> xa = apply_monomial_map(w.a.shifted(1, 0), m.A, m.B, m.C, m.D);
    const BivPoly<F> yb = apply_monomial_map(w.b.shifted(0, 1), m.A, m.B, m.C, m.D);
    auto lin = [](const BivPoly<F>& p, int cp, const BivPoly<F>& q, int cq) {
        return p.scaled(F(static_cast<long>(cp))) + q.scaled(F(static_cast<long>(cq)));
    };
    // The raw components carry the 1/X and 1/Y of dX/X and dY/Y.
    const BivPoly<F> rx = lin(xa, m.A, yb, m.C).div_monomial(1, 0);
    const BivPoly<F> ry = lin(xa, m.B, yb, m.D).div_monomial(0, 1);
    FactoredPullback<F> r;
    if (rx.is_zero() && ry.is_zero()) return r;
    int ex = 1 << 30, ey = 1 << 30;
    for (const BivPoly<F>* p : {&rx, &ry}) {
        for (const auto& [mo, c] : p->terms()) {
            ex = std::min(ex, mo.i);
            ey = std::min(ey, mo.j);
        }
    }
    r.exp_x = ex;
    r.exp_y = ey;
    r.strict = OneForm<F>{rx.div_monomial(ex, ey), ry.div_monomial(ex, ey)};
    return r;
}

/// Singular points of the strict transform on the principal divisor.
template <ExactField F>
struct PrincipalPoint {
    enum class Kind { zero, branch, infinity } kind;
    F coordinate;  // x_c for zero and branch points; unused at infinity
    int branch_index = -1;
};

template <ExactField F>
std::vector<PrincipalPoint<F>> singular_points_principal(const FoliationType& type, const SpectralData<F>& s) {
    validate_spectral(type, s);
    std::vector<PrincipalPoint<F>> out;
    out.push_back({PrincipalPoint<F>::Kind::zero, F(0), -1});
    for (std::size_t i = 0; i < s.c.size(); ++i) out.push_back({PrincipalPoint<F>::Kind::branch, s.c[i].inv(), static_cast<int>(i)});
    out.push_back({PrincipalPoint<F>::Kind::infinity, F(0), -1});
    return out;
}

/// Camacho-Sad index along {Y = 0} at X = z of a strict form
/// Y P(X) dX + Q(X) dY + O(Y^2) dX + O(Y) dY: minus the residue of P/Q at z.
template <ExactField F>
F camacho_sad(const OneForm<F>& strict, const F& z) {
    std::vector<F> p0, p1, q0;
    auto put = [](std::vector<F>& v, int i, const F& c) {
        if (static_cast<int>(v.size()) <= i) v.resize(i + 1, F(0));
        v[i] = c;
    };
    for (const auto& [m, c] : strict.a.terms()) {
        if (m.j == 0) put(p0, m.i, c);
        if (m.j == 1) put(p1, m.i, c);
    }
    for (const auto& [m, c] : strict.b.terms()) {
        if (m.j == 0) put(q0, m.i, c);
    }
    if (!UniPoly<F>(p0).is_zero()) throw NotInvariantDivisor();
    UniPoly<F> P(p1), Q(q0);
    if (Q.is_zero()) throw NotInvariantDivisor();
    if (!Q.eval(z).is_zero()) return F(0);
    const UniPoly<F> g = gcd(P, Q);
    if (g.degree() > 0) {
        P = P.divmod(g).first;
        Q = Q.divmod(g).first;
    }
    if (!Q.eval(z).is_zero()) return F(0);
    const F dq = Q.derivative().eval(z);
    if (dq.is_zero()) throw HigherOrderPole();
    return -P.eval(z) / dq;
}

/// Index of the principal point of the given kind, computed from omega by residues.
template <ExactField F>
F principal_index(const OneForm<F>& w, const Weights& wt, const PrincipalPoint<F>& pt) {
    if (pt.kind == PrincipalPoint<F>::Kind::infinity) {
        return camacho_sad(pullback_monomial(w, opposite_chart(wt)).strict, F(0));
    }
    return camacho_sad(pullback_monomial(w, principal_chart(wt)).strict, pt.coordinate);
}

/// The two standard charts of the point blow-up: y = x ybar, and x = xbar y.
template <ExactField F>
struct BlowupCharts {
    FactoredPullback<F> chart0;
    FactoredPullback<F> chart_inf;
};

template <ExactField F>
BlowupCharts<F> single_blowup(const OneForm<F>& w) {
    return {pullback_monomial(w, MonomialMap{1, 0, 1, 1}), pullback_monomial(w, MonomialMap{1, 1, 0, 1})};
}

}  // namespace qhnf

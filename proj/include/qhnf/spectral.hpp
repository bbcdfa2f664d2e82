#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qhnf/bivpoly.hpp"
#include "qhnf/counting.hpp"
#include "qhnf/errors.hpp"
#include "qhnf/oneform.hpp"
#include "qhnf/roots.hpp"

namespace qhnf {

/// Branch coefficients and Camacho-Sad indices of the initial part.
template <ExactField F>
struct SpectralData {
    F c0;
    std::vector<F> c;
    std::vector<F> lambda;
    F lambda0;
    F lambda_inf;
    friend bool operator==(const SpectralData&, const SpectralData&) = default;
};

/// Index at 0 forced when the x-axis is not a separatrix (eps0 = 0).
inline Rational frozen_lambda0(const Weights& w) { return Rational(-(w.l - w.u), w.l); }
/// Index at infinity forced when eps_inf = 0.
inline Rational frozen_lambda_inf(const Weights& w) { return Rational(-w.v, w.k); }

/// Left side of  sum lambda_i + eps0 (lambda0 + (l-u)/l) + epsInf (lambdaInf + v/k) + 1/(kl) = 0.
template <ExactField F>
F index_relation_residual(const FoliationType& type, const SpectralData<F>& s) {
    const Weights& w = type.w;
    F r = F(Rational(1, static_cast<long>(w.k) * w.l));
    for (const auto& x : s.lambda) r += x;
    if (type.eps0) r += s.lambda0 - F(frozen_lambda0(w));
    if (type.eps_inf) r += s.lambda_inf - F(frozen_lambda_inf(w));
    return r;
}

/// Branch data in canonical order: sorted by c_i, indices carried along.
template <ExactField F>
SpectralData<F> canonical_order(SpectralData<F> s) {
    std::vector<std::size_t> idx(s.c.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return canonical_less(s.c[a], s.c[b]); });
    SpectralData<F> r = s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        r.c[i] = s.c[idx[i]];
        r.lambda[i] = s.lambda[idx[i]];
    }
    return r;
}

/// Throws DegenerateBranches or RelationViolated when `s` is not admissible for `type`.
template <ExactField F>
void validate_spectral(const FoliationType& type, const SpectralData<F>& s) {
    if (static_cast<int>(s.c.size()) != type.n || static_cast<int>(s.lambda.size()) != type.n) {
        throw DegenerateBranches("expected " + std::to_string(type.n) + " branches");
    }
    if (s.c0.is_zero()) throw DegenerateBranches("c0 = 0");
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        if (s.c[i].is_zero()) throw DegenerateBranches("c_" + std::to_string(i + 1) + " = 0");
        for (std::size_t j = 0; j < i; ++j) {
            if (s.c[i] == s.c[j]) throw DegenerateBranches("repeated branch coefficient " + s.c[i].to_string());
        }
    }
    if (!type.eps0 && !(s.lambda0 == F(frozen_lambda0(type.w)))) {
        throw RelationViolated("lambda0 must be " + frozen_lambda0(type.w).to_string() + " when epsilon0 = 0");
    }
    if (!type.eps_inf && !(s.lambda_inf == F(frozen_lambda_inf(type.w)))) {
        throw RelationViolated("lambdaInf must be " + frozen_lambda_inf(type.w).to_string() + " when epsilonInf = 0");
    }
    if (!index_relation_residual(type, s).is_zero()) throw RelationViolated("indices do not sum to -1");
}

/// y^k - c x^l.
template <ExactField F>
BivPoly<F> branch(const Weights& w, const F& c) {
    return BivPoly<F>::monomial(0, w.k) - BivPoly<F>::monomial(w.l, 0, c);
}

/// q_d = c0 x^eps0 y^epsInf prod (y^k - c_i x^l).
template <ExactField F>
BivPoly<F> initial_q(const FoliationType& type, const SpectralData<F>& s) {
    BivPoly<F> q = BivPoly<F>::monomial(type.eps0, type.eps_inf, s.c0);
    for (const auto& c : s.c) q = q * branch(type.w, c);
    return q;
}

/// The quasi-homogeneous degree-d form with the given spectral data.
template <ExactField F>
OneForm<F> build_omega_d(const FoliationType& type, const SpectralData<F>& s) {
    validate_spectral(type, s);
    const Weights& w = type.w;
    const int n = type.n;
    std::vector<BivPoly<F>> br;
    for (const auto& c : s.c) br.push_back(branch(w, c));
    auto product_except = [&](int skip) {
        BivPoly<F> p(F(1));
        for (int j = 0; j < n; ++j) {
            if (j != skip) p = p * br[j];
        }
        return p;
    };
    const BivPoly<F> all = product_except(-1);

    // x a = c0 x^eps0 y^epsInf [sum lambda_i l c_i x^l prod_{j!=i} Y_j + eps0 (u - l lambda0 - l) prod Y_j]
    BivPoly<F> xa, yb;
    for (int i = 0; i < n; ++i) {
        const BivPoly<F> rest = product_except(i);
        xa += (rest * BivPoly<F>::monomial(w.l, 0, s.c[i])).scaled(s.lambda[i] * F(static_cast<long>(w.l)));
        yb += (rest * BivPoly<F>::monomial(0, w.k)).scaled(s.lambda[i] * F(static_cast<long>(w.k)));
    }
    if (type.eps0) xa += all.scaled(F(static_cast<long>(w.u - w.l)) - F(static_cast<long>(w.l)) * s.lambda0);
    if (type.eps_inf) yb += all.scaled(F(static_cast<long>(w.v)) + F(static_cast<long>(w.k)) * s.lambda_inf);
    const BivPoly<F> pre = BivPoly<F>::monomial(type.eps0, type.eps_inf, s.c0);
    xa = xa * pre;
    yb = (yb * pre).scaled(F(-1));
    return OneForm<F>{xa.div_monomial(1, 0), yb.div_monomial(0, 1)};
}

namespace detail {

// Coefficients of x^{l i} y^{k (n - i)} as a polynomial in z (y^k -> 1, x^l -> z).
template <ExactField F>
UniPoly<F> branch_polynomial(const BivPoly<F>& p, const Weights& w, int n) {
    std::vector<F> z(n + 1, F(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.i % w.l != 0 || m.j % w.k != 0 || m.i / w.l + m.j / w.k != n) {
            throw NotInClass("cofactor of the initial contraction is not a product of cuspidal branches");
        }
        z[m.i / w.l] = c;
    }
    return UniPoly<F>(std::move(z));
}

}  // namespace detail

/// The type compatible with the lowest quasi-degree of q = omega(R), given the axis flags.
template <ExactField F>
FoliationType infer_type(const Jet<F>& jet, int eps0, int eps_inf) {
    const int k = jet.k(), l = jet.l();
    auto d = contract_q(jet.form(), k, l).min_qdeg(k, l);
    if (!d) throw NotInClass("q vanishes identically");
    const long rest = *d - static_cast<long>(k) * eps0 - static_cast<long>(l) * eps_inf;
    const long kl = static_cast<long>(k) * l;
    if (rest < kl || rest % kl != 0) {
        throw NotInClass("lowest quasi-degree " + std::to_string(*d) + " of q is not n*k*l + k*eps0 + l*epsInf with n >= 1");
    }
    return FoliationType::make(k, l, static_cast<int>(rest / kl), eps0, eps_inf);
}

/// Axis flags read off the initial part of q: {x divides q_d, y divides q_d}.
template <ExactField F>
std::pair<int, int> detect_axes(const Jet<F>& jet) {
    const int k = jet.k(), l = jet.l();
    const BivPoly<F> q = contract_q(jet.form(), k, l);
    const auto d = q.min_qdeg(k, l);
    if (!d) throw NotInClass("q vanishes identically");
    const BivPoly<F> qd = q.slice(*d, k, l);
    return {qd.divisible_by_monomial(1, 0) ? 1 : 0, qd.divisible_by_monomial(0, 1) ? 1 : 0};
}

/// Spectral data of a degree-d initial part, branches in canonical order.
template <ExactField F>
SpectralData<F> recover_spectral(const FoliationType& type, const OneForm<F>& wd) {
    const Weights& w = type.w;
    const int n = type.n;
    const long d = type.d();
    if (!wd.is_quasi_homogeneous(d, w.k, w.l)) throw NotInClass("initial part is not quasi-homogeneous of degree " + std::to_string(d));
    const BivPoly<F> q = contract_q(wd, w.k, w.l), p = contract_p(wd, w);
    if (!q.divisible_by_monomial(type.eps0, type.eps_inf) || !p.divisible_by_monomial(type.eps0, type.eps_inf)) {
        throw NotInClass("axis factors missing from the initial contractions");
    }
    const UniPoly<F> qz = detail::branch_polynomial(q.div_monomial(type.eps0, type.eps_inf), w, n);
    const UniPoly<F> pz = detail::branch_polynomial(p.div_monomial(type.eps0, type.eps_inf), w, n);
    if (qz.degree() != n) throw DegenerateBranches("fewer than n cuspidal branches");
    const F c0 = qz.coeff(0);
    if (c0.is_zero()) throw DegenerateBranches("x divides the branch product");
    if (!qz.is_squarefree()) throw DegenerateBranches("repeated branch");
    const std::vector<F> roots = roots_in_field(qz);
    if (static_cast<int>(roots.size()) != n) throw NotFactoredOverField();

    SpectralData<F> s;
    s.c0 = c0;
    for (const auto& r : roots) s.c.push_back(r.inv());
    for (int i = 0; i < n; ++i) {
        F denom = c0;
        for (int j = 0; j < n; ++j) {
            if (j != i) denom *= F(1) - s.c[j] / s.c[i];
        }
        s.lambda.push_back(pz.eval(roots[i]) / denom);
    }
    s.lambda0 = -pz.coeff(0) / c0;
    F sum = F(-1) - s.lambda0;
    for (const auto& x : s.lambda) sum -= x;
    s.lambda_inf = sum;
    s = canonical_order(s);
    try {
        if (!(build_omega_d(type, s) == wd)) throw NotInClass("initial part is not determined by its branch data");
    } catch (const RelationViolated& e) {
        throw NotInClass(e.what());
    }
    return s;
}

enum class Verdict { pass, fail, skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

struct Condition {
    std::string name;
    Verdict verdict = Verdict::skipped;
    std::string detail;
    /// Informational conditions do not affect class membership.
    bool informational = false;
};

template <ExactField F>
struct MembershipReport {
    FoliationType type;
    std::vector<Condition> conditions;
    std::optional<SpectralData<F>> spectral;

    bool in_class() const {
        return std::all_of(conditions.begin(), conditions.end(),
                           [](const Condition& c) { return c.informational || c.verdict == Verdict::pass; });
    }
    const Condition* find(const std::string& name) const {
        for (const auto& c : conditions) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
    /// The first failing class condition, if any.
    const Condition* first_failure() const {
        for (const auto& c : conditions) {
            if (!c.informational && c.verdict != Verdict::pass) return &c;
        }
        return nullptr;
    }
};

/// The indices that are not frozen by the axis flags.
template <ExactField F>
std::vector<F> free_indices(const FoliationType& type, const SpectralData<F>& s) {
    std::vector<F> out = s.lambda;
    if (type.eps0) out.push_back(s.lambda0);
    if (type.eps_inf) out.push_back(s.lambda_inf);
    return out;
}

/// Checks every membership condition of the class and records a verdict for each.
template <ExactField F>
MembershipReport<F> verify_membership(const Jet<F>& jet, const FoliationType& type) {
    MembershipReport<F> r;
    r.type = type;
    const Weights& w = type.w;
    const long d = type.d();
    auto add = [&](std::string name, Verdict v, std::string detail = {}, bool info = false) {
        r.conditions.push_back(Condition{std::move(name), v, std::move(detail), info});
    };

    const bool axis_ok = jet.a().divisible_by_monomial(0, type.eps_inf) && jet.b().divisible_by_monomial(type.eps0, 0);
    add("axisDivisibility", axis_ok ? Verdict::pass : Verdict::fail,
        axis_ok ? "" : (type.eps_inf && !jet.a().divisible_by_monomial(0, 1) ? "y does not divide a" : "x does not divide b"));

    const BivPoly<F> q = contract_q(jet.form(), w.k, w.l), p = contract_p(jet.form(), w);
    auto order_ok = [&](const BivPoly<F>& f) {
        auto lo = f.min_qdeg(w.k, w.l);
        return lo && *lo >= d;
    };
    const bool q_ok = order_ok(q) && !q.slice(d, w.k, w.l).is_zero();
    add("qOrder", q_ok ? Verdict::pass : Verdict::fail, q_ok ? "" : "q is not of order exactly d = " + std::to_string(d));
    const bool p_ok = p.is_zero() || order_ok(p);
    add("pOrder", p_ok ? Verdict::pass : Verdict::fail, p_ok ? "" : "p has terms below degree d");

    const OneForm<F> wd = jet.component(d);
    const BivPoly<F> qd = q.slice(d, w.k, w.l), pd = p.slice(d, w.k, w.l);
    bool shape_ok = false;
    BivPoly<F> qc, pc;
    if (q_ok && qd.divisible_by_monomial(type.eps0, type.eps_inf) && pd.divisible_by_monomial(type.eps0, type.eps_inf)) {
        qc = qd.div_monomial(type.eps0, type.eps_inf);
        pc = pd.div_monomial(type.eps0, type.eps_inf);
        try {
            UniPoly<F> qz = detail::branch_polynomial(qc, w, type.n);
            if (qz.degree() != type.n) {
                add("branchShape", Verdict::fail, "y divides the branch product");
            } else if (qz.coeff(0).is_zero()) {
                add("branchShape", Verdict::fail, "x divides the branch product");
            } else if (!qz.is_squarefree()) {
                add("branchShape", Verdict::fail, "repeated branch coefficient");
            } else {
                shape_ok = true;
                add("branchShape", Verdict::pass);
            }
        } catch (const NotInClass& e) {
            add("branchShape", Verdict::fail, e.what());
        }
    } else {
        add("branchShape", q_ok ? Verdict::fail : Verdict::skipped, q_ok ? "axis factors missing from q_d or p_d" : "");
    }

    if (shape_ok) {
        const BivPoly<F> g = poly_gcd(qc, pc);
        const bool coprime = g.size() == 1 && g.terms().begin()->first == Mono{0, 0};
        add("initialCoprime", coprime ? Verdict::pass : Verdict::fail, coprime ? "" : "common factor " + g.to_string(w.k, w.l));
    } else {
        add("initialCoprime", Verdict::skipped);
    }

    if (shape_ok) {
        try {
            r.spectral = recover_spectral(type, wd);
        } catch (const NotFactoredOverField& e) {
            add("branchesInField", Verdict::fail, e.what());
        } catch (const Error& e) {
            add("branchesInField", Verdict::fail, e.what());
        }
    }
    if (r.spectral) {
        add("branchesInField", Verdict::pass);
        std::string bad;
        bool all_irr = true;
        for (const auto& x : free_indices(type, *r.spectral)) {
            if (x.is_rational_constant()) {
                all_irr = false;
                if (x.to_rational().sign() > 0) bad = x.to_string();
            }
        }
        add("indicesNotPositiveRational", bad.empty() ? Verdict::pass : Verdict::fail,
            bad.empty() ? "" : "index " + bad + " is a positive rational");
        add("indicesIrrational", all_irr ? Verdict::pass : Verdict::fail,
            all_irr ? "" : "some index is rational (genericity fails)", true);
    } else {
        if (!r.find("branchesInField")) add("branchesInField", Verdict::skipped);
        add("indicesNotPositiveRational", Verdict::skipped);
        add("indicesIrrational", Verdict::skipped, "", true);
    }
    return r;
}

}  // namespace qhnf

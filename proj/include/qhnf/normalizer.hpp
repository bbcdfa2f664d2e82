#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qhnf/counting.hpp"
#include "qhnf/linalg.hpp"
#include "qhnf/oneform.hpp"
#include "qhnf/spectral.hpp"

namespace qhnf {

/// Monomials of quasi-degree m, by ascending x-exponent.
inline std::vector<Mono> qp_basis(int k, int l, long m) {
    std::vector<Mono> out;
    if (m < 0) return out;
    for (long i = 0; static_cast<long>(k) * i <= m; ++i) {
        const long rest = m - static_cast<long>(k) * i;
        if (rest % l == 0) out.push_back(Mono{static_cast<int>(i), static_cast<int>(rest / l)});
    }
    return out;
}

/// A = m a_{d-k} + d_x q_d and B = m b_{d-l} + d_y q_d, with Abar = A/y, Bbar = B/x.
template <ExactField F>
struct ABPair {
    long m = 0;
    BivPoly<F> A, B, Abar, Bbar;
};

template <ExactField F>
ABPair<F> ab_polys(const FoliationType& type, const OneForm<F>& wd, long m) {
    if (!type.eps0 || !type.eps_inf) throw AxisRequired();
    const BivPoly<F> qd = contract_q(wd, type.w.k, type.w.l);
    ABPair<F> r;
    r.m = m;
    r.A = wd.a.scaled(F(m)) + qd.deriv_x();
    r.B = wd.b.scaled(F(m)) + qd.deriv_y();
    r.Abar = r.A.div_monomial(0, 1);
    r.Bbar = r.B.div_monomial(1, 0);
    return r;
}

/// One elementary strict gauge: (x + alpha, y + beta) and the unit 1 + delta.
template <ExactField F>
struct GaugeStep {
    long m = 0;
    BivPoly<F> alpha, beta, delta;

    bool is_identity() const { return alpha.is_zero() && beta.is_zero() && delta.is_zero(); }
    /// U = alpha + k/(d+m) x delta.
    BivPoly<F> U(const FoliationType& t) const {
        return alpha + delta.shifted(1, 0).scaled(F(Rational(t.w.k, t.d() + m)));
    }
    /// V = beta + l/(d+m) y delta.
    BivPoly<F> V(const FoliationType& t) const {
        return beta + delta.shifted(0, 1).scaled(F(Rational(t.w.l, t.d() + m)));
    }
};

/// Accumulated strict gauge: (phiX, phiY) and the unit, kept below the jet's precision.
template <ExactField F>
struct Gauge {
    BivPoly<F> phi_x = BivPoly<F>::x();
    BivPoly<F> phi_y = BivPoly<F>::y();
    BivPoly<F> unit = BivPoly<F>(F(1));

    bool is_identity() const {
        return phi_x == BivPoly<F>::x() && phi_y == BivPoly<F>::y() && unit == BivPoly<F>(F(1));
    }
    friend bool operator==(const Gauge&, const Gauge&) = default;
};

/// unit * Phi^* omega.
template <ExactField F>
Jet<F> apply_gauge(const Jet<F>& jet, const Gauge<F>& g) {
    return gauge_pullback(jet, g.phi_x - BivPoly<F>::x(), g.phi_y - BivPoly<F>::y(), g.unit - BivPoly<F>(F(1)));
}

/// The gauge "first g, then step": Phi o phi_step and u_step * (U o phi_step).
/// `budget` is the precision above the initial degree.
template <ExactField F>
Gauge<F> compose_gauge(const Gauge<F>& g, const GaugeStep<F>& s, int k, int l, long budget) {
    if (s.is_identity()) return g;
    const BivPoly<F> X = BivPoly<F>::x() + s.alpha, Y = BivPoly<F>::y() + s.beta;
    Gauge<F> r;
    r.phi_x = compose_truncated(g.phi_x, X, Y, k, l, k + budget);
    r.phi_y = compose_truncated(g.phi_y, X, Y, k, l, l + budget);
    r.unit = mul_truncated(BivPoly<F>(F(1)) + s.delta, compose_truncated(g.unit, X, Y, k, l, budget), k, l, budget);
    return r;
}

template <ExactField F>
Jet<F> apply_step(const Jet<F>& jet, const GaugeStep<F>& s) {
    return s.is_identity() ? jet : gauge_pullback(jet, s.alpha, s.beta, s.delta);
}

/// Linear system of one normalization sub-step in the fixed monomial bases.
template <ExactField F>
struct StepSystem {
    std::vector<Mono> basis;  // unknown monomials (per unknown polynomial)
    std::vector<Mono> rows;   // monomials whose coefficients are controlled
    Matrix<F> M;
};

/// Rows of q/(xy) in degree kln + m that the hamiltonian step must clear.
inline std::vector<Mono> hamiltonian_rows(const FoliationType& t, long m) {
    std::vector<Mono> out;
    const long kln = t.kln();
    for (const Mono& mo : qp_basis(t.w.k, t.w.l, kln + m)) {
        if (m >= kln || mo.i >= t.w.l * t.n || mo.j >= t.w.k * t.n) out.push_back(mo);
    }
    return out;
}

/// The map (Ubar, Vbar) -> Abar Ubar + Bbar Vbar restricted to the cleared rows.
template <ExactField F>
StepSystem<F> hamiltonian_system(const FoliationType& t, const OneForm<F>& wd, long m) {
    const ABPair<F> ab = ab_polys(t, wd, m);
    StepSystem<F> s;
    s.basis = qp_basis(t.w.k, t.w.l, m);
    s.rows = hamiltonian_rows(t, m);
    const std::size_t e = s.basis.size();
    s.M.assign(s.rows.size(), std::vector<F>(2 * e, F(0)));
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        for (std::size_t c = 0; c < e; ++c) {
            const int di = s.rows[r].i - s.basis[c].i, dj = s.rows[r].j - s.basis[c].j;
            if (di < 0 || dj < 0) continue;
            s.M[r][c] = ab.Abar.coeff(di, dj);
            s.M[r][e + c] = ab.Bbar.coeff(di, dj);
        }
    }
    return s;
}

/// Rows of b/x in degree kln + m with y-exponent >= kn.
inline std::vector<Mono> radial_rows(const FoliationType& t, long m) {
    std::vector<Mono> out;
    for (const Mono& mo : qp_basis(t.w.k, t.w.l, t.kln() + m)) {
        if (mo.j >= t.w.k * t.n) out.push_back(mo);
    }
    return out;
}

/// Phi_m(T) = m (b_{d-l}/x) T - (q_d/x) d_y T on the rows with y-exponent >= kn.
template <ExactField F>
BivPoly<F> radial_operator(const FoliationType& t, const OneForm<F>& wd, long m, const BivPoly<F>& T) {
    const BivPoly<F> bx = wd.b.div_monomial(1, 0);
    const BivPoly<F> qx = contract_q(wd, t.w.k, t.w.l).div_monomial(1, 0);
    return (bx * T).scaled(F(m)) - qx * T.deriv_y();
}

template <ExactField F>
StepSystem<F> radial_system(const FoliationType& t, const OneForm<F>& wd, long m) {
    if (!t.eps0 || !t.eps_inf) throw AxisRequired();
    StepSystem<F> s;
    s.basis = qp_basis(t.w.k, t.w.l, m);
    s.rows = radial_rows(t, m);
    s.M.assign(s.rows.size(), std::vector<F>(s.basis.size(), F(0)));
    for (std::size_t c = 0; c < s.basis.size(); ++c) {
        const BivPoly<F> img = radial_operator(t, wd, m, BivPoly<F>::monomial(s.basis[c].i, s.basis[c].j));
        for (std::size_t r = 0; r < s.rows.size(); ++r) s.M[r][c] = img.coeff(s.rows[r].i, s.rows[r].j);
    }
    return s;
}

/// Whether the graded pieces of degree d + m of q/(xy) and b obey the normal-form shape.
template <ExactField F>
bool degree_is_normalized(const Jet<F>& jet, const FoliationType& t, long m) {
    const int k = t.w.k, l = t.w.l;
    const long d = t.d();
    const BivPoly<F> q = contract_q(jet.component(d + m), k, l);
    for (const auto& [mo, c] : q.terms()) {
        if (mo.i < 1 || mo.j < 1) return false;
        if (m >= t.kln() || mo.i - 1 >= l * t.n || mo.j - 1 >= k * t.n) return false;
    }
    const BivPoly<F> b = jet.b().slice(d + m - l, k, l);
    for (const auto& [mo, c] : b.terms()) {
        if (mo.j >= k * t.n) return false;
    }
    return true;
}

namespace detail {

template <ExactField F>
void require_clean_below(const Jet<F>& jet, const FoliationType& t, const OneForm<F>& wd, long m) {
    const int k = t.w.k, l = t.w.l;
    const long d = t.d();
    if (!(jet.component(d) == wd)) throw PrerequisiteDegreesDirty(0);
    const auto ord = jet.form().order(k, l);
    if (ord && *ord < d) throw PrerequisiteDegreesDirty(0);
    for (long mp = 1; mp < m; ++mp) {
        if (!degree_is_normalized(jet, t, mp)) throw PrerequisiteDegreesDirty(static_cast<int>(m));
    }
}

template <ExactField F>
BivPoly<F> combine(const std::vector<Mono>& basis, const std::vector<F>& z, std::size_t offset) {
    BivPoly<F> p;
    for (std::size_t c = 0; c < basis.size(); ++c) p.add_term(basis[c], z[offset + c]);
    return p;
}

}  // namespace detail

/// Gauge at degree m moving q/(xy) into the box (m < kln) or to zero (m >= kln).
template <ExactField F>
GaugeStep<F> hamiltonian_step(const Jet<F>& jet, const FoliationType& t, const OneForm<F>& wd, long m,
                              bool check_prerequisites = true) {
    if (check_prerequisites) detail::require_clean_below(jet, t, wd, m);
    GaugeStep<F> step;
    step.m = m;
    const StepSystem<F> sys = hamiltonian_system(t, wd, m);
    if (sys.basis.empty()) return step;  // e_m = 0: no rows to clear either
    const BivPoly<F> q = contract_q(jet.component(t.d() + m), t.w.k, t.w.l);
    if (!q.divisible_by_monomial(1, 1)) throw NotInClass("axis divisibility lost at degree d+" + std::to_string(m));
    const BivPoly<F> qp = q.div_monomial(1, 1);
    std::vector<F> rhs;
    for (const Mono& r : sys.rows) rhs.push_back(-qp.coeff(r.i, r.j));
    const std::size_t e = sys.basis.size();
    std::optional<std::vector<F>> z;
    if (m < t.kln()) {
        if (sys.rows.size() != 2 * e) throw Error("hamiltonian system is not square");
        z = solve_square(sys.M, rhs);
    } else {
        z = solve_particular(sys.M, rhs, 2 * e);
    }
    if (!z) throw NonGeneric(static_cast<int>(m));
    step.alpha = detail::combine<F>(sys.basis, *z, 0).shifted(1, 0);
    step.beta = detail::combine<F>(sys.basis, *z, e).shifted(0, 1);
    return step;
}

/// Unit-radial gauge at degree m bringing the y-degree of b_{d+m-l} below kn.
template <ExactField F>
GaugeStep<F> radial_step(const Jet<F>& jet, const FoliationType& t, const OneForm<F>& wd, long m) {
    GaugeStep<F> step;
    step.m = m;
    const StepSystem<F> sys = radial_system(t, wd, m);
    const int k = t.w.k, l = t.w.l;
    const BivPoly<F> bs = jet.b().slice(t.d() + m - l, k, l);
    if (sys.basis.empty()) return step;
    if (!bs.divisible_by_monomial(1, 0)) throw NotInClass("axis divisibility lost at degree d+" + std::to_string(m));
    const BivPoly<F> bx = bs.div_monomial(1, 0);
    std::vector<F> rhs;
    for (const Mono& r : sys.rows) rhs.push_back(-bx.coeff(r.i, r.j));
    auto z = solve_square(sys.M, rhs);
    if (!z) throw NonGenericRadial(static_cast<int>(m));
    const BivPoly<F> T = detail::combine<F>(sys.basis, *z, 0);
    step.delta = T.scaled(F(t.d() + m));
    step.alpha = T.shifted(1, 0).scaled(F(-static_cast<long>(k)));
    step.beta = T.shifted(0, 1).scaled(F(-static_cast<long>(l)));
    return step;
}

struct GenericityEntry {
    long m = 0;
    long e = 0;
    bool hamiltonian_ok = true;
    bool radial_ok = true;
};

template <ExactField F>
struct GenericityReport {
    std::vector<GenericityEntry> degrees;
    std::vector<std::pair<std::string, F>> indices;  // (name, value)

    bool systems_ok() const {
        return std::all_of(degrees.begin(), degrees.end(), [](const GenericityEntry& e) { return e.hamiltonian_ok && e.radial_ok; });
    }
    bool indices_irrational() const {
        return std::all_of(indices.begin(), indices.end(), [](const auto& p) { return !p.second.is_rational_constant(); });
    }
    bool generic() const { return systems_ok() && indices_irrational(); }
};

/// Invertibility of the hamiltonian and radial systems for m = 1 .. kln - 1 and
/// the rationality of every index.
template <ExactField F>
GenericityReport<F> genericity_report(const FoliationType& t, const OneForm<F>& wd) {
    if (!t.eps0 || !t.eps_inf) throw AxisRequired();
    GenericityReport<F> r;
    const SpectralData<F> s = recover_spectral(t, wd);
    for (std::size_t i = 0; i < s.lambda.size(); ++i) r.indices.emplace_back("lambda" + std::to_string(i + 1), s.lambda[i]);
    r.indices.emplace_back("lambda0", s.lambda0);
    r.indices.emplace_back("lambdaInf", s.lambda_inf);
    for (long m = 1; m < t.kln(); ++m) {
        GenericityEntry e;
        e.m = m;
        e.e = e_count(t.w.k, t.w.l, m);
        if (e.e > 0) {
            const auto hs = hamiltonian_system(t, wd, m);
            e.hamiltonian_ok = hs.rows.size() == 2 * hs.basis.size() && rank(hs.M, 2 * hs.basis.size()) == 2 * hs.basis.size();
            const auto rs = radial_system(t, wd, m);
            e.radial_ok = rank(rs.M, rs.basis.size()) == rs.basis.size();
        }
        r.degrees.push_back(e);
    }
    return r;
}

/// The strict normal form  omega_d + d(xy h) + s (l y dx - k x dy)  up to quasi-degree dmax.
template <ExactField F>
struct NormalForm {
    FoliationType type;
    SpectralData<F> spec;
    BivPoly<F> h;
    BivPoly<F> s;
    long dmax = 0;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

template <ExactField F>
Jet<F> reconstruct_normal_form(const NormalForm<F>& nf) {
    const int k = nf.type.w.k, l = nf.type.w.l;
    Jet<F> rest = reconstruct(nf.h.shifted(1, 1), nf.s, k, l, nf.dmax);
    return Jet<F>(rest.form() + build_omega_d(nf.type, nf.spec), k, l, nf.dmax);
}

/// Empty string when the support conditions of the normal form hold, else a description.
template <ExactField F>
std::string normal_form_violation(const NormalForm<F>& nf) {
    const FoliationType& t = nf.type;
    const int k = t.w.k, l = t.w.l, n = t.n;
    for (const auto& [m, c] : nf.h.terms()) {
        if (qdeg(m, k, l) < t.kln() + 1 || m.i > l * n - 1 || m.j > k * n - 1) {
            return "h has the monomial x^" + std::to_string(m.i) + "*y^" + std::to_string(m.j) + " outside the box";
        }
    }
    for (const auto& [m, c] : nf.s.terms()) {
        if (m.j > k * n - 1 || m.i < radial_valuation(k, l, n, m.j)) {
            return "s has the monomial x^" + std::to_string(m.i) + "*y^" + std::to_string(m.j) + " outside its support";
        }
    }
    return {};
}

/// Reads (h, s) off a jet whose positive-degree part is already normalized.
template <ExactField F>
NormalForm<F> extract_normal_form(const Jet<F>& jet, const FoliationType& t, const SpectralData<F>& spec, const OneForm<F>& wd) {
    NormalForm<F> nf;
    nf.type = t;
    nf.spec = spec;
    nf.dmax = jet.dmax();
    const Jet<F> rest(jet.form() - wd, t.w.k, t.w.l, jet.dmax());
    const HSDecomposition<F> hs = decompose_hs(rest);
    if (!hs.h.divisible_by_monomial(1, 1)) throw Error("hamiltonian part is not divisible by xy");
    nf.h = hs.h.div_monomial(1, 1);
    nf.s = hs.s;
    return nf;
}

template <ExactField F>
struct NormalizeResult {
    NormalForm<F> normal_form;
    Gauge<F> gauge;
    bool certificate_ok = false;
};

/// Normal form of `jet` below quasi-degree d + D, with the gauge that produces it.
template <ExactField F>
NormalizeResult<F> normalize(const Jet<F>& input, long D) {
    if (D < 1) throw TruncationTooSmall("degree budget must be at least 1");
    const FoliationType t = infer_type(input, 1, 1);
    const long d = t.d();
    if (input.dmax() < d + D) {
        throw TruncationTooSmall("jet known to degree " + std::to_string(input.dmax()) + " but d + D = " + std::to_string(d + D));
    }
    const Jet<F> jet = input.truncated(d + D);
    const MembershipReport<F> report = verify_membership(jet, t);
    if (const Condition* bad = report.first_failure()) {
        throw NotInClass(bad->name + (bad->detail.empty() ? "" : ": " + bad->detail));
    }
    const OneForm<F> wd = jet.component(d);
    const int k = t.w.k, l = t.w.l;

    NormalizeResult<F> r;
    Jet<F> cur = jet;
    for (long m = 1; m <= D; ++m) {
        const GaugeStep<F> hs = hamiltonian_step(cur, t, wd, m, false);
        cur = apply_step(cur, hs);
        r.gauge = compose_gauge(r.gauge, hs, k, l, D);
        const GaugeStep<F> rs = radial_step(cur, t, wd, m);
        cur = apply_step(cur, rs);
        r.gauge = compose_gauge(r.gauge, rs, k, l, D);
        if (!degree_is_normalized(cur, t, m)) throw Error("degree d+" + std::to_string(m) + " not normalized after its step");
    }
    r.normal_form = extract_normal_form(cur, t, *report.spectral, wd);
    if (auto why = normal_form_violation(r.normal_form); !why.empty()) throw Error("normal form support violated: " + why);
    r.certificate_ok = apply_gauge(jet, r.gauge) == cur && reconstruct_normal_form(r.normal_form) == cur;
    return r;
}

/// Deterministic generator: mt19937_64 with plain modulo reduction so that streams
/// agree across standard library implementations.
class SeededPool {
public:
    SeededPool(std::uint64_t seed, std::vector<long> pool) : rng_(seed), pool_(std::move(pool)) {}
    long draw() { return pool_.empty() ? 0 : pool_[rng_() % pool_.size()]; }
    std::size_t index(std::size_t n) { return n == 0 ? 0 : rng_() % n; }

private:
    std::mt19937_64 rng_;
    std::vector<long> pool_;
};

/// Monomials x^i y^j with lo <= k i + l j <= hi.
inline std::vector<Mono> monomials_in_range(int k, int l, long lo, long hi) {
    std::vector<Mono> out;
    for (long m = std::max(0L, lo); m <= hi; ++m) {
        for (const Mono& mo : qp_basis(k, l, m)) out.push_back(mo);
    }
    return out;
}

struct PerturbOptions {
    std::vector<long> pool{-2, -1, 1, 2};
    int terms = 3;  // monomials drawn for each of alpha, beta, delta
};

/// A seeded strict gauge (x(1 + P), y(1 + Q), 1 + R) that keeps both axes invariant.
template <ExactField F>
GaugeStep<F> random_axis_gauge(int k, int l, long D, std::uint64_t seed, const PerturbOptions& opt = {}) {
    SeededPool rng(seed, opt.pool);
    const std::vector<Mono> mons = monomials_in_range(k, l, 1, D);
    GaugeStep<F> g;
    auto draw_poly = [&]() {
        BivPoly<F> p;
        for (int n = 0; n < opt.terms; ++n) {
            const Mono mo = mons[rng.index(mons.size())];
            p.add_term(mo, F(rng.draw()));
        }
        return p;
    };
    g.alpha = draw_poly().shifted(1, 0);
    g.beta = draw_poly().shifted(0, 1);
    g.delta = draw_poly();
    return g;
}

/// The normal form reconstructed and moved by a seeded strict gauge, cut at d + D.
template <ExactField F>
Jet<F> perturb_random(const NormalForm<F>& nf, std::uint64_t seed, long D, const PerturbOptions& opt = {}) {
    const int k = nf.type.w.k, l = nf.type.w.l;
    const long dmax = nf.type.d() + D;
    NormalForm<F> cut = nf;
    cut.dmax = std::min(nf.dmax, dmax);
    const Jet<F> base = reconstruct_normal_form(cut);
    return apply_step(base, random_axis_gauge<F>(k, l, D, seed, opt));
}

struct RandomNormalFormOptions {
    std::vector<long> coefficient_pool{-3, -2, -1, 1, 2, 3};
    std::vector<long> branch_pool{-5, -4, -3, -2, -1, 1, 2, 3, 4, 5};
    /// Probability (in percent) that an admissible h or s slot is left empty.
    int empty_percent = 30;
};

/// Spectral data over Q(t) with indices a + b t (b != 0), c_i distinct nonzero integers.
inline SpectralData<RatFunc> random_spectral(const FoliationType& t, SeededPool& rng, const RandomNormalFormOptions& opt = {}) {
    SpectralData<RatFunc> s;
    s.c0 = RatFunc(opt.branch_pool[rng.index(opt.branch_pool.size())]);
    while (static_cast<int>(s.c.size()) < t.n) {
        RatFunc c(opt.branch_pool[rng.index(opt.branch_pool.size())]);
        if (std::find(s.c.begin(), s.c.end(), c) == s.c.end()) s.c.push_back(c);
    }
    auto index = [&]() {
        long b = 0;
        while (b == 0) b = rng.draw();
        return RatFunc(rng.draw()) / RatFunc(std::max(1L, std::abs(rng.draw()))) + RatFunc(b) * RatFunc::t();
    };
    while (true) {
        s.lambda.clear();
        for (int i = 0; i < t.n; ++i) s.lambda.push_back(index());
        s.lambda0 = t.eps0 ? index() : RatFunc(frozen_lambda0(t.w));
        RatFunc rest = RatFunc(-1) - s.lambda0;
        for (const auto& x : s.lambda) rest -= x;
        s.lambda_inf = t.eps_inf ? rest : RatFunc(frozen_lambda_inf(t.w));
        if (!t.eps_inf) {
            // Balance the relation through the last branch index.
            s.lambda.back() += rest - s.lambda_inf;
        }
        // With one branch and no axes the relation pins lambda1 to -1/(kl).
        bool ok = t.n == 1 && !t.eps0 && !t.eps_inf;
        if (!ok) {
            ok = true;
            for (const auto& x : free_indices(t, s)) ok = ok && !x.is_rational_constant();
        }
        if (ok) break;
    }
    return canonical_order(s);
}

/// A seeded normal form with every admissible h and s slot below d + D filled at random.
inline NormalForm<RatFunc> random_normal_form(const FoliationType& t, long D, std::uint64_t seed,
                                              const RandomNormalFormOptions& opt = {}) {
    SeededPool rng(seed, opt.coefficient_pool);
    NormalForm<RatFunc> nf;
    nf.type = t;
    nf.spec = random_spectral(t, rng, opt);
    nf.dmax = t.d() + D;
    const int k = t.w.k, l = t.w.l, n = t.n;
    auto maybe = [&]() { return static_cast<int>(rng.index(100)) >= opt.empty_percent; };
    for (const Mono& mo : hamiltonian_box(k, l, n)) {
        if (qdeg(mo, k, l) + k + l <= nf.dmax && maybe()) nf.h.add_term(mo, RatFunc(rng.draw()));
    }
    const long smax = nf.dmax - k - l;
    for (int j = 0; j <= k * n - 1; ++j) {
        for (long i = radial_valuation(k, l, n, j); static_cast<long>(k) * i + static_cast<long>(l) * j <= smax; ++i) {
            if (maybe()) nf.s.add_term(Mono{static_cast<int>(i), j}, RatFunc(rng.draw()));
        }
    }
    return nf;
}

/// x -> alpha x, y -> gamma y applied to the coefficients of p.
template <ExactField F>
BivPoly<F> scale_variables(const BivPoly<F>& p, const F& alpha, const F& gamma) {
    BivPoly<F> r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * alpha.pow(m.i) * gamma.pow(m.j));
    return r;
}

/// The normal form after the linear change (x, y) -> (alpha x, gamma y) with
/// alpha = c1^v, gamma = c1^u, which sends the first branch coefficient to 1.
template <ExactField F>
NormalForm<F> rescale_nonstrict(const NormalForm<F>& nf) {
    const Weights& w = nf.type.w;
    const F c1 = nf.spec.c.front();
    if (c1 == F(1)) return nf;
    const F alpha = c1.pow(w.v), gamma = c1.pow(w.u);
    NormalForm<F> r = nf;
    const F ratio = alpha.pow(w.l) / gamma.pow(w.k);
    for (auto& c : r.spec.c) c *= ratio;
    r.spec.c0 = nf.spec.c0 * alpha.pow(nf.type.eps0) * gamma.pow(nf.type.eps_inf + static_cast<long>(w.k) * nf.type.n);
    r.spec = canonical_order(r.spec);
    r.h = scale_variables(nf.h, alpha, gamma).scaled(alpha * gamma);
    r.s = scale_variables(nf.s, alpha, gamma).scaled(alpha * gamma);
    return r;
}

}  // namespace qhnf

// Acceptance checks. One line per criterion; exit status 1 if any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qhnf/blowup.hpp"
#include "qhnf/normalizer.hpp"

using namespace qhnf;

namespace {

// Pinned limits. Everything else is compared exactly.
constexpr double kTrialSecondsLimit = 60.0;
constexpr double kDimsSecondsLimit = 1.0;
constexpr long kCountingMaxM = 500;
constexpr int kSpectralSamples = 100;
constexpr int kGcdSpecs = 20;

using TP = BivPoly<RatFunc>;
using QP = BivPoly<Rational>;
using Clock = std::chrono::steady_clock;

struct Result {
    bool pass = true;
    std::string detail;
};

// Records the first few failures; later ones are only counted.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    Result result(const std::string& summary) const {
        if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + notes_};
    }

private:
    long checks_ = 0, failures_ = 0;
    std::string notes_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s;
    return o.str();
}

std::string type_name(const FoliationType& t) {
    return "(" + std::to_string(t.w.k) + "," + std::to_string(t.w.l) + "," + std::to_string(t.n) + ")";
}

const std::vector<FoliationType>& round_trip_types() {
    static const std::vector<FoliationType> types{FoliationType::make(1, 1, 1), FoliationType::make(1, 1, 2), FoliationType::make(2, 1, 1),
                                                  FoliationType::make(3, 2, 1), FoliationType::make(3, 2, 2)};
    return types;
}

bool is_affine_in_t(const RatFunc& x) { return x.den().is_constant() && x.num().degree() <= 1; }

template <ExactField F>
BivPoly<F> random_qh(int k, int l, long m, SeededPool& rng) {
    BivPoly<F> p;
    for (const Mono& mo : qp_basis(k, l, m)) p.add_term(mo, F(rng.draw()));
    return p;
}

// omega_d plus seeded higher terms keeping both axes invariant.
Jet<RatFunc> member_jet(const FoliationType& t, const OneForm<RatFunc>& wd, long D, std::uint64_t seed) {
    SeededPool rng(seed, {-2, -1, 1, 2});
    const int k = t.w.k, l = t.w.l;
    OneForm<RatFunc> w = wd;
    for (long m = 1; m <= D; ++m) {
        w.a += random_qh<RatFunc>(k, l, t.d() + m - k - l, rng).shifted(0, 1);
        w.b += random_qh<RatFunc>(k, l, t.d() + m - l - k, rng).shifted(1, 0);
    }
    return Jet<RatFunc>(w, k, l, t.d() + D);
}

Result round_trip_uniqueness() {
    Tally tally;
    double worst = 0;
    std::string worst_at;
    for (const FoliationType& t : round_trip_types()) {
        const long D = t.kln() + 6;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const std::string at = type_name(t) + " seed " + std::to_string(seed);
            const NormalForm<RatFunc> nf = random_normal_form(t, D, seed);
            RatFunc sum = nf.spec.lambda0 + nf.spec.lambda_inf;
            bool affine = is_affine_in_t(nf.spec.lambda0) && is_affine_in_t(nf.spec.lambda_inf);
            for (const auto& x : nf.spec.lambda) {
                sum += x;
                affine = affine && is_affine_in_t(x);
            }
            tally.check(affine, at + ": indices not of the form a + b t");
            tally.check(sum == RatFunc(-1), at + ": index sum is not -1");

            const Jet<RatFunc> input = perturb_random(nf, seed * 101, D);
            const auto t0 = Clock::now();
            const auto r = normalize(input, D);
            const double s = seconds_since(t0);
            if (s > worst) {
                worst = s;
                worst_at = at;
            }
            tally.check(r.normal_form == nf, at + ": normal form differs from the seed");
            tally.check(s < kTrialSecondsLimit, at + ": took " + fmt(s) + " s");
        }
    }
    return tally.result("25 trials exact; slowest " + fmt(worst) + " s at " + worst_at);
}

Result gauge_certificate() {
    Tally tally;
    int calls = 0;
    for (const FoliationType& t : round_trip_types()) {
        const long D = t.kln() + 4;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const std::string at = type_name(t) + " seed " + std::to_string(seed);
            const NormalForm<RatFunc> nf = random_normal_form(t, D, 40 + seed);
            for (const Jet<RatFunc>& input : {perturb_random(nf, 1000 + seed, D), reconstruct_normal_form(nf)}) {
                const auto r = normalize(input, D);
                ++calls;
                tally.check(r.certificate_ok, at + ": certificate flag false");
                // Independent re-substitution: unit * phi^* input against the reconstructed output.
                tally.check(apply_gauge(input, r.gauge) == reconstruct_normal_form(r.normal_form), at + ": re-substitution mismatch");
            }
        }
    }
    return tally.result(std::to_string(calls) + " normalize calls certified");
}

Result example_shape() {
    Tally tally;
    const FoliationType t = FoliationType::make(3, 2, 2);
    const std::set<Mono> listed{{3, 2}, {1, 5}, {2, 4}, {3, 3}, {2, 5}, {3, 4}, {3, 5}};
    const std::vector<long> valuations{5, 4, 3, 3, 2, 1};

    const std::vector<Mono> box = hamiltonian_box(3, 2, 2);
    tally.check(std::set<Mono>(box.begin(), box.end()) == listed && box.size() == 7, "hamiltonian box differs from the 7 listed slots");
    for (int j = 0; j <= 5; ++j) tally.check(radial_valuation(3, 2, 2, j) == valuations[j], "radial valuation j=" + std::to_string(j));

    for (int empty : {0, 30}) {
        RandomNormalFormOptions opt;
        opt.empty_percent = empty;
        const long D = 18;
        const NormalForm<RatFunc> seed_nf = random_normal_form(t, D, 3, opt);
        const auto r = normalize(perturb_random(seed_nf, 77, D), D);
        tally.check(r.normal_form == seed_nf, "round trip");
        std::set<Mono> support;
        for (const auto& [mo, c] : r.normal_form.h.terms()) support.insert(mo);
        tally.check(std::includes(listed.begin(), listed.end(), support.begin(), support.end()), "h support outside the slots");
        if (empty == 0) tally.check(support == listed, "a filled normal form uses all 7 slots");
        std::vector<long> lowest(6, 1L << 20);
        for (const auto& [mo, c] : r.normal_form.s.terms()) {
            tally.check(mo.j >= 0 && mo.j <= 5, "s row out of range");
            if (mo.j >= 0 && mo.j <= 5) lowest[mo.j] = std::min<long>(lowest[mo.j], mo.i);
        }
        for (int j = 0; j <= 5; ++j) {
            if (empty == 0) {
                tally.check(lowest[j] == valuations[j], "s valuation j=" + std::to_string(j));
            } else {
                tally.check(lowest[j] >= valuations[j], "s term below valuation j=" + std::to_string(j));
            }
        }
    }
    return tally.result("h slots and s valuations (5,4,3,3,2,1)");
}

Result dimension_formulas() {
    Tally tally;
    const auto t0 = Clock::now();
    int cases = 0;
    for (int k = 1; k <= 7; ++k) {
        for (int l = 1; l <= 7; ++l) {
            if (std::gcd(k, l) != 1) continue;
            for (int n = 1; n <= 3; ++n) {
                const FoliationType t = FoliationType::make(k, l, n);
                // Direct enumeration of the box.
                long direct = 0;
                for (long i = 0; i <= static_cast<long>(l) * n - 1; ++i) {
                    for (long j = 0; j <= static_cast<long>(k) * n - 1; ++j) direct += k * i + l * j >= t.kln() + 1;
                }
                const Dims dd = dims(t);
                const std::string at = type_name(t);
                tally.check(dd.delta_prime == direct, at + ": delta' " + std::to_string(dd.delta_prime) + " vs " + std::to_string(direct));
                tally.check(dd.delta - dd.delta_prime == n - 1, at + ": delta - delta' != n - 1");
                ++cases;
            }
        }
    }
    const double s = seconds_since(t0);
    tally.check(s < kDimsSecondsLimit, "took " + fmt(s) + " s");
    return tally.result(std::to_string(cases) + " types in " + fmt(s) + " s");
}

Result lattice_counts() {
    Tally tally;
    for (int k = 1; k <= 7; ++k) {
        for (int l = 1; l <= 7; ++l) {
            if (std::gcd(k, l) != 1) continue;
            for (long m = 0; m <= kCountingMaxM; ++m) {
                long brute = 0;
                for (long i = 0; k * i <= m; ++i) brute += (m - k * i) % l == 0;
                tally.check(e_count(k, l, m) == brute, "e_m k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + std::to_string(m));
            }
            for (int n = 1; n <= 3; ++n) {
                const long kln = static_cast<long>(k) * l * n;
                for (long m = 0; m <= 100; ++m) tally.check(e_count(k, l, kln + m) == n + e_count(k, l, m), "shift identity");
            }
        }
    }
    SeededPool rng(5, {});
    for (int i = 0; i < 2000; ++i) {
        const Rational a(static_cast<long>(rng.index(401)) - 200, static_cast<long>(rng.index(30)) + 1);
        const long f = floor_int(a), s = strict_int(-a);
        tally.check(Rational(f) <= a && a < Rational(f + 1), "floor bounds");
        tally.check(Rational(s) < -a && -a <= Rational(s + 1), "strict bounds");
        tally.check(f + s == -1, "[a[ + ]-a] at " + a.to_string());
    }
    return tally.result("e_m for k,l <= 7, m <= " + std::to_string(kCountingMaxM) + "; shift and bracket identities");
}

Result spectral_dictionary() {
    Tally tally;
    const std::vector<FoliationType> types{
        FoliationType::make(3, 2, 1),       FoliationType::make(3, 2, 2),       FoliationType::make(2, 1, 3),
        FoliationType::make(1, 1, 2),       FoliationType::make(5, 3, 1),       FoliationType::make(2, 3, 2),
        FoliationType::make(3, 2, 1, 0, 1), FoliationType::make(3, 2, 2, 1, 0), FoliationType::make(2, 1, 2, 0, 0),
        FoliationType::make(5, 2, 1, 0, 0),
    };
    for (int i = 0; i < kSpectralSamples; ++i) {
        const FoliationType& t = types[static_cast<std::size_t>(i) % types.size()];
        const std::string at = type_name(t) + " eps(" + std::to_string(t.eps0) + "," + std::to_string(t.eps_inf) + ") sample " + std::to_string(i);
        SeededPool rng(static_cast<std::uint64_t>(i) + 1, {-3, -2, -1, 1, 2, 3});
        const SpectralData<RatFunc> s = random_spectral(t, rng);
        const OneForm<RatFunc> wd = build_omega_d(t, s);
        tally.check(recover_spectral(t, wd) == s, at + ": recover(build(s)) != s");
        tally.check(build_omega_d(t, recover_spectral(t, wd)) == wd, at + ": build(recover(w)) != w");

        // q = c0 x^eps0 y^epsInf prod (y^k - c_i x^l).
        TP q = TP::monomial(t.eps0, t.eps_inf, s.c0);
        for (const RatFunc& c : s.c) q = q * (TP::monomial(0, t.w.k) - TP::monomial(t.w.l, 0, c));
        tally.check(contract_q(wd, t.w.k, t.w.l) == q, at + ": contract_q differs from the product");

        RatFunc sum(0);
        for (const auto& p : singular_points_principal(t, s)) sum += principal_index(wd, t.w, p);
        tally.check(sum == RatFunc(-1), at + ": residue sum " + sum.to_string());
    }
    return tally.result(std::to_string(kSpectralSamples) + " seeded specs");
}

// The two factorizations as printed, in terms of (k, l, u, v).
FactoredPullback<Rational> printed_principal(const Weights& w) {
    const long e = static_cast<long>(w.k) * w.l - static_cast<long>(w.k) * w.u, kl = static_cast<long>(w.k) * w.l;
    FactoredPullback<Rational> f;
    f.exp_x = e - 1;
    f.exp_y = kl - 1;
    f.strict.a = QP::monomial(0, 1, Rational(e)) - QP::monomial(1, 1, Rational(e + 1));
    f.strict.b = QP::monomial(1, 0, Rational(kl)) - QP::monomial(2, 0, Rational(kl));
    return f;
}

FactoredPullback<Rational> printed_previous(const Weights& w) {
    const long kl = static_cast<long>(w.k) * w.l, lv = static_cast<long>(w.l) * w.v;
    FactoredPullback<Rational> f;
    f.exp_x = kl - 1;
    f.exp_y = lv - 1;
    f.strict.a = QP::monomial(0, 2, Rational(kl)) - QP::monomial(0, 1, Rational(kl));
    f.strict.b = QP::monomial(1, 1, Rational(lv)) - QP::monomial(1, 0, Rational(lv));
    return f;
}

QP power(const QP& b, int e) {
    QP r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// d(f o sigma) computed by plain substitution, independent of pullback_monomial.
OneForm<Rational> substituted_differential(const QP& f, const MonomialMap& m) {
    const QP x = QP::monomial(m.A, m.B), y = QP::monomial(m.C, m.D);
    QP g;
    for (const auto& [mo, c] : f.terms()) g += (power(x, mo.i) * power(y, mo.j)).scaled(c);
    return OneForm<Rational>::exact(g);
}

OneForm<Rational> expand(const FactoredPullback<Rational>& f) {
    return {f.strict.a.shifted(f.exp_x, f.exp_y), f.strict.b.shifted(f.exp_x, f.exp_y)};
}

Result pullback_displays() {
    Tally tally;
    std::string mismatch;
    for (auto [k, l] : {std::pair{3, 2}, {5, 3}}) {
        const Weights w = Weights::make(k, l);
        const QP cusp = QP::monomial(0, k) - QP::monomial(l, 0);
        const std::string at = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
        const struct {
            const char* name;
            MonomialMap chart;
            FactoredPullback<Rational> printed;
        } displays[] = {{"first display", principal_chart(w), printed_principal(w)}, {"second display", previous_chart(w), printed_previous(w)}};
        for (const auto& d : displays) {
            const FactoredPullback<Rational> pb = pullback_monomial(OneForm<Rational>::exact(cusp), d.chart);
            tally.check(expand(pb) == substituted_differential(cusp, d.chart), at + " " + d.name + ": library disagrees with substitution");
            const bool same = pb.exp_x == d.printed.exp_x && pb.exp_y == d.printed.exp_y && pb.strict == d.printed.strict;
            tally.check(same, at + " " + d.name + ": computed dY coefficient " + pb.strict.b.to_string() + ", printed " +
                                  d.printed.strict.b.to_string());
            if (!same && mismatch.empty()) {
                // A pullback of an exact form is closed; the printed one is not.
                const OneForm<Rational> printed = expand(d.printed);
                const bool closed = printed.a.deriv_y() == printed.b.deriv_x();
                mismatch = closed ? "" : " [printed form is not closed, so it cannot be the pullback of d(y^k - x^l)]";
            }
        }
    }
    Result r = tally.result("both displays match for (3,2) and (5,3)");
    r.detail += mismatch;
    return r;
}

Result coprimality() {
    Tally tally;
    const auto& types = round_trip_types();
    for (int i = 0; i < kGcdSpecs; ++i) {
        const FoliationType& t = types[static_cast<std::size_t>(i) % types.size()];
        SeededPool rng(500 + static_cast<std::uint64_t>(i), {-3, -2, -1, 1, 2, 3});
        const OneForm<RatFunc> wd = build_omega_d(t, random_spectral(t, rng));
        for (long m = 0; m <= t.kln() + 3; ++m) {
            const ABPair<RatFunc> ab = ab_polys(t, wd, m);
            tally.check(poly_gcd(ab.A, ab.B) == TP(RatFunc(1)), type_name(t) + " spec " + std::to_string(i) + " m=" + std::to_string(m));
        }
    }
    return tally.result(std::to_string(kGcdSpecs) + " specs, 0 <= m <= kln+3");
}

Result genericity_machinery() {
    Tally tally;
    const auto& types = round_trip_types();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const FoliationType& t = types[seed % types.size()];
        SeededPool rng(seed, {-3, -2, -1, 1, 2, 3});
        tally.check(genericity_report(t, build_omega_d(t, random_spectral(t, rng))).generic(),
                    type_name(t) + " seed " + std::to_string(seed) + ": Q(t) spec not generic");

        // Same shape with every index a rational number, over Q and inside Q(t).
        SeededPool rq(seed + 900, {});
        SpectralData<Rational> s;
        s.c0 = Rational(1);
        for (int i = 1; i <= t.n; ++i) s.c.push_back(Rational(i));
        auto index = [&] { return Rational(-static_cast<long>(rq.index(9)) - 1, static_cast<long>(rq.index(7)) + 2); };
        for (int i = 0; i < t.n; ++i) s.lambda.push_back(index());
        s.lambda0 = index();
        s.lambda_inf = Rational(-1) - s.lambda0;
        for (const auto& x : s.lambda) s.lambda_inf -= x;
        const auto rep = genericity_report(t, build_omega_d(t, s));
        tally.check(!rep.indices_irrational() && !rep.generic(), type_name(t) + ": rational spec over Q not flagged");

        SpectralData<RatFunc> st{RatFunc(s.c0), {}, {}, RatFunc(s.lambda0), RatFunc(s.lambda_inf)};
        for (const auto& c : s.c) st.c.push_back(RatFunc(c));
        for (const auto& x : s.lambda) st.lambda.push_back(RatFunc(x));
        const auto rep_t = genericity_report(t, build_omega_d(t, st));
        tally.check(!rep_t.indices_irrational() && !rep_t.generic(), type_name(t) + ": rational spec over Q(t) not flagged");
    }

    // Step oracles: Delta q = A U + B V, and Delta b = (m b_d delta - q_d d(delta)/dy)/(d + m) for a radial step.
    for (auto [k, l, n] : {std::tuple{3, 2, 1}, {3, 2, 2}, {2, 1, 2}, {1, 1, 1}, {5, 3, 1}}) {
        const FoliationType t = FoliationType::make(k, l, n);
        const long d = t.d();
        SeededPool spec_rng(31, {-3, -2, -1, 1, 2, 3});
        const OneForm<RatFunc> wd = build_omega_d(t, random_spectral(t, spec_rng));
        const TP qd = contract_q(wd, k, l);
        const Jet<RatFunc> jet = member_jet(t, wd, 6, 17);
        SeededPool rng(19, {-3, -2, -1, 1, 2, 3});
        for (long m = 1; m <= 6; ++m) {
            const std::string at = type_name(t) + " m=" + std::to_string(m);
            GaugeStep<RatFunc> g;
            g.m = m;
            g.alpha = random_qh<RatFunc>(k, l, m + k, rng);
            g.beta = random_qh<RatFunc>(k, l, m + l, rng);
            g.delta = random_qh<RatFunc>(k, l, m, rng);
            const ABPair<RatFunc> ab = ab_polys(t, wd, m);
            const TP dq = contract_q(apply_step(jet, g).component(d + m), k, l) - contract_q(jet.component(d + m), k, l);
            tally.check(dq == ab.A * g.U(t) + ab.B * g.V(t), at + ": Delta q");

            GaugeStep<RatFunc> r;
            r.m = m;
            r.delta = g.delta;
            r.alpha = g.delta.shifted(1, 0).scaled(RatFunc(Rational(-k, d + m)));
            r.beta = g.delta.shifted(0, 1).scaled(RatFunc(Rational(-l, d + m)));
            const Jet<RatFunc> moved = apply_step(jet, r);
            const TP db = moved.b().slice(d + m - l, k, l) - jet.b().slice(d + m - l, k, l);
            const TP expect = ((wd.b * r.delta).scaled(RatFunc(m)) - qd * r.delta.deriv_y()).scaled(RatFunc(Rational(1, d + m)));
            tally.check(db == expect, at + ": Delta b");
            tally.check(contract_q(moved.component(d + m), k, l) == contract_q(jet.component(d + m), k, l), at + ": radial step moved q");
        }
    }
    return tally.result("20 generic Q(t) specs, 40 rational specs flagged, step oracles");
}

struct Criterion {
    int id;
    const char* title;
    std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "round-trip uniqueness", round_trip_uniqueness},
        {2, "gauge certificate", gauge_certificate},
        {3, "(3,2,2) normal form shape", example_shape},
        {4, "dimension formulas", dimension_formulas},
        {5, "lattice counts", lattice_counts},
        {6, "spectral dictionary", spectral_dictionary},
        {7, "cusp pullback displays", pullback_displays},
        {8, "coprimality of A and B", coprimality},
        {9, "genericity machinery", genericity_machinery},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        Result r;
        const auto t0 = Clock::now();
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && r.pass;
        std::cout << "criterion " << c.id << " " << (r.pass ? "PASS" : "FAIL") << " [" << c.title << "] " << r.detail << " ("
                  << fmt(seconds_since(t0)) << " s)" << std::endl;
    }
    return all_pass ? 0 : 1;
}

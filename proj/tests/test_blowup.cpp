#include <numeric>

#include "doctest.h"
#include "qhnf/blowup.hpp"
#include "qhnf/normalizer.hpp"
#include "qhnf/parse.hpp"

using namespace qhnf;

namespace {

using QP = BivPoly<Rational>;
using Form = OneForm<Rational>;

QP P(const char* s) { return parse_poly<Rational>(s); }

QP power(const QP& b, int e) {
    QP r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// f(X^A Y^B, X^C Y^D) by plain multiplication.
QP substitute(const QP& f, const MonomialMap& m) {
    const QP x = QP::monomial(m.A, m.B), y = QP::monomial(m.C, m.D);
    QP r;
    for (const auto& [mo, c] : f.terms()) r += (power(x, mo.i) * power(y, mo.j)).scaled(c);
    return r;
}

Form expand(const FactoredPullback<Rational>& f) {
    return {f.strict.a.shifted(f.exp_x, f.exp_y), f.strict.b.shifted(f.exp_x, f.exp_y)};
}

QP swap(const QP& p) {
    QP r;
    for (const auto& [mo, c] : p.terms()) r.add_term(Mono{mo.j, mo.i}, c);
    return r;
}

Form swap_xy(const Form& w) { return {swap(w.b), swap(w.a)}; }

QP cusp(int k, int l) { return QP::monomial(0, k) - QP::monomial(l, 0); }

}  // namespace

TEST_CASE("chart maps") {
    const Weights w = Weights::make(3, 2);
    CHECK(principal_chart(w) == MonomialMap{2, 3, 1, 2});
    CHECK(principal_chart(Weights::make(1, 1)) == MonomialMap{1, 1, 0, 1});
    for (int k = 1; k <= 8; ++k) {
        for (int l = 1; l <= 8; ++l) {
            if (std::gcd(k, l) != 1) continue;
            const Weights ww = Weights::make(k, l);
            CHECK(principal_chart(ww).det() == 1);
            CHECK(opposite_chart(ww).det() == -1);
            CHECK(previous_chart(ww).det() == 1);
        }
    }
    // Composition multiplies exponent matrices.
    const MonomialMap s{1, 0, 1, 1}, r{2, 3, 1, 2};
    const QP f = P("x^2*y - 3*x*y^4 + y^5");
    CHECK(substitute(substitute(f, s), r) == substitute(f, s.after(r)));
}

TEST_CASE("pullback agrees with the differential of the substituted function") {
    for (auto [k, l] : {std::pair{3, 2}, {5, 3}, {2, 1}, {1, 1}, {4, 7}}) {
        const Weights w = Weights::make(k, l);
        for (const MonomialMap& m : {principal_chart(w), opposite_chart(w), previous_chart(w)}) {
            for (const QP& f : {cusp(k, l), P("x*y*(y^2 - 3*x)") + cusp(k, l), P("x^3 + 2*x*y")}) {
                const auto pb = pullback_monomial(Form::exact(f), m);
                CHECK(expand(pb) == Form::exact(substitute(f, m)));
                CHECK_FALSE((pb.strict.a.divisible_by_monomial(1, 0) && pb.strict.b.divisible_by_monomial(1, 0)));
                CHECK_FALSE((pb.strict.a.divisible_by_monomial(0, 1) && pb.strict.b.divisible_by_monomial(0, 1)));
            }
        }
    }
    const auto id = pullback_monomial(Form{P("1"), QP()}, MonomialMap{});
    CHECK(id.exp_x == 0);
    CHECK(id.exp_y == 0);
    CHECK(id.strict == Form{P("1"), QP()});
}

TEST_CASE("cusp through the principal chart") {
    for (auto [k, l] : {std::pair{3, 2}, {5, 3}}) {
        const Weights w = Weights::make(k, l);
        const long e = k * l - k * w.u;
        const auto pb = pullback_monomial(Form::exact(cusp(k, l)), principal_chart(w));
        CHECK(pb.exp_x == e - 1);
        CHECK(pb.exp_y == k * l - 1);
        // Y (e - (e + 1) X) dX + kl X (1 - X) dY
        CHECK(pb.strict.a == QP::monomial(0, 1, Rational(e)) - QP::monomial(1, 1, Rational(e + 1)));
        CHECK(pb.strict.b == QP::monomial(1, 0, Rational(k * l)) - QP::monomial(2, 0, Rational(k * l)));
    }
    const auto pb = pullback_monomial(Form::exact(P("y^3 - x^2")), principal_chart(Weights::make(3, 2)));
    CHECK(pb.strict == Form{P("3*y - 4*x*y"), P("6*x - 6*x^2")});
}

TEST_CASE("cusp through the previous chart") {
    // y^k - x^l = X^{kl} Y^{lv} (Y - 1), since ku = lv + 1.
    for (auto [k, l] : {std::pair{3, 2}, {5, 3}}) {
        const Weights w = Weights::make(k, l);
        const auto pb = pullback_monomial(Form::exact(cusp(k, l)), previous_chart(w));
        CHECK(pb.exp_x == k * l - 1);
        CHECK(pb.exp_y == l * w.v - 1);
        CHECK(pb.strict.a == QP::monomial(0, 2, Rational(k * l)) - QP::monomial(0, 1, Rational(k * l)));
        CHECK(pb.strict.b == QP::monomial(1, 1, Rational(k * w.u)) - QP::monomial(1, 0, Rational(l * w.v)));
        // Along {X = 0} the point Y = 0 is x_c = infinity of the principal chart.
        CHECK(camacho_sad(swap_xy(pb.strict), Rational(0)) == frozen_lambda_inf(w));
    }
    const auto pb = pullback_monomial(Form::exact(P("y^3 - x^2")), previous_chart(Weights::make(3, 2)));
    CHECK(pb.strict == Form{P("6*y^2 - 6*y"), P("3*x*y - 2*x")});
}

TEST_CASE("singular points on the principal divisor") {
    const FoliationType t = FoliationType::make(1, 1, 2);
    SpectralData<Rational> s{Rational(1), {Rational(1), Rational(2)}, {Rational(1, 3), Rational(1, 5)}, Rational(1, 7), Rational(0)};
    s.lambda_inf = Rational(-1) - s.lambda[0] - s.lambda[1] - s.lambda0;
    auto pts = singular_points_principal(t, s);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].kind == PrincipalPoint<Rational>::Kind::zero);
    CHECK(pts[1].coordinate == Rational(1));
    CHECK(pts[2].coordinate == Rational(1, 2));
    CHECK(pts[3].kind == PrincipalPoint<Rational>::Kind::infinity);

    const FoliationType t1 = FoliationType::make(3, 2, 1);
    const RatFunc tt = RatFunc::t();
    SpectralData<RatFunc> st{RatFunc(1), {tt}, {tt}, RatFunc(2) * tt, RatFunc(0)};
    st.lambda_inf = RatFunc(-1) - st.lambda[0] - st.lambda0;
    auto p1 = singular_points_principal(t1, st);
    REQUIRE(p1.size() == 3);
    CHECK(p1[1].coordinate == RatFunc(1) / tt);

    s.c[1] = s.c[0];
    CHECK_THROWS_AS(singular_points_principal(t, s), DegenerateBranches);
}

TEST_CASE("Camacho-Sad indices by residues") {
    // d(y^k - x^l): the branch point x_c = 1 has index -1/(kl).
    for (auto [k, l] : {std::pair{3, 2}, {5, 3}, {1, 1}, {2, 3}}) {
        const Weights w = Weights::make(k, l);
        const auto pb = pullback_monomial(Form::exact(cusp(k, l)), principal_chart(w));
        CHECK(camacho_sad(pb.strict, Rational(1)) == Rational(-1, k * l));
        CHECK(camacho_sad(pb.strict, Rational(0)) == frozen_lambda0(w));
        CHECK(camacho_sad(pb.strict, Rational(5)) == Rational(0));
        const auto inf = pullback_monomial(Form::exact(cusp(k, l)), opposite_chart(w));
        CHECK(camacho_sad(inf.strict, Rational(0)) == frozen_lambda_inf(w));
    }
    CHECK_THROWS_AS(camacho_sad(Form{P("1"), P("x")}, Rational(0)), NotInvariantDivisor);
    CHECK_THROWS_AS(camacho_sad(Form{P("y"), P("x^2")}, Rational(0)), HigherOrderPole);
    // Common factors of P and Q cancel before the pole test.
    CHECK(camacho_sad(Form{P("y*x"), P("x^2 - x")}, Rational(0)) == Rational(0));

    for (auto [k, l, n] : {std::tuple{3, 2, 2}, {1, 1, 3}, {5, 3, 1}, {2, 1, 2}}) {
        for (int eps0 = 0; eps0 <= 1; ++eps0) {
            for (int epsi = 0; epsi <= 1; ++epsi) {
                const FoliationType t = FoliationType::make(k, l, n, eps0, epsi);
                SeededPool rng(7 + n, {-3, -2, -1, 1, 2, 3});
                const SpectralData<RatFunc> s = random_spectral(t, rng);
                const OneForm<RatFunc> wd = build_omega_d(t, s);
                RatFunc sum(0);
                for (const auto& pt : singular_points_principal(t, s)) {
                    const RatFunc idx = principal_index(wd, t.w, pt);
                    sum += idx;
                    switch (pt.kind) {
                        case PrincipalPoint<RatFunc>::Kind::zero: CHECK(idx == s.lambda0); break;
                        case PrincipalPoint<RatFunc>::Kind::infinity: CHECK(idx == s.lambda_inf); break;
                        default: CHECK(idx == s.lambda[pt.branch_index]);
                    }
                }
                CHECK(sum == RatFunc(-1));

                // Divisor exponents (e - 1, d - 1) and the dY part along the divisor; for
                // e = 0 the cofactor's own x_c cancels the negative power.
                const auto pb = pullback_monomial(wd, principal_chart(t.w));
                const long e = static_cast<long>(n) * k * (l - t.w.u) + eps0 * (k - t.w.v) + epsi * (l - t.w.u);
                CHECK(pb.exp_x == std::max(e - 1, 0L));
                CHECK(pb.exp_y == t.d() - 1);
                BivPoly<RatFunc> along = BivPoly<RatFunc>::monomial(1, 0, s.c0);
                for (const auto& c : s.c) along = along * (BivPoly<RatFunc>(RatFunc(1)) - BivPoly<RatFunc>::monomial(1, 0, c));
                BivPoly<RatFunc> b0;
                for (const auto& [mo, c] : pb.strict.b.terms()) {
                    if (mo.j == 0) b0.add_term(mo, c);
                }
                CHECK(b0.shifted(pb.exp_x - (e - 1), 0) == along);
            }
        }
    }
}

TEST_CASE("single blow-up charts") {
    auto r = single_blowup(Form{P("y"), P("x")});
    CHECK(r.chart_inf.exp_x == 0);
    CHECK(r.chart_inf.exp_y == 1);
    CHECK(r.chart_inf.strict == Form{P("y"), P("2*x")});
    CHECK(r.chart0.exp_x == 1);
    CHECK(r.chart0.strict == Form{P("2*y"), P("x")});

    r = single_blowup(Form{P("1"), QP()});
    CHECK(r.chart_inf.exp_x == 0);
    CHECK(r.chart_inf.exp_y == 0);
    CHECK(r.chart_inf.strict == Form{P("y"), P("x")});

    // A class member of type (k, l, n, eps0, epsInf) with k > l becomes one of type
    // (k - l, l, n, eps0, 1) after the factor y^{eps0 + epsInf + n l - 1}.
    for (auto [k, l, n] : {std::tuple{3, 2, 1}, {3, 2, 2}, {5, 3, 1}, {2, 1, 2}}) {
        for (int eps0 = 0; eps0 <= 1; ++eps0) {
            for (int epsi = 0; epsi <= 1; ++epsi) {
                const FoliationType t = FoliationType::make(k, l, n, eps0, epsi);
                SeededPool rng(41, {-3, -2, -1, 1, 2, 3});
                const SpectralData<RatFunc> s = random_spectral(t, rng);
                OneForm<RatFunc> w = build_omega_d(t, s);
                // Axis-preserving higher-order terms.
                w.a += BivPoly<RatFunc>::monomial(2, 1 + epsi, RatFunc::t()).shifted(t.n * l, 0);
                w.b += BivPoly<RatFunc>::monomial(1 + eps0, 2, RatFunc(3)).shifted(0, t.n * k);
                const auto pb = single_blowup(w).chart_inf;
                CHECK(pb.exp_x == 0);
                CHECK(pb.exp_y == eps0 + epsi + n * l - 1);
                const FoliationType t2 = FoliationType::make(k - l, l, n, eps0, 1);
                const Jet<RatFunc> jet(pb.strict, k - l, l, 200);
                const MembershipReport<RatFunc> rep = verify_membership(jet, t2);
                CHECK(rep.in_class());
                if (rep.first_failure()) MESSAGE(rep.first_failure()->name << ": " << rep.first_failure()->detail);
            }
        }
    }
}

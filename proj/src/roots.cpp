#include "qhnf/roots.hpp"

#include <algorithm>

#include "qhnf/errors.hpp"

namespace qhnf {

namespace {

std::vector<mpz_class> divisors_of(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= n; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            factors.emplace_back(mpz_class(p), e);
        }
    }
    if (n > 1) {
        if (n >= mpz_class(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
            throw Error("rational root search: coefficient too large to factor");
        }
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

bool is_root(const std::vector<mpz_class>& c, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc == 0;
}

// Truncated power series over Q in s, precision fixed by the vector length.
using Series = std::vector<mpq_class>;

Series series_mul(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_inv(const Series& a) {
    const std::size_t n = a.size();
    Series r(n, 0);
    r[0] = 1 / a[0];
    for (std::size_t i = 1; i < n; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
        r[i] = -acc / a[0];
    }
    return r;
}

// Evaluates sum_i coef[i](s) * w^i in Q[[s]].
Series series_horner(const std::vector<Series>& coef, const Series& w) {
    Series acc(w.size(), 0);
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
        acc = series_mul(acc, w);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += (*it)[k];
    }
    return acc;
}

// sum_j w[j] (t - t0)^j expanded in powers of t.
std::vector<mpq_class> shift_back(const Series& w, const mpq_class& t0) {
    std::vector<mpq_class> out(w.size(), 0);
    std::vector<mpq_class> pw{1};  // (t - t0)^j
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < pw.size(); ++i) out[i] += w[j] * pw[i];
        std::vector<mpq_class> next(pw.size() + 1, 0);
        for (std::size_t i = 0; i < pw.size(); ++i) {
            next[i + 1] += pw[i];
            next[i] -= t0 * pw[i];
        }
        pw = std::move(next);
    }
    return out;
}

RatFunc ratfunc_from_q(const std::vector<mpq_class>& c) {
    mpz_class l = 1;
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(c.size());
    for (const auto& v : c) z.push_back(mpz_class(v * l));
    return RatFunc(ZPoly(std::move(z)), ZPoly(l));
}

}  // namespace

template <>
std::vector<Rational> roots_in_field<Rational>(const UniPoly<Rational>& p) {
    if (p.degree() <= 0) return {};
    std::vector<Rational> roots;
    int shift = 0;
    while (p.coeff(shift).is_zero()) ++shift;
    if (shift > 0) roots.push_back(Rational(0));
    mpz_class l = 1;
    for (int i = shift; i <= p.degree(); ++i) {
        mpz_class d = p.coeff(i).den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> c;
    for (int i = shift; i <= p.degree(); ++i) c.push_back(mpz_class(p.coeff(i).value() * l));
    if (c.size() > 1) {
        const std::size_t max_roots = c.size() - 1;
        std::size_t found = 0;
        for (const auto& num : divisors_of(c.front())) {
            for (const auto& den : divisors_of(c.back())) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (g != 1) continue;
                for (int sgn : {1, -1}) {
                    mpq_class x(num * sgn, den);
                    x.canonicalize();
                    if (is_root(c, x)) {
                        roots.emplace_back(x);
                        ++found;
                    }
                }
                if (found == max_roots) break;
            }
            if (found == max_roots) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

template <>
std::vector<RatFunc> roots_in_field<RatFunc>(const UniPoly<RatFunc>& p_in) {
    if (p_in.degree() <= 0) return {};
    UniPoly<RatFunc> p = p_in.monic();
    {
        UniPoly<RatFunc> g = gcd(p, p.derivative());
        if (g.degree() > 0) p = p.divmod(g).first.monic();
    }
    const int n = p.degree();

    // Constant-coefficient case: the roots are rational.
    if (std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const RatFunc& c) { return c.is_rational_constant(); })) {
        std::vector<Rational> qc;
        for (const auto& c : p.coeffs()) qc.push_back(c.to_rational());
        std::vector<RatFunc> out;
        for (const auto& r : roots_in_field(UniPoly<Rational>(qc))) out.emplace_back(r);
        return out;
    }

    // Clear denominators: integer polynomial coefficients in t, then make monic via w = lead * z.
    ZPoly l(mpz_class(1));
    for (const auto& c : p.coeffs()) {
        ZPoly g = gcd(l, c.den());
        l = l * c.den().divexact(g);
    }
    std::vector<ZPoly> zc;
    for (const auto& c : p.coeffs()) zc.push_back((c.num() * l).divexact(c.den()));
    const ZPoly lead = zc.back();
    std::vector<ZPoly> mc(n + 1);
    mc[n] = ZPoly(mpz_class(1));
    ZPoly lp(mpz_class(1));
    for (int i = n - 1; i >= 0; --i) {
        mc[i] = zc[i] * lp;
        lp = lp * lead;
    }
    int bound = 0;
    for (int i = 0; i < n; ++i) {
        if (mc[i].is_zero()) continue;
        bound = std::max(bound, (mc[i].degree() + (n - i) - 1) / (n - i));
    }
    const std::size_t prec = static_cast<std::size_t>(bound) + 1;

    for (long attempt = 0; attempt < 60; ++attempt) {
        const long t0v = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
        const Rational t0(t0v);
        std::vector<Rational> spec;
        for (const auto& c : mc) spec.push_back(c.eval(t0));
        UniPoly<Rational> ps(spec);
        if (ps.degree() != n || !ps.is_squarefree()) continue;

        std::vector<Series> coef;
        for (const auto& c : mc) {
            Series s(prec, 0);
            auto sh = c.taylor_shift(t0);
            for (std::size_t k = 0; k < prec && k < sh.size(); ++k) s[k] = sh[k].value();
            coef.push_back(std::move(s));
        }
        std::vector<Series> dcoef;
        for (int i = 1; i <= n; ++i) {
            Series s = coef[i];
            for (auto& v : s) v *= i;
            dcoef.push_back(std::move(s));
        }

        std::vector<RatFunc> out;
        const RatFunc lead_f(lead);
        for (const auto& w0 : roots_in_field(ps)) {
            Series w(prec, 0);
            w[0] = w0.value();
            for (int it = 0; it < 64; ++it) {
                Series f = series_horner(coef, w);
                if (std::all_of(f.begin(), f.end(), [](const mpq_class& v) { return v == 0; })) break;
                Series corr = series_mul(f, series_inv(series_horner(dcoef, w)));
                for (std::size_t k = 0; k < prec; ++k) w[k] -= corr[k];
            }
            RatFunc cand = ratfunc_from_q(shift_back(w, t0.value())) / lead_f;
            if (p.eval(cand).is_zero()) out.push_back(cand);
        }
        std::sort(out.begin(), out.end(), [](const RatFunc& a, const RatFunc& b) { return canonical_less(a, b); });
        return out;
    }
    throw Error("root search: no squarefree specialization found");
}

}  // namespace qhnf

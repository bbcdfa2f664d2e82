#pragma once

#include <utility>
#include <vector>

#include "qhnf/bivpoly.hpp"
#include "qhnf/rational.hpp"

namespace qhnf {

/// Coprime weights (k, l) with their Bezout pair: k*u - l*v = 1, 1 <= u <= l, 0 <= v <= k.
struct Weights {
    int k = 1;
    int l = 1;
    int u = 1;
    int v = 0;

    /// Throws NotCoprime unless k, l >= 1 and gcd(k, l) = 1.
    static Weights make(int k, int l);
    friend bool operator==(const Weights&, const Weights&) = default;
};

/// The unique (u, v) with k*u - l*v = 1 in the admissible range.
std::pair<int, int> bezout_uv(int k, int l);

/// Usual integer part [a[ : [a[ <= a < [a[ + 1.
long floor_int(const Rational& a);
/// Strict integer part ]a] : ]a] < a <= ]a] + 1.
long strict_int(const Rational& a);

/// Number of (i, j) in N^2 with k*i + l*j = m, via [mu/l[ - ]mv/k].
long e_count(int k, int l, long m);

/// Quasi-homogeneous type (k, l, n, eps0, epsInf) of the separatrix set.
struct FoliationType {
    Weights w;
    int n = 1;
    int eps0 = 1;
    int eps_inf = 1;

    static FoliationType make(int k, int l, int n, int eps0 = 1, int eps_inf = 1);
    /// d = n*k*l + k*eps0 + l*epsInf.
    long d() const { return static_cast<long>(n) * w.k * w.l + static_cast<long>(w.k) * eps0 + static_cast<long>(w.l) * eps_inf; }
    long kln() const { return static_cast<long>(w.k) * w.l * n; }
    friend bool operator==(const FoliationType&, const FoliationType&) = default;
};

struct Dims {
    long delta_prime = 0;  // free hamiltonian coefficients of the strict normal form
    long delta = 0;        // dimension of the moduli space of unfoldings
};

/// Requires eps0 = epsInf = 1 (AxisRequired otherwise).
Dims dims(const FoliationType& type);

/// Support of the hamiltonian part: k i + l j >= k l n + 1, i <= l n - 1, j <= k n - 1.
std::vector<Mono> hamiltonian_box(int k, int l, int n);

/// Minimal x-exponent of the j-th radial series: l n + 1 + ](1 - l j)/k].
long radial_valuation(int k, int l, int n, int j);

}  // namespace qhnf

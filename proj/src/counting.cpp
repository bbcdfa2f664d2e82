#include "qhnf/counting.hpp"

#include <numeric>

#include "qhnf/errors.hpp"

namespace qhnf {

std::pair<int, int> bezout_uv(int k, int l) {
    if (k < 1 || l < 1 || std::gcd(k, l) != 1) throw NotCoprime(k, l);
    for (int u = 1; u <= l; ++u) {
        long rest = static_cast<long>(k) * u - 1;
        if (rest % l == 0) {
            long v = rest / l;
            if (v >= 0 && v <= k) return {u, static_cast<int>(v)};
        }
    }
    throw NotCoprime(k, l);
}

Weights Weights::make(int k, int l) {
    auto [u, v] = bezout_uv(k, l);
    return Weights{k, l, u, v};
}

long floor_int(const Rational& a) { return a.floor().get_si(); }

long strict_int(const Rational& a) { return a.strict_floor().get_si(); }

long e_count(int k, int l, long m) {
    if (m < 0) return 0;
    auto [u, v] = bezout_uv(k, l);
    return floor_int(Rational(m * u, l)) - strict_int(Rational(m * v, k));
}

FoliationType FoliationType::make(int k, int l, int n, int eps0, int eps_inf) {
    if (n < 1) throw Error("number of cuspidal branches must be >= 1");
    if ((eps0 != 0 && eps0 != 1) || (eps_inf != 0 && eps_inf != 1)) throw Error("axis flags must be 0 or 1");
    return FoliationType{Weights::make(k, l), n, eps0, eps_inf};
}

Dims dims(const FoliationType& type) {
    if (type.eps0 != 1 || type.eps_inf != 1) throw AxisRequired();
    const int k = type.w.k, l = type.w.l;
    const long kln = type.kln();
    Dims r;
    long sum_e = 0;
    for (long m = 1; m <= kln - 1; ++m) {
        const long e = e_count(k, l, m);
        r.delta_prime += type.n - e;
        sum_e += e;
    }
    r.delta = static_cast<long>(type.n) * type.n * k * l - (sum_e + e_count(k, l, 0));
    return r;
}

std::vector<Mono> hamiltonian_box(int k, int l, int n) {
    std::vector<Mono> out;
    const long kln = static_cast<long>(k) * l * n;
    for (int i = 0; i <= l * n - 1; ++i) {
        for (int j = 0; j <= k * n - 1; ++j) {
            if (qdeg(Mono{i, j}, k, l) >= kln + 1) out.push_back(Mono{i, j});
        }
    }
    return out;
}

long radial_valuation(int k, int l, int n, int j) {
    return static_cast<long>(l) * n + 1 + strict_int(Rational(1 - static_cast<long>(l) * j, k));
}

}  // namespace qhnf

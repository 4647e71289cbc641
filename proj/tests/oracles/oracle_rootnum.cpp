// ============================================================================
// Recorded oracle: coprime-filtered root-number sums over [1,N]^2.
//
// Independent implementation: Legendre symbols by Euler's criterion (modular
// exponentiation), radicals and Mobius data by trial division over
// precomputed per-value prime lists.  The library instead uses the
// quadratic-reciprocity ladder and a smallest-prime-factor sieve, so the two
// paths share nothing but the formula
//   W(a,b) = -(a|r(b)) (b|r(a)) (-a|r(b-a)) mu(rad(a b (a-b))),
// r(x) = radical of the odd part of x, (u|v) = prod of Legendre symbols over
// the odd primes of v.  Printed values are frozen into baselines.hpp.
// ============================================================================

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

static int64_t powmod(int64_t b, int64_t e, int64_t m) {
    int64_t r = 1;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

// Legendre symbol (a/p) for odd prime p via Euler's criterion.
static int legendre(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    int64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int main() {
    const int64_t N_MAX = 1024;
    // primes_of[n]: distinct primes of n, by trial division sieve.
    std::vector<std::vector<int32_t>> primes_of(2 * N_MAX + 1);
    for (int64_t p = 2; p <= 2 * N_MAX; ++p)
        if (primes_of[p].empty())
            for (int64_t n = p; n <= 2 * N_MAX; n += p)
                primes_of[n].push_back(static_cast<int32_t>(p));

    auto symbol_vs_odd_radical = [&](int64_t u, int64_t v) {
        int s = 1;
        for (int32_t p : primes_of[std::llabs(v)]) {
            if (p == 2) continue;
            s *= legendre(u, p);
            if (s == 0) return 0;
        }
        return s;
    };
    auto W = [&](int64_t a, int64_t b) {
        int s1 = symbol_vs_odd_radical(a, b);
        int s2 = symbol_vs_odd_radical(b, a);
        int s3 = symbol_vs_odd_radical(-a, b - a);
        std::set<int32_t> ps;
        for (int64_t v : {a, b, std::abs(b - a)})
            for (int32_t p : primes_of[std::llabs(v)]) ps.insert(p);
        int mu = ps.size() % 2 == 0 ? 1 : -1;
        return -s1 * s2 * s3 * mu;
    };

    std::printf("spot checks: W(1,2)=%+d W(2,3)=%+d W(1,3)=%+d W(2,1)=%+d W(3,1)=%+d W(3,2)=%+d\n",
                W(1, 2), W(2, 3), W(1, 3), W(2, 1), W(3, 1), W(3, 2));

    auto envelope = [](int64_t N) {
        return std::log(std::log(double(N))) / std::sqrt(std::log(double(N)));
    };
    for (int64_t N : {3, 64, 256, 1024}) {
        int64_t raw = 0, admissible = 0;
        for (int64_t a = 1; a <= N; ++a)
            for (int64_t b = 1; b <= N; ++b) {
                if (a == b || std::gcd(a, b) != 1) continue;
                ++admissible;
                raw += W(a, b);
            }
        double area = N > 1 ? double(N - 1) * double(N - 1) : 1.0;
        double avg = raw / area;
        std::printf("  N=%-5lld raw=%-8lld admissible=%-9lld avg=%.10f |avg|/env=%.6f\n",
                    (long long)N, (long long)raw, (long long)admissible, avg,
                    std::fabs(avg) / envelope(N));
    }
    return 0;
}

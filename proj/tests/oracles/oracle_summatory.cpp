// ============================================================================
// Recorded oracle: summatory Liouville values and small spot sums.
//
// Independence: lambda is derived from an Omega (prime factors with
// multiplicity) valuation sieve — for each prime power p^k <= limit, bump a
// counter on all its multiples.  This shares no code path with the library's
// linear smallest-prime-factor sieve.
//
// The printed values are frozen into tests/acceptance/baselines.hpp.
// ============================================================================

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

int main() {
    const int64_t limit = 1000000;
    std::vector<uint8_t> omega(limit + 1, 0);
    for (int64_t p = 2; p <= limit; ++p) {
        if (omega[p] != 0) continue;  // composite: already touched by a smaller prime
        for (int64_t q = p; q <= limit; q *= p) {
            for (int64_t n = q; n <= limit; n += q) ++omega[n];
            if (q > limit / p) break;
        }
    }
    std::vector<int8_t> lam(limit + 1, 0);
    lam[1] = 1;
    for (int64_t n = 2; n <= limit; ++n) lam[n] = (omega[n] % 2 == 0) ? 1 : -1;

    std::printf("lambda(1..10):");
    for (int n = 1; n <= 10; ++n) std::printf(" %+d", lam[n]);
    std::printf("\n");
    std::printf("lambda(12) = %+d\n", lam[12]);

    int64_t sum = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        sum += lam[n];
        if (n == 100 || n == 100000 || n == 1000000)
            std::printf("L(%lld) = %lld\n", static_cast<long long>(n),
                        static_cast<long long>(sum));
    }

    int64_t interval = 0;
    for (int64_t n = 101; n <= 110; ++n) interval += lam[n];
    std::printf("sum_{101..110} lambda = %lld\n", static_cast<long long>(interval));

    int64_t even10 = 0;
    for (int64_t n = 2; n <= 10; n += 2) even10 += lam[n];
    std::printf("sum_{n<=10, n even} lambda = %lld\n", static_cast<long long>(even10));

    // max_{x<=N} |L(x)| for the single-modulus BV example.
    int64_t run = 0, maxabs = 0;
    for (int64_t n = 1; n <= 10000; ++n) {
        run += lam[n];
        if (std::abs(run) > maxabs) maxabs = std::abs(run);
    }
    std::printf("max_{x<=10^4} |L(x)| = %lld\n", static_cast<long long>(maxabs));
    return 0;
}

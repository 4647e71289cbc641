#include "parity/factor.hpp"

#include <algorithm>
#include <numeric>

namespace parity {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong-pseudoprime round; n odd, n - 1 = d * 2^r.
template <typename Mul, typename Pow>
bool mr_round(u128 n, u128 a, u128 d, int r, Mul mulmod, Pow powmod) {
    a %= n;
    if (a == 0) return true;
    u128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin(u128 n) {
    if (n < 2) return false;
    for (u128 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // First 13 primes: deterministic below 3.3e24.  The extra bases only
    // matter for the rare inputs beyond that.
    static const u64 bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (n <= UINT64_MAX) {
        u64 n64 = static_cast<u64>(n);
        u64 d64 = static_cast<u64>(d);
        for (u64 a : bases) {
            if (a % n64 == 0) continue;
            if (!mr_round<>(n64, a, d64, r,
                            [](u128 x, u128 y, u128 m) { return mulmod_u64(u64(x), u64(y), u64(m)); },
                            [](u128 x, u128 y, u128 m) { return powmod_u64(u64(x), u64(y), u64(m)); }))
                return false;
        }
        return true;
    }
    for (u64 a : bases) {
        if (!mr_round<>(n, a, d, r, mulmod_u128, powmod_u128)) return false;
    }
    return true;
}

// Pollard's rho, Brent cycle detection.  n must be composite, odd, not a
// prime power of a tiny prime (small factors are stripped first).
u128 pollard_brent(u128 n, u64 seed) {
    auto mul = [&](u128 a, u128 b) -> u128 {
        if (n <= UINT64_MAX)
            return mulmod_u64(static_cast<u64>(a), static_cast<u64>(b), static_cast<u64>(n));
        return mulmod_u128(a, b, n);
    };
    for (u64 c = seed;; ++c) {
        auto step = [&](u128 x) { return (mul(x, x) + c) % n; };
        u128 x = 2, y = 2, q = 1, g = 1, xs = 0;
        int m = 128;
        int r = 1;
        while (g == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = step(y);
            int k = 0;
            while (k < r && g == 1) {
                xs = y;
                int lim = std::min(m, r - k);
                bool cycled = false;
                for (int i = 0; i < lim; ++i) {
                    y = step(y);
                    u128 diff = x > y ? x - y : y - x;
                    if (diff == 0) {
                        // The orbit cycled exactly mod n without exposing a
                        // factor (typical for prime squares); hand the batch
                        // to the backtrack, which retries on full failure.
                        cycled = true;
                        break;
                    }
                    q = mul(q, diff);
                }
                g = cycled ? n : static_cast<u128>(gcd128(static_cast<i128>(q), static_cast<i128>(n)));
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            u128 ys = xs;
            while (g == 1) {
                ys = step(ys);
                u128 diff = x > ys ? x - ys : ys - x;
                if (diff == 0) break;
                g = static_cast<u128>(gcd128(static_cast<i128>(diff), static_cast<i128>(n)));
            }
        }
        if (g != 1 && g != n) return g;
        // Rare cycle failure: retry with the next polynomial increment.
    }
}

}  // namespace

Factorizer::Factorizer(i64 spf_limit) : spf_limit_(spf_limit) {
    if (spf_limit < 3) throw std::domain_error("Factorizer: spf_limit must be >= 3");
    spf_.assign(static_cast<std::size_t>(spf_limit) + 1, 0);
    for (i64 i = 2; i <= spf_limit; ++i) {
        if (spf_[i] == 0)
            for (i64 j = i; j <= spf_limit; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<int32_t>(i);
    }
}

i64 Factorizer::smallest_prime_factor(i64 n) const {
    if (n < 2 || n > spf_limit_)
        throw std::domain_error("smallest_prime_factor: value outside sieve range");
    return spf_[static_cast<std::size_t>(n)];
}

bool Factorizer::is_prime(u128 n) const {
    if (n <= static_cast<u128>(spf_limit_))
        return n >= 2 && spf_[static_cast<std::size_t>(n)] == static_cast<i64>(n);
    return miller_rabin(n);
}

void Factorizer::factor_rec(u128 n, std::vector<PrimePower>& out) const {
    while (n > 1) {
        if (n <= static_cast<u128>(spf_limit_)) {
            i64 m = static_cast<i64>(n);
            while (m > 1) {
                i64 p = spf_[static_cast<std::size_t>(m)];
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                out.push_back({p, e});
            }
            return;
        }
        if (miller_rabin(n)) {
            out.push_back({static_cast<i128>(n), 1});
            return;
        }
        u128 d = pollard_brent(n, 1);
        factor_rec(d, out);
        n /= d;
    }
}

FactoredInteger Factorizer::factor(i128 n) const {
    if (n == 0) throw std::domain_error("factor: zero has no factorization");
    FactoredInteger result;
    result.value = n;
    result.sign = n < 0 ? -1 : 1;
    u128 u = static_cast<u128>(abs128(n));
    // Strip small primes first so the rho fallback only ever sees inputs
    // free of tiny factors.
    for (u64 p : {2, 3, 5, 7, 11, 13}) {
        if (u % p == 0) {
            int e = 0;
            while (u % p == 0) {
                u /= p;
                ++e;
            }
            result.factors.push_back({static_cast<i128>(p), e});
        }
    }
    std::vector<PrimePower> rest;
    factor_rec(u, rest);
    // Merge duplicate primes from recursive splits, then sort ascending.
    std::sort(rest.begin(), rest.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    for (const auto& pp : rest) {
        if (!result.factors.empty() && result.factors.back().prime == pp.prime)
            result.factors.back().exponent += pp.exponent;
        else
            result.factors.push_back(pp);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

const Factorizer& default_factorizer() {
    static const Factorizer instance;
    return instance;
}

int liouville(i128 n) {
    if (n == 0) return 0;
    i128 a = abs128(n);
    if (a == 1) return 1;
    return default_factorizer().factor(a).big_omega() % 2 == 0 ? 1 : -1;
}

int liouville_rational(i128 p, i128 q) {
    if (q == 0) throw std::domain_error("liouville_rational: zero denominator");
    if (p == 0) return 0;
    // lambda is completely multiplicative with values +-1, so the quotient
    // lambda(p)/lambda(q) equals the product and is invariant under common
    // factors of p and q.
    return liouville(p) * liouville(q);
}

SquarePart sq_and_d(i128 n) {
    if (n == 0) throw std::domain_error("sq_and_d: n must be nonzero");
    FactoredInteger f = default_factorizer().factor(abs128(n));
    SquarePart r;
    for (const auto& pp : f.factors)
        for (int i = 0; i < pp.exponent / 2; ++i) r.sq *= pp.prime;
    bool div4 = abs128(n) % 4 == 0;
    r.d = div4 ? r.sq / 2 : r.sq;
    return r;
}

RadicalInfo radical_and_mobius(i128 n) {
    if (n == 0) throw std::domain_error("radical_and_mobius: n must be nonzero");
    FactoredInteger f = default_factorizer().factor(abs128(n));
    RadicalInfo r;
    for (const auto& pp : f.factors) r.radical *= pp.prime;
    r.mu_of_radical = f.num_distinct() % 2 == 0 ? 1 : -1;
    return r;
}

LiouvilleTable liouville_table(i64 limit, std::size_t max_bytes) {
    if (limit < 1) throw std::domain_error("liouville_table: limit must be >= 1");
    std::size_t entries = static_cast<std::size_t>(limit) + 1;
    // Construction scratch: one int32 smallest-prime slot per entry plus the
    // persistent sign byte.
    if (entries > max_bytes / 5)
        throw resource_error("liouville_table: limit " + std::to_string(limit) +
                             " exceeds memory budget");
    LiouvilleTable table;
    table.limit = limit;
    table.signs.assign(entries, 0);
    std::vector<int32_t> lp(entries, 0);
    std::vector<int32_t> primes;
    table.signs[1] = 1;
    for (i64 i = 2; i <= limit; ++i) {
        if (lp[i] == 0) {
            lp[i] = static_cast<int32_t>(i);
            table.signs[i] = -1;
            primes.push_back(static_cast<int32_t>(i));
        }
        for (int32_t p : primes) {
            if (p > lp[i] || static_cast<i128>(p) * i > limit) break;
            lp[p * i] = p;
            table.signs[p * i] = static_cast<signed char>(-table.signs[i]);
        }
    }
    return table;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
    if (lo < 0 || hi < lo) throw std::domain_error("primes_in: bad window");
    std::vector<i64> result;
    if (hi <= 2) return result;
    std::vector<bool> comp(static_cast<std::size_t>(hi), false);
    for (i64 p = 2; p * p < hi; ++p) {
        if (!comp[p])
            for (i64 j = p * p; j < hi; j += p) comp[j] = true;
    }
    for (i64 p = std::max<i64>(2, lo); p < hi; ++p)
        if (!comp[p]) result.push_back(p);
    return result;
}

}  // namespace parity

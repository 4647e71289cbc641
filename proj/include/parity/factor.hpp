#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "parity/int128.hpp"

namespace parity {

// Thrown when a requested allocation exceeds the caller-supplied budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    i128 prime = 0;
    int exponent = 0;
};

// Complete factorization of a nonzero integer: value = sign * prod p_i^e_i,
// primes strictly ascending.
struct FactoredInteger {
    i128 value = 1;
    int sign = 1;
    std::vector<PrimePower> factors;

    // Omega(|value|): number of prime factors counted with multiplicity.
    int big_omega() const {
        int t = 0;
        for (const auto& pp : factors) t += pp.exponent;
        return t;
    }
    // omega(|value|): number of distinct prime factors.
    int num_distinct() const { return static_cast<int>(factors.size()); }
    bool is_squarefree() const {
        for (const auto& pp : factors)
            if (pp.exponent > 1) return false;
        return true;
    }
};

// Factorization backend: a smallest-prime-factor sieve answers everything
// below `spf_limit`; larger inputs fall back to Miller-Rabin primality
// testing plus Pollard's rho (Brent variant).  Primality is deterministic
// below 3.3e24; beyond that the witness set makes an error astronomically
// unlikely (this is a research tool, not crypto).  Instances are immutable
// after construction and safe to share across threads.
class Factorizer {
public:
    static constexpr i64 kDefaultSpfLimit = i64(1) << 21;

    explicit Factorizer(i64 spf_limit = kDefaultSpfLimit);

    // Requires n != 0 (domain_error) and |n| < 2^127.
    FactoredInteger factor(i128 n) const;

    bool is_prime(u128 n) const;

    // Smallest prime factor of n for 2 <= n <= spf_limit().
    i64 smallest_prime_factor(i64 n) const;

    i64 spf_limit() const { return spf_limit_; }

private:
    i64 spf_limit_;
    std::vector<int32_t> spf_;

    void factor_rec(u128 n, std::vector<PrimePower>& out) const;
};

// Shared process-wide backend (built lazily, immutable afterwards).
const Factorizer& default_factorizer();

// Liouville function: lambda(n) = (-1)^Omega(|n|), lambda(0) = 0.
int liouville(i128 n);

// Liouville on rationals: lambda(p/q) = lambda(p)/lambda(q); well defined on
// fractions in lowest or any terms.  q must be nonzero (domain_error);
// p == 0 gives 0.
int liouville_rational(i128 p, i128 q);

// sq(n) = largest s > 0 with s^2 | n, and d_n = sq(n) if 4 does not divide n,
// sq(n)/2 otherwise.  Requires n != 0.
struct SquarePart {
    i128 sq = 1;
    i128 d = 1;
};
SquarePart sq_and_d(i128 n);

// rad(n) = product of the distinct primes dividing n (rad(+-1) = 1), and
// mu(rad(n)) = (-1)^omega(n).  Requires n != 0.
struct RadicalInfo {
    i128 radical = 1;
    int mu_of_radical = 1;
};
RadicalInfo radical_and_mobius(i128 n);

// Packed lambda table for 0..limit built by a linear sieve (each composite
// visited once through its smallest prime factor).  signs[0] = 0.
struct LiouvilleTable {
    i64 limit = 0;
    std::vector<signed char> signs;

    // lambda(v) for |v| <= limit; throws domain_error beyond the table.
    int at(i128 v) const {
        i128 a = abs128(v);
        if (a > limit) throw std::domain_error("LiouvilleTable: value beyond table limit");
        return signs[static_cast<std::size_t>(a)];
    }
    bool covers(i128 v) const { return abs128(v) <= limit; }
};

// Builds the table; construction needs about 5 bytes per entry transiently
// (sieve scratch included) and that footprint is charged against max_bytes.
LiouvilleTable liouville_table(i64 limit, std::size_t max_bytes = SIZE_MAX);

// Primes in the half-open window [lo, hi), ascending.
std::vector<i64> primes_in(i64 lo, i64 hi);

}  // namespace parity

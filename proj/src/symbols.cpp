#include "parity/symbols.hpp"

#include <numeric>
#include <set>
#include <utility>

#include "parity/factor.hpp"

namespace parity {

int jacobi(i128 a, i128 n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i128 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int symbol_ab(i128 a, i128 b) {
    if (b == 0) throw std::domain_error("symbol_ab: b must be nonzero");
    i128 m = abs128(b);
    while (m % 2 == 0) m /= 2;
    return jacobi(a, m);
}

namespace {

// Radical of the odd part of |x|.
i128 odd_radical(i128 x) {
    i128 m = abs128(x);
    while (m % 2 == 0) m /= 2;
    if (m == 1) return 1;
    return radical_and_mobius(m).radical;
}

}  // namespace

int root_number(i64 a, i64 b) {
    if (a == 0 || b == 0 || a == b)
        throw std::domain_error("root_number: requires a, b, a - b all nonzero");
    if (std::gcd(a, b) != 1) throw std::domain_error("root_number: requires gcd(a, b) = 1");
    int s1 = jacobi(a, odd_radical(b));
    int s2 = jacobi(b, odd_radical(a));
    int s3 = jacobi(-static_cast<i128>(a), odd_radical(static_cast<i128>(b) - a));
    // mu(rad(a b (a-b))) = (-1)^{#distinct primes of the product}.
    std::set<i128> primes;
    for (i64 v : {a, b, a - b})
        for (const auto& pp : default_factorizer().factor(v).factors) primes.insert(pp.prime);
    int mu = primes.size() % 2 == 0 ? 1 : -1;
    return -s1 * s2 * s3 * mu;
}

}  // namespace parity

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace parity {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(i128 x);
std::string to_string(u128 x);

// Parses a decimal integer (optional leading '-') into i128; throws
// std::invalid_argument on malformed input or overflow.
i128 parse_i128(const std::string& s);

// (a * b) mod m for any 128-bit operands, via binary doubling.  Only needed
// when m exceeds 64 bits; the 64-bit path should use native u128 products.
u128 mulmod_u128(u128 a, u128 b, u128 m);

u128 powmod_u128(u128 base, u128 exp, u128 m);

// Checked narrowing helper for interfaces that want a plain int64.
inline i64 checked_i64(i128 x, const char* what) {
    if (x > static_cast<i128>(INT64_MAX) || x < static_cast<i128>(INT64_MIN))
        throw std::domain_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<i64>(x);
}

// Extended Euclid: g = gcd(a, b) >= 0 with g = u*a + v*b.
struct ExtGcd {
    i64 g, u, v;
};
inline ExtGcd ext_gcd(i64 a, i64 b) {
    i64 r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        u0 -= q * u1;
        std::swap(u0, u1);
        v0 -= q * v1;
        std::swap(v0, v1);
    }
    if (r0 < 0) {
        r0 = -r0;
        u0 = -u0;
        v0 = -v0;
    }
    return {r0, u0, v0};
}

}  // namespace parity

#include "parity/int128.hpp"

namespace parity {

std::string to_string(u128 x) {
    if (x == 0) return "0";
    char buf[40];
    int pos = 40;
    while (x > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

std::string to_string(i128 x) {
    if (x < 0) return "-" + to_string(static_cast<u128>(-x));
    return to_string(static_cast<u128>(x));
}

i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
        if (s.size() == 1) throw std::invalid_argument("parse_i128: sign only");
    }
    u128 acc = 0;
    const u128 limit = neg ? (static_cast<u128>(1) << 127)
                           : (static_cast<u128>(1) << 127) - 1;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_i128: invalid digit in '" + s + "'");
        int d = c - '0';
        if (acc > (limit - d) / 10)
            throw std::invalid_argument("parse_i128: overflow in '" + s + "'");
        acc = acc * 10 + d;
    }
    if (neg && acc > 0) return -static_cast<i128>(acc - 1) - 1;  // handles -2^127
    return static_cast<i128>(acc);
}

u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    // Fast path: product fits in 128 bits.
    if (a == 0 || b <= ~static_cast<u128>(0) / a) return (a * b) % m;
    u128 result = 0;
    while (b > 0) {
        if (b & 1) {
            result += a;
            if (result >= m || result < a) result -= m;
        }
        u128 a2 = a + a;
        if (a2 >= m || a2 < a) a2 -= m;
        a = a2;
        b >>= 1;
    }
    return result;
}

u128 powmod_u128(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u128(result, base, m);
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace parity

#pragma once

#include <stdexcept>
#include <string>

#include "parity/int128.hpp"

namespace parity {

// Exact rational number with 64-bit numerator/denominator, always stored in
// lowest terms with positive denominator.  Intermediate products are taken in
// 128 bits and the reduced result is range-checked, so arithmetic on the
// modest coordinates used here (polygon vertices, lattice data, sieve
// weights) is exact or throws — never silently wrong.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) { assign(n, d); }

    void assign(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = checked_i64(n, "Rat numerator");
        den = checked_i64(d, "Rat denominator");
    }

    static Rat make(i128 n, i128 d) {
        Rat r;
        r.assign(n, d);
        return r;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    Rat operator+(const Rat& o) const {
        return make(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                    static_cast<i128>(den) * o.den);
    }
    Rat operator-(const Rat& o) const {
        return make(static_cast<i128>(num) * o.den - static_cast<i128>(o.num) * den,
                    static_cast<i128>(den) * o.den);
    }
    Rat operator*(const Rat& o) const {
        return make(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den);
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("Rat: division by zero");
        return make(static_cast<i128>(num) * o.den, static_cast<i128>(den) * o.num);
    }
    Rat operator-() const {
        Rat r;
        r.num = -num;
        r.den = den;
        return r;
    }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return static_cast<i128>(num) * o.den < static_cast<i128>(o.num) * den;
    }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    // Largest integer <= value.
    i64 floor() const {
        i64 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    // Smallest integer >= value.
    i64 ceil() const {
        i64 q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    Rat abs() const { return num < 0 ? -*this : *this; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace parity

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "parity/symbols.hpp"

using namespace parity;

TEST_CASE("jacobi on known values") {
    // Hand-checked Legendre/Jacobi values.
    CHECK(jacobi(1, 1) == 1);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(2, 7) == 1);     // 3^2 = 2 mod 7
    CHECK(jacobi(3, 7) == -1);
    CHECK(jacobi(2, 15) == 1);    // (2/3)(2/5) = (-1)(-1)
    CHECK(jacobi(6, 15) == 0);    // shared factor 3
    CHECK(jacobi(-1, 5) == 1);    // 5 = 1 mod 4
    CHECK(jacobi(-1, 7) == -1);   // 7 = 3 mod 4
    CHECK(jacobi(1001, 9907) == -1);
    CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, 0), std::domain_error);
}

TEST_CASE("jacobi periodicity and multiplicativity") {
    for (i128 n : {i128(3), i128(15), i128(21), i128(105)}) {
        for (i128 a = -20; a <= 20; ++a) {
            CHECK(jacobi(a, n) == jacobi(a + 2 * n, n));
            for (i128 b = 1; b <= 6; ++b)
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
        }
    }
}

TEST_CASE("two-argument symbol reduces to the odd part") {
    // (a | b) sees only odd primes of b, each to the parity of its exponent.
    CHECK(symbol_ab(5, 1) == 1);
    CHECK(symbol_ab(5, 2) == 1);    // odd part of 2 is 1
    CHECK(symbol_ab(5, -2) == 1);
    CHECK(symbol_ab(2, 7) == 1);
    CHECK(symbol_ab(3, 7) == -1);
    CHECK(symbol_ab(3, 14) == -1);  // odd part 7
    CHECK(symbol_ab(3, 49) == 1);   // even exponent squares away
    CHECK(symbol_ab(3, 21) == 0);   // 3 | 21
    CHECK(symbol_ab(7, 45) == jacobi(7, 45));
    CHECK_THROWS_AS(symbol_ab(3, 0), std::domain_error);
}

TEST_CASE("two-argument symbol is completely multiplicative") {
    for (i128 a1 = -6; a1 <= 6; ++a1) {
        for (i128 a2 = -6; a2 <= 6; ++a2) {
            for (i128 b = 1; b <= 30; ++b) {
                CHECK(symbol_ab(a1 * a2, b) == symbol_ab(a1, b) * symbol_ab(a2, b));
                if (a1 != 0 && b >= 1)
                    CHECK(symbol_ab(a1, b * (b + 2)) ==
                          symbol_ab(a1, b) * symbol_ab(a1, b + 2));
            }
        }
    }
}

TEST_CASE("root numbers of small parameter pairs") {
    CHECK(root_number(1, 2) == 1);
    CHECK(root_number(2, 3) == 1);
    CHECK(root_number(1, 3) == -1);
    CHECK(root_number(2, 1) == 1);
    CHECK(root_number(3, 1) == -1);
    CHECK(root_number(3, 2) == 1);
}

TEST_CASE("root number domain restrictions") {
    CHECK_THROWS_AS(root_number(2, 4), std::domain_error);   // gcd > 1
    CHECK_THROWS_AS(root_number(0, 3), std::domain_error);
    CHECK_THROWS_AS(root_number(3, 0), std::domain_error);
    CHECK_THROWS_AS(root_number(3, 3), std::domain_error);   // a = b
}

TEST_CASE("root number is a sign everywhere on a coprime grid") {
    int plus = 0, minus = 0;
    for (i64 a = -12; a <= 12; ++a) {
        for (i64 b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0 || a == b) continue;
            if (std::gcd(a, b) != 1) continue;
            int w = root_number(a, b);
            CHECK((w == 1 || w == -1));
            (w == 1 ? plus : minus)++;
        }
    }
    // Both signs occur; neither dominates completely.
    CHECK(plus > 0);
    CHECK(minus > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "parity/quadfield.hpp"

using namespace parity;

TEST_CASE("field construction and discriminants") {
    QuadField gauss(-1);
    CHECK(gauss.d() == -1);
    CHECK(gauss.disc() == -4);
    CHECK(!gauss.half_basis());
    CHECK(gauss.str() == "Q(sqrt(-1))");

    QuadField k5(5);
    CHECK(k5.disc() == 5);
    CHECK(k5.half_basis());

    QuadField k2(2);
    CHECK(k2.disc() == 8);
    CHECK(!k2.half_basis());

    QuadField k23(-23);
    CHECK(k23.disc() == -23);
    CHECK(k23.half_basis());

    CHECK(QuadField(-1) == QuadField(-1));
    CHECK(QuadField(-1) != QuadField(-2));
}

TEST_CASE("non-squarefree and trivial radicands are rejected") {
    for (i64 d : {0LL, 1LL, 4LL, 9LL, 12LL, 18LL, -4LL, -9LL, -12LL})
        CHECK_THROWS_AS(QuadField{d}, std::domain_error);
}

TEST_CASE("Gaussian integer arithmetic") {
    QuadField K(-1);
    QuadInt a(K, 1, 2), b(K, 3, 4);
    CHECK(a + b == QuadInt(K, 4, 6));
    CHECK(a - b == QuadInt(K, -2, -2));
    CHECK(a * b == QuadInt(K, -5, 10));  // (1+2i)(3+4i)
    CHECK(-a == QuadInt(K, -1, -2));
    CHECK(a.scaled(3) == QuadInt(K, 3, 6));
    CHECK(a.norm() == 5);
    CHECK(a.trace() == 2);
    CHECK(a.conjugate() == QuadInt(K, 1, -2));
    CHECK(QuadInt(K, 0, 0).is_zero());
    CHECK(!a.is_zero());
}

TEST_CASE("half-integral basis arithmetic") {
    // omega = (1 + sqrt(5))/2 satisfies omega^2 = omega + 1.
    QuadField K(5);
    QuadInt w(K, 0, 1);
    CHECK(w * w == QuadInt(K, 1, 1));
    CHECK(w.norm() == -1);
    CHECK(w.trace() == 1);
    CHECK(w.conjugate() == QuadInt(K, 1, -1));

    // omega = (1 + sqrt(-23))/2 satisfies omega^2 = omega - 6.
    QuadField K23(-23);
    QuadInt w23(K23, 0, 1);
    CHECK(w23 * w23 == QuadInt(K23, -6, 1));
    CHECK(w23.norm() == 6);
    CHECK(w23.trace() == 1);
}

TEST_CASE("norm is multiplicative and conjugation distributes") {
    for (i64 d : {-1LL, -2LL, -23LL, 2LL, 5LL, 13LL}) {
        QuadField K(d);
        for (i64 x1 = -3; x1 <= 3; ++x1)
            for (i64 y1 = -3; y1 <= 3; ++y1)
                for (i64 x2 = -2; x2 <= 2; ++x2)
                    for (i64 y2 = -2; y2 <= 2; ++y2) {
                        QuadInt z(K, x1, y1), w(K, x2, y2);
                        QuadInt p = z * w;
                        CHECK(p.norm() == z.norm() * w.norm());
                        CHECK(p.conjugate() == z.conjugate() * w.conjugate());
                        CHECK(p.trace() == p.x * 2 + (K.half_basis() ? p.y : 0));
                        // norm and trace are the coefficients of the minimal
                        // polynomial: z^2 - trace z + norm = 0.
                        QuadInt check = z * z - z.scaled(static_cast<i64>(z.trace()));
                        CHECK(check.x + z.norm() == 0);
                        CHECK(check.y == 0);
                    }
    }
}

TEST_CASE("real embedding sanity via norm signs") {
    // Imaginary fields have nonnegative norms; real fields take both signs.
    QuadField im(-2), re(2);
    CHECK(QuadInt(im, 3, 1).norm() == 11);
    CHECK(QuadInt(re, 1, 1).norm() == -1);
    CHECK(QuadInt(re, 3, 1).norm() == 7);
}

TEST_CASE("coordinate embedding round trip") {
    QuadField K(13);
    QuadInt z(K, -7, 4);
    Vec2 v = embed_j(z);
    CHECK(v == Vec2{-7, 4});
    CHECK(unembed_j(K, v) == z);
}

TEST_CASE("printing") {
    QuadField K5(5), Km1(-1);
    CHECK(QuadInt(K5, 1, 1).str() == "1+1w");
    CHECK(QuadInt(Km1, 1, 2).str() == "1+2s");
    CHECK(QuadInt(Km1, 0, -1).str() == "0-1s");
}

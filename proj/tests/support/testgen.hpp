#pragma once

// Deterministic generation helpers shared by the recorded oracle programs
// (tests/oracles/) and the test suites.  Everything here is seeded splitmix64
// with hand-rolled range reduction, so the generated streams are identical on
// every platform and toolchain — the recorded oracle values stay valid.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

namespace testgen {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform-enough draw in [0, n); n must be positive.
    int64_t below(int64_t n) { return static_cast<int64_t>(next() % static_cast<uint64_t>(n)); }
    // Inclusive range.
    int64_t range(int64_t lo, int64_t hi) { return lo + below(hi - lo + 1); }
};

// A lattice coset in the canonical shape used throughout: basis columns
// (d1, s) and (0, d2), offset (o1, o2).  Index = d1 * d2.
struct CosetSpec {
    int64_t d1 = 1, d2 = 1, s = 0, o1 = 0, o2 = 0;
};

inline int64_t floor_mod(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// Membership test straight from the definition (independent of any library
// lattice code): v = offset + a*(d1,s) + b*(0,d2) for integers a, b.
inline bool coset_member(const CosetSpec& c, int64_t x, int64_t y) {
    if (floor_mod(x - c.o1, c.d1) != 0) return false;
    int64_t a = (x - c.o1) / c.d1;
    return floor_mod(y - c.o2 - a * c.s, c.d2) == 0;
}

inline CosetSpec random_coset(SplitMix64& rng, int64_t max_index) {
    CosetSpec c;
    c.d1 = rng.range(1, max_index);
    c.d2 = rng.range(1, max_index / c.d1);
    c.s = c.d2 > 1 ? rng.below(c.d2) : 0;
    c.o1 = c.d1 > 1 ? rng.below(c.d1) : 0;
    c.o2 = c.d2 > 1 ? rng.below(c.d2) : 0;
    return c;
}

using IPoint = std::pair<int64_t, int64_t>;

inline int64_t cross(const IPoint& o, const IPoint& a, const IPoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; returns hull vertices in counterclockwise order,
// collinear points dropped.
inline std::vector<IPoint> convex_hull(std::vector<IPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<IPoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Random convex polygon with integer vertices inside [-box, box]^2,
// at least 3 vertices, counterclockwise.
inline std::vector<IPoint> random_polygon(SplitMix64& rng, int64_t box) {
    for (;;) {
        int64_t k = rng.range(4, 9);
        std::vector<IPoint> pts;
        for (int64_t i = 0; i < k; ++i)
            pts.emplace_back(rng.range(-box, box), rng.range(-box, box));
        auto hull = convex_hull(std::move(pts));
        if (hull.size() >= 3) return hull;
    }
}

struct FormABC {
    int64_t a = 1, b = 0, c = 1;
};

inline int64_t isqrt64(int64_t n) {
    if (n < 0) return -1;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Primitive irreducible binary quadratic form with |a|,|b|,|c| <= 20, a != 0.
inline FormABC random_form(SplitMix64& rng) {
    for (;;) {
        FormABC f;
        f.a = rng.range(-20, 20);
        f.b = rng.range(-20, 20);
        f.c = rng.range(-20, 20);
        if (f.a == 0) continue;
        int64_t g = std::gcd(std::gcd(std::abs(f.a), std::abs(f.b)), std::abs(f.c));
        if (g != 1) continue;
        int64_t disc = f.b * f.b - 4 * f.a * f.c;
        if (disc >= 0) {
            int64_t s = isqrt64(disc);
            if (s * s == disc) continue;  // reducible
        }
        return f;
    }
}

}  // namespace testgen

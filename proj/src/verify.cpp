#include "parity/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "parity/config.hpp"
#include "parity/experiments.hpp"
#include "parity/ideals.hpp"
#include "parity/lattice.hpp"
#include "parity/quadfield.hpp"
#include "parity/region.hpp"
#include "parity/scan.hpp"
#include "parity/sieve.hpp"
#include "parity/symbols.hpp"

namespace parity {

namespace {

// splitmix64: platform-independent seeded stream for the randomized families.
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    i64 below(i64 n) { return static_cast<i64>(next() % static_cast<u64>(n)); }
    i64 range(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }
};

i64 clamp_scale(i64 v, i64 lo, i64 hi) { return std::max(lo, std::min(v, hi)); }

void push(std::vector<PropertyResult>& out, const char* module, const char* property,
          const std::string& bad, const std::string& ok_note) {
    out.push_back({module, property, bad.empty(), bad.empty() ? ok_note : bad});
}

std::string istr(i128 v) { return to_string(v); }

// ---------------------------------------------------------------------------
// core arithmetic
// ---------------------------------------------------------------------------

i64 brute_square_part(i64 n) {
    i64 a = std::abs(n), best = 1;
    for (i64 k = 1; k * k <= a; ++k)
        if (a % (k * k) == 0) best = k;
    return best;
}

bool brute_is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<PropertyResult> suite_core_arith(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;
    const Factorizer& fac = default_factorizer();
    LiouvilleTable own;
    const LiouvilleTable* T = opt.table;
    if (T == nullptr) {
        own = liouville_table(clamp_scale(opt.limit, 100, 1'000'000));
        T = &own;
    }
    i64 scan = std::min<i64>(T->limit, std::max<i64>(opt.limit, 100));

    {  // complete multiplicativity, checked exhaustively through the smallest
        // prime factor and on random pairs
        std::string bad;
        if (T->at(1) != 1) bad = "lambda(1) != 1";
        for (i64 n = 2; bad.empty() && n <= scan; ++n) {
            i64 p = n <= fac.spf_limit() ? fac.smallest_prime_factor(n)
                                         : checked_i64(fac.factor(n).factors[0].prime, "spf");
            if (T->at(n) != -T->at(n / p))
                bad = "lambda(" + std::to_string(n) + ") != -lambda(" + std::to_string(n / p) +
                      ") at prime factor " + std::to_string(p);
        }
        Rng rng(opt.seed);
        i64 pairs = std::min<i64>(opt.limit, 10'000);
        for (i64 t = 0; bad.empty() && t < pairs; ++t) {
            i64 m = rng.range(1, scan);
            i64 k = rng.range(1, std::max<i64>(1, scan / m));
            if (m * k <= scan && T->at(m * k) != T->at(m) * T->at(k))
                bad = "lambda(" + std::to_string(m) + " * " + std::to_string(k) +
                      ") != lambda(" + std::to_string(m) + ") * lambda(" + std::to_string(k) + ")";
        }
        push(rs, "factor", "liouville-multiplicativity", bad,
             "spf recurrence to " + std::to_string(scan) + ", " + std::to_string(pairs) +
                 " random pairs");
    }

    {  // sieve table vs the factorization backend, index by index
        std::string bad;
        if (T->at(0) != 0) bad = "lambda(0) != 0";
        for (i64 n = 1; bad.empty() && n <= scan; ++n)
            if (T->at(n) != liouville(n))
                bad = "table and factorizer disagree at n=" + std::to_string(n);
        push(rs, "factor", "table-direct-agreement", bad, "all n <= " + std::to_string(scan));
    }

    {  // sign conventions: lambda(-n) = lambda(n), lambda on fractions
        std::string bad;
        Rng rng(opt.seed + 1);
        i64 samples = clamp_scale(opt.limit / 10, 100, 5000);
        for (i64 t = 0; bad.empty() && t < samples; ++t) {
            i64 n = rng.range(1, scan);
            if (liouville(-n) != liouville(n) || T->at(-n) != T->at(n))
                bad = "lambda(-n) != lambda(n) at n=" + std::to_string(n);
            i64 q = rng.range(1, 10'000) * (rng.below(2) ? 1 : -1);
            i64 p = rng.range(-10'000, 10'000);
            if (bad.empty() && liouville_rational(p, q) != (p == 0 ? 0 : liouville(p) * liouville(q)))
                bad = "lambda(" + std::to_string(p) + "/" + std::to_string(q) + ") inconsistent";
        }
        if (bad.empty()) {
            bool threw = false;
            try {
                liouville_rational(3, 0);
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) bad = "lambda(p/0) did not raise a domain error";
        }
        push(rs, "factor", "sign-conventions", bad, std::to_string(samples) + " samples");
    }

    {  // square part sq(n) and the halved variant d_n against brute force
        std::string bad;
        i64 bound = std::min<i64>(opt.limit, 10'000);
        for (i64 n = 1; bad.empty() && n <= bound; ++n) {
            i64 s = brute_square_part(n);
            for (i64 v : {n, -n}) {
                SquarePart sp = sq_and_d(v);
                i128 want_d = (std::abs(v) % 4 == 0) ? s / 2 : s;
                if (sp.sq != s || sp.d != want_d) {
                    bad = "sq/d mismatch at n=" + std::to_string(v) + ": got sq=" + istr(sp.sq) +
                          " d=" + istr(sp.d) + ", brute sq=" + std::to_string(s);
                    break;
                }
            }
        }
        push(rs, "factor", "square-part-brute-force", bad, "|n| <= " + std::to_string(bound));
    }

    {  // primality and factorization against trial division
        std::string bad;
        Rng rng(opt.seed + 2);
        i64 samples = clamp_scale(opt.limit / 10, 100, 3000);
        for (i64 t = 0; bad.empty() && t < samples; ++t) {
            i64 n = rng.range(2, 1'000'000);
            bool bp = brute_is_prime(n);
            if (fac.is_prime(static_cast<u128>(n)) != bp)
                bad = "is_prime(" + std::to_string(n) + ") != trial division";
            if (bad.empty()) {
                FactoredInteger f = fac.factor(n);
                i128 prod = f.sign;
                for (const auto& pp : f.factors) {
                    if (!fac.is_prime(static_cast<u128>(pp.prime)))
                        bad = "non-prime factor " + istr(pp.prime) + " of " + std::to_string(n);
                    for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
                }
                if (bad.empty() && prod != n)
                    bad = "factorization of " + std::to_string(n) + " does not multiply back";
            }
        }
        push(rs, "factor", "factorization-reconstruction", bad,
             std::to_string(samples) + " samples to 1e6");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// symbols
// ---------------------------------------------------------------------------

namespace {

// Legendre symbol by Euler's criterion, for cross-checking jacobi.
int legendre_euler(i64 a, i64 p) {
    i64 r = ((a % p) + p) % p;
    if (r == 0) return 0;
    u128 e = powmod_u128(static_cast<u128>(r), static_cast<u128>((p - 1) / 2),
                         static_cast<u128>(p));
    if (e == 1) return 1;
    if (e == static_cast<u128>(p - 1)) return -1;
    return 2;  // impossible for prime p; flags a failure
}

// Radical of the odd part of a nonzero integer.
i128 odd_radical(i64 v) {
    i128 u = abs128(v);
    while (u % 2 == 0) u /= 2;
    if (u == 1) return 1;
    return radical_and_mobius(u).radical;
}

}  // namespace

std::vector<PropertyResult> suite_symbols(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;

    {  // jacobi on prime moduli vs Euler's criterion
        std::string bad;
        std::vector<i64> ps = primes_in(3, 1000);
        Rng rng(opt.seed + 10);
        i64 samples = clamp_scale(opt.limit / 2, 200, 5000);
        for (i64 t = 0; bad.empty() && t < samples; ++t) {
            i64 p = ps[static_cast<std::size_t>(rng.below(static_cast<i64>(ps.size())))];
            i64 a = rng.range(-1'000'000, 1'000'000);
            if (jacobi(a, p) != legendre_euler(a, p))
                bad = "jacobi(" + std::to_string(a) + ", " + std::to_string(p) +
                      ") != Euler criterion";
        }
        push(rs, "symbols", "jacobi-euler-criterion", bad, std::to_string(samples) + " samples");
    }

    {  // jacobi periodicity and complete multiplicativity in both arguments
        std::string bad;
        Rng rng(opt.seed + 11);
        i64 samples = clamp_scale(opt.limit / 2, 200, 5000);
        for (i64 t = 0; bad.empty() && t < samples; ++t) {
            i64 n1 = 2 * rng.range(0, 2500) + 1;
            i64 n2 = 2 * rng.range(0, 2500) + 1;
            i64 a = rng.range(-1'000'000, 1'000'000);
            i64 b = rng.range(-1'000'000, 1'000'000);
            i64 k = rng.range(-20, 20);
            if (jacobi(a + k * n1, n1) != jacobi(a, n1))
                bad = "jacobi not periodic at a=" + std::to_string(a) + ", n=" + std::to_string(n1);
            else if (jacobi(static_cast<i128>(a) * b, n1) != jacobi(a, n1) * jacobi(b, n1))
                bad = "jacobi not multiplicative in a at n=" + std::to_string(n1);
            else if (jacobi(a, static_cast<i128>(n1) * n2) != jacobi(a, n1) * jacobi(a, n2))
                bad = "jacobi not multiplicative in n at a=" + std::to_string(a);
        }
        push(rs, "symbols", "jacobi-periodicity-multiplicativity", bad,
             std::to_string(samples) + " samples");
    }

    {  // the two-argument symbol sees only the odd part of b, multiplicatively
        std::string bad;
        Rng rng(opt.seed + 12);
        i64 samples = clamp_scale(opt.limit / 2, 200, 5000);
        for (i64 t = 0; bad.empty() && t < samples; ++t) {
            i64 a = rng.range(-100'000, 100'000);
            i64 a2 = rng.range(-1000, 1000);
            i64 b = rng.range(1, 100'000) * (rng.below(2) ? 1 : -1);
            i64 b2 = rng.range(1, 1000) * (rng.below(2) ? 1 : -1);
            if (symbol_ab(a, b) != symbol_ab(a, -b) || symbol_ab(a, b) != symbol_ab(a, 2 * b))
                bad = "(a|b) changed under sign or factor 2 of b, a=" + std::to_string(a) +
                      " b=" + std::to_string(b);
            else if (symbol_ab(static_cast<i128>(a) * a2, b) != symbol_ab(a, b) * symbol_ab(a2, b))
                bad = "(a|b) not multiplicative in a at b=" + std::to_string(b);
            else if (symbol_ab(a, static_cast<i128>(b) * b2) != symbol_ab(a, b) * symbol_ab(a, b2))
                bad = "(a|b) not multiplicative in b at a=" + std::to_string(a);
        }
        push(rs, "symbols", "symbol-odd-part-laws", bad, std::to_string(samples) + " samples");
    }

    {  // root number against an independent assembly of its four factors
        std::string bad;
        Rng rng(opt.seed + 13);
        i64 samples = clamp_scale(opt.limit / 4, 200, 3000);
        i64 done = 0;
        while (bad.empty() && done < samples) {
            i64 a = rng.range(-60, 60);
            i64 b = rng.range(-60, 60);
            if (a == 0 || b == 0 || a == b || std::gcd(std::abs(a), std::abs(b)) != 1) continue;
            ++done;
            int w = -symbol_ab(a, odd_radical(b)) * symbol_ab(b, odd_radical(a)) *
                    symbol_ab(-a, odd_radical(b - a));
            w *= radical_and_mobius(static_cast<i128>(a) * b * (a - b)).mu_of_radical;
            int lib = root_number(a, b);
            if (lib != w || (lib != 1 && lib != -1))
                bad = "root number mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
        }
        if (bad.empty()) {
            bool threw = false;
            try {
                root_number(2, 4);
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) bad = "root_number(2, 4) accepted non-coprime inputs";
            bool threw2 = false;
            try {
                root_number(3, 3);
            } catch (const std::domain_error&) {
                threw2 = true;
            }
            if (!threw2) bad = "root_number(3, 3) accepted a = b";
        }
        push(rs, "symbols", "root-number-assembly", bad, std::to_string(samples) + " curves");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// lattice cosets
// ---------------------------------------------------------------------------

namespace {

struct CosetDef {
    i64 d1 = 1, s = 0, d2 = 1, o1 = 0, o2 = 0;
};

bool def_member(const CosetDef& c, i64 x, i64 y) {
    i64 r = (x - c.o1) % c.d1;
    if (r < 0) r += c.d1;
    if (r != 0) return false;
    i64 a = (x - c.o1) / c.d1;
    i64 q = (y - c.o2 - a * c.s) % c.d2;
    if (q < 0) q += c.d2;
    return q == 0;
}

CosetDef rand_coset_def(Rng& rng, i64 max_index) {
    CosetDef c;
    c.d1 = rng.range(1, max_index);
    c.d2 = rng.range(1, std::max<i64>(1, max_index / c.d1));
    c.s = c.d2 > 1 ? rng.below(c.d2) : 0;
    c.o1 = c.d1 > 1 ? rng.below(c.d1) : 0;
    c.o2 = c.d2 > 1 ? rng.below(c.d2) : 0;
    return c;
}

LatticeCoset to_coset(const CosetDef& c) {
    return LatticeCoset(Mat2{c.d1, 0, c.s, c.d2}, Vec2{c.o1, c.o2});
}

}  // namespace

std::vector<PropertyResult> suite_lattice(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;

    {  // canonical form: reduced entries, index = |det|, generator membership
        std::string bad;
        Rng rng(opt.seed + 20);
        i64 cases = clamp_scale(opt.limit / 20, 50, 2000);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            Mat2 B{rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9)};
            if (B.det() == 0) continue;
            Vec2 o{rng.range(-20, 20), rng.range(-20, 20)};
            LatticeCoset L(B, o);
            bool okshape = L.d1() > 0 && L.d2() > 0 && 0 <= L.shear() && L.shear() < L.d2() &&
                           0 <= L.offset().x && L.offset().x < L.d1() && 0 <= L.offset().y &&
                           L.offset().y < L.d2();
            if (!okshape || L.index() != abs128(B.det()))
                bad = "canonical form violated for basis " + L.str();
            if (bad.empty()) {
                Vec2 c1{B.a, B.c}, c2{B.b, B.d};
                if (!L.contains(o) || !L.contains({o.x + c1.x, o.y + c1.y}) ||
                    !L.contains({o.x + c2.x, o.y + c2.y}))
                    bad = "generators not members of their own coset " + L.str();
            }
            if (bad.empty()) {
                Vec2 c1{B.a, B.c}, c2{B.b, B.d};
                LatticeCoset L2 = LatticeCoset::from_generators(
                    {c1, c2, {c1.x + c2.x, c1.y + c2.y}}, o);
                if (!(L2 == L)) bad = "from_generators disagrees with the basis constructor";
            }
        }
        push(rs, "lattice", "canonical-form-and-index", bad, std::to_string(cases) + " bases");
    }

    {  // membership == the two defining congruences
        std::string bad;
        Rng rng(opt.seed + 21);
        i64 cases = clamp_scale(opt.limit / 20, 50, 2000);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            CosetDef c = rand_coset_def(rng, 30);
            LatticeCoset L = to_coset(c);
            for (int k = 0; bad.empty() && k < 60; ++k) {
                i64 x = rng.range(-100, 100), y = rng.range(-100, 100);
                if (L.contains({x, y}) != def_member(c, x, y))
                    bad = "membership mismatch at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ") for " + L.str();
            }
        }
        push(rs, "lattice", "membership-congruences", bad, std::to_string(cases) + " cosets");
    }

    {  // row progression vs direct enumeration
        std::string bad;
        Rng rng(opt.seed + 22);
        i64 cases = clamp_scale(opt.limit / 20, 50, 2000);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            CosetDef c = rand_coset_def(rng, 30);
            LatticeCoset L = to_coset(c);
            i64 y = rng.range(-30, 30);
            auto rp = L.row_progression(y);
            for (i64 x = -60; bad.empty() && x <= 60; ++x) {
                bool member = def_member(c, x, y);
                bool claimed = rp && ((x - rp->residue) % rp->modulus) == 0;
                if (member != claimed)
                    bad = "row progression wrong at y=" + std::to_string(y) + ", x=" +
                          std::to_string(x) + " for " + L.str();
            }
        }
        push(rs, "lattice", "row-progression-enumeration", bad, std::to_string(cases) + " rows");
    }

    {  // intersection: brute-force equality on a full period box + index laws
        std::string bad;
        Rng rng(opt.seed + 23);
        i64 cases = clamp_scale(opt.limit / 10, 50, 2000);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            CosetDef a = rand_coset_def(rng, 30), b = rand_coset_def(rng, 30);
            LatticeCoset L1 = to_coset(a), L2 = to_coset(b);
            i64 i1 = checked_i64(L1.index(), "verify"), i2 = checked_i64(L2.index(), "verify");
            auto L12 = intersect(L1, L2);
            // Every lattice here contains P * Z^2, so one P-period box decides
            // set equality; P = idx of the intersection when nonempty, else
            // lcm of the two indices.
            i64 P = L12 ? checked_i64(L12->index(), "verify") : std::lcm(i1, i2);
            for (i64 y = 0; bad.empty() && y < P; ++y)
                for (i64 x = 0; x < P; ++x) {
                    bool both = def_member(a, x, y) && def_member(b, x, y);
                    bool got = L12 ? L12->contains({x, y}) : false;
                    if (both != got) {
                        bad = "intersection wrong at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ") of " + L1.str() + " and " + L2.str();
                        break;
                    }
                }
            if (bad.empty() && L12) {
                i64 i12 = checked_i64(L12->index(), "verify");
                if (i12 % std::lcm(i1, i2) != 0 || (i1 * i2) % i12 != 0)
                    bad = "index divisibility violated: " + std::to_string(i1) + ", " +
                          std::to_string(i2) + " -> " + std::to_string(i12);
            }
        }
        push(rs, "lattice", "intersection-brute-force", bad, std::to_string(cases) + " pairs");
    }

    {  // pullback: (a, b) in P  <=>  (a, b c1) and (a, b c2) both in L
        std::string bad;
        Rng rng(opt.seed + 24);
        i64 cases = clamp_scale(opt.limit / 50, 20, 500);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            CosetDef c = rand_coset_def(rng, 20);
            LatticeCoset L = to_coset(c);
            i64 c1 = 0, c2 = 0;
            while (c1 == 0) c1 = rng.range(-6, 6);
            while (c2 == 0) c2 = rng.range(-6, 6);
            auto P = pullback_pair(L, c1, c2);
            i64 K = 2 * checked_i64(L.index(), "verify");
            for (i64 bb = -K; bad.empty() && bb <= K; ++bb)
                for (i64 aa = -K; aa <= K; ++aa) {
                    bool rhs = L.contains({aa, bb * c1}) && L.contains({aa, bb * c2});
                    bool lhs = P ? P->contains({aa, bb}) : false;
                    if (lhs != rhs) {
                        bad = "pullback wrong at (" + std::to_string(aa) + ", " +
                              std::to_string(bb) + "), c1=" + std::to_string(c1) +
                              ", c2=" + std::to_string(c2) + ", L=" + L.str();
                        break;
                    }
                }
            if (bad.empty() && P) {
                i128 sq = L.index() * L.index();
                if (sq % P->index() != 0)
                    bad = "pullback index does not divide idx(L)^2 for " + L.str();
            }
        }
        push(rs, "lattice", "pullback-membership", bad, std::to_string(cases) + " cases");
    }

    {  // affine images: index law, forward membership, denominator identity
        std::string bad;
        Rng rng(opt.seed + 25);
        i64 cases = clamp_scale(opt.limit / 50, 20, 500);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            CosetDef c = rand_coset_def(rng, 20);
            LatticeCoset L = to_coset(c);
            Mat2 M{rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5)};
            if (M.det() == 0) continue;
            LatticeCoset LM = affine_image(M, L);
            if (LM.index() != L.index() * abs128(M.det()))
                bad = "affine image index law violated for " + L.str();
            for (int k = 0; bad.empty() && k < 40; ++k) {
                i64 u = rng.range(-8, 8), v = rng.range(-8, 8);
                Vec2 p{c.o1 + u * c.d1, c.o2 + u * c.s + v * c.d2};
                if (!LM.contains(M.apply(p)))
                    bad = "affine image misses a mapped member of " + L.str();
            }
            if (bad.empty()) {
                i64 den = rng.range(2, 3);
                Mat2 Md{M.a * den, M.b * den, M.c * den, M.d * den};
                if (!(affine_image(Md, L, den) == LM))
                    bad = "denominator scaling identity violated for " + L.str();
            }
        }
        push(rs, "lattice", "affine-image-laws", bad, std::to_string(cases) + " maps");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// region + scan
// ---------------------------------------------------------------------------

namespace {

using IPt = std::pair<i64, i64>;

i64 icross(const IPt& o, const IPt& a, const IPt& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

std::vector<IPt> hull_of(std::vector<IPt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<IPt> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && icross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && icross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<IPt> rand_int_polygon(Rng& rng, i64 box) {
    for (;;) {
        i64 k = rng.range(4, 9);
        std::vector<IPt> pts;
        for (i64 i = 0; i < k; ++i) pts.emplace_back(rng.range(-box, box), rng.range(-box, box));
        auto h = hull_of(std::move(pts));
        if (h.size() >= 3) return h;
    }
}

ConvexRegion region_of(const std::vector<IPt>& poly) {
    std::vector<RatPoint> vs;
    vs.reserve(poly.size());
    for (const IPt& p : poly) vs.push_back({Rat(p.first), Rat(p.second)});
    return ConvexRegion(vs);
}

bool int_in_polygon(const std::vector<IPt>& poly, i64 x, i64 y) {
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (icross(poly[i], poly[(i + 1) % n], {x, y}) < 0) return false;
    return true;
}

}  // namespace

std::vector<PropertyResult> suite_region_scan(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;
    const i64 B = 30;

    {  // exact counting vs direct enumeration
        std::string bad;
        Rng rng(opt.seed + 30);
        i64 cases = clamp_scale(opt.limit / 100, 10, 200);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            auto poly = rand_int_polygon(rng, B);
            ConvexRegion S = region_of(poly);
            CosetDef c = rand_coset_def(rng, 12);
            LatticeCoset L = to_coset(c);
            i128 brute = 0;
            for (i64 y = -B; y <= B; ++y)
                for (i64 x = -B; x <= B; ++x)
                    if (def_member(c, x, y) && int_in_polygon(poly, x, y)) ++brute;
            i128 got = count_points(S, L);
            if (got != brute)
                bad = "count_points=" + istr(got) + " vs enumeration=" + istr(brute) + " on " +
                      S.str() + " with " + L.str();
        }
        push(rs, "region", "count-enumeration", bad, std::to_string(cases) + " polygons");
    }

    {  // the row decomposition reproduces the exact point set
        std::string bad;
        Rng rng(opt.seed + 31);
        i64 cases = clamp_scale(opt.limit / 100, 10, 100);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            auto poly = rand_int_polygon(rng, B);
            ConvexRegion S = region_of(poly);
            CosetDef c = rand_coset_def(rng, 12);
            LatticeCoset L = to_coset(c);
            for (i64 y = -B; bad.empty() && y <= B; ++y) {
                std::vector<i64> want;
                for (i64 x = -B; x <= B; ++x)
                    if (def_member(c, x, y) && int_in_polygon(poly, x, y)) want.push_back(x);
                std::vector<i64> got;
                if (auto row = row_at(S, L, y))
                    for (i64 k = 0; k < row->count; ++k) got.push_back(row->x_first + k * row->x_step);
                if (want != got)
                    bad = "row at y=" + std::to_string(y) + " wrong on " + S.str() + " with " +
                          L.str();
            }
        }
        push(rs, "region", "row-decomposition-exactness", bad, std::to_string(cases) + " polygons");
    }

    {  // area laws under affine maps and scaling
        std::string bad;
        Rng rng(opt.seed + 32);
        i64 cases = clamp_scale(opt.limit / 100, 10, 200);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            auto poly = rand_int_polygon(rng, B);
            ConvexRegion S = region_of(poly);
            Mat2 M{rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4)};
            if (M.det() == 0) continue;
            ConvexRegion SM = S.affine_image(M);
            Rat want = S.area() * Rat(checked_i64(abs128(M.det()), "verify"));
            if (!(SM.area() == want))
                bad = "affine area law violated: det=" + istr(M.det()) + " on " + S.str();
            if (bad.empty()) {
                Rat f(rng.range(1, 5), rng.range(1, 3));
                Rat scaled_area = S.scaled(f).area();
                if (!(scaled_area == S.area() * f * f))
                    bad = "scaling area law violated with f=" + f.str() + " on " + S.str();
            }
            if (bad.empty()) {
                for (const IPt& p : poly) {
                    RatPoint mp{Rat(M.a * p.first + M.b * p.second),
                                Rat(M.c * p.first + M.d * p.second)};
                    if (!SM.contains(mp)) {
                        bad = "mapped vertex escapes the affine image of " + S.str();
                        break;
                    }
                }
            }
        }
        push(rs, "region", "affine-area-membership", bad, std::to_string(cases) + " maps");
    }

    {  // degenerate shapes: empty, single point, segment
        std::string bad;
        ConvexRegion empty;
        LatticeCoset Z2;
        if (count_points(empty, Z2) != 0 || !empty.empty() || integer_y_range(empty))
            bad = "empty region misbehaves";
        if (bad.empty()) {
            ConvexRegion pt({{Rat(2), Rat(3)}});
            if (count_points(pt, Z2) != 1 || !pt.contains(RatPoint{Rat(2), Rat(3)}))
                bad = "single integer point region should count 1";
            ConvexRegion half({{Rat(1, 2), Rat(0)}});
            if (bad.empty() && count_points(half, Z2) != 0)
                bad = "non-integral point region should count 0";
        }
        if (bad.empty()) {
            ConvexRegion seg({{Rat(0), Rat(0)}, {Rat(5), Rat(0)}});
            if (count_points(seg, Z2) != 6) bad = "horizontal segment [0,5] should count 6 points";
            LatticeCoset even = LatticeCoset::x_congruence(2, 0);
            if (bad.empty() && count_points(seg, even) != 3)
                bad = "segment against an even-x coset should count 3 points";
        }
        push(rs, "region", "degenerate-shapes", bad, "empty, point, segment");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// quadratic fields and ideals
// ---------------------------------------------------------------------------

namespace {

const i64 kFieldPool[] = {-1, -2, -5, -23, 2, 3, 5, 13};
const i64 kRestrictionFields[] = {-1, -5, 2, 5, -23};

// Definition-based membership in I = Z a + Z (b + c w).
bool ideal_member(const IdealStd& I, i64 zx, i64 zy) {
    if (zy % I.c() != 0) return false;
    i64 n = zy / I.c();
    i128 rem = static_cast<i128>(zx) - static_cast<i128>(n) * I.b();
    return rem % I.a() == 0;
}

int kronecker_disc(i64 disc, i64 p) {
    if (p == 2) {
        if (disc % 2 == 0) return 0;
        i64 r = ((disc % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return jacobi(disc, p);
}

struct FormABC {
    i64 a, b, c;
};

FormABC rand_primitive_form(Rng& rng) {
    for (;;) {
        FormABC f{rng.range(-20, 20), rng.range(-20, 20), rng.range(-20, 20)};
        if (f.a == 0) continue;
        if (std::gcd(std::gcd(std::abs(f.a), std::abs(f.b)), std::abs(f.c)) != 1) continue;
        i64 disc = f.b * f.b - 4 * f.a * f.c;
        if (disc >= 0) {
            i64 s = static_cast<i64>(std::sqrt(static_cast<double>(disc)));
            while (s > 0 && s * s > disc) --s;
            while ((s + 1) * (s + 1) <= disc) ++s;
            if (s * s == disc) continue;
        }
        return f;
    }
}

}  // namespace

std::vector<PropertyResult> suite_quadfield(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;

    {  // norm, trace, conjugation, embedding laws
        std::string bad;
        Rng rng(opt.seed + 40);
        i64 cases = clamp_scale(opt.limit / 10, 200, 5000);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            QuadField K(kFieldPool[rng.below(8)]);
            QuadInt z(K, rng.range(-50, 50), rng.range(-50, 50));
            QuadInt w(K, rng.range(-50, 50), rng.range(-50, 50));
            if ((z * w).norm() != z.norm() * w.norm())
                bad = "norm not multiplicative in " + K.str() + " at z=" + z.str() +
                      ", w=" + w.str();
            else if (!(z * z.conjugate() ==
                       QuadInt(K, checked_i64(z.norm(), "verify"), 0)))
                bad = "z * conj(z) != norm in " + K.str() + " at z=" + z.str();
            else if (!(z + z.conjugate() == QuadInt(K, checked_i64(z.trace(), "verify"), 0)))
                bad = "z + conj(z) != trace in " + K.str() + " at z=" + z.str();
            else if (!(z.conjugate().conjugate() == z))
                bad = "conjugation not an involution in " + K.str();
            else if (!((z * w).conjugate() == z.conjugate() * w.conjugate()))
                bad = "conjugation not multiplicative in " + K.str();
            else if (!(unembed_j(K, embed_j(z)) == z))
                bad = "embedding round trip failed in " + K.str();
        }
        push(rs, "quadfield", "norm-trace-conjugation", bad, std::to_string(cases) + " samples");
    }

    {  // prime splitting: reconstruction, inertia degrees, Kronecker symbol
        std::string bad;
        for (i64 d : kFieldPool) {
            if (!bad.empty()) break;
            QuadField K(d);
            for (i64 p : primes_in(2, 60)) {
                Splitting sp = factor_prime(K, p);
                IdealStd whole = IdealStd(K, p, 0, p);
                int k = kronecker_disc(K.disc(), p);
                SplitKind want = k == 1    ? SplitKind::split
                                 : k == -1 ? SplitKind::inert
                                           : SplitKind::ramified;
                if (sp.kind != want) {
                    bad = "splitting kind disagrees with the Kronecker symbol at p=" +
                          std::to_string(p) + " in " + K.str();
                    break;
                }
                IdealStd prod = IdealStd::unit_ideal(K);
                int ef = 0;
                for (const PrimeIdeal& pi : sp.primes) {
                    int e = sp.kind == SplitKind::ramified ? 2 : 1;
                    ef += e * pi.inertia;
                    for (int i = 0; i < e; ++i) prod = multiply(prod, pi.ideal);
                    i128 pf = 1;
                    for (int i = 0; i < pi.inertia; ++i) pf *= p;
                    if (pi.ideal.norm() != pf) {
                        bad = "prime ideal norm != p^f at p=" + std::to_string(p) + " in " +
                              K.str();
                        break;
                    }
                }
                if (!bad.empty()) break;
                if (ef != 2 || !(prod == whole)) {
                    bad = "splitting of p=" + std::to_string(p) + " in " + K.str() +
                          " does not multiply back to (p)";
                    break;
                }
                if (sp.kind == SplitKind::split &&
                    !(sp.primes[0].ideal.conjugated() == sp.primes[1].ideal)) {
                    bad = "split primes not conjugate at p=" + std::to_string(p) + " in " +
                          K.str();
                    break;
                }
            }
        }
        push(rs, "quadfield", "prime-splitting-reconstruction", bad,
             "8 fields x primes below 60");
    }

    {  // the extended parity restricts to the classical one on rational ideals
        std::string bad;
        i64 bound = std::min<i64>(opt.limit, 10'000);
        for (i64 d : kRestrictionFields) {
            if (!bad.empty()) break;
            QuadField K(d);
            for (i64 n = 1; n <= bound; ++n) {
                IdealStd In(K, n, 0, n);
                int e = lambda_ext_exponent(In);
                int lam = liouville(n);
                bool ok = e % 2 == 0 && ((e % 4 == 0) ? 1 : -1) == lam;
                if (!ok) {
                    bad = "extended parity of (" + std::to_string(n) + ") in " + K.str() +
                          " does not restrict to lambda";
                    break;
                }
            }
        }
        push(rs, "quadfield", "parity-restriction", bad,
             "(n) for n <= " + std::to_string(std::min<i64>(opt.limit, 10'000)) + " in 5 fields");
    }

    {  // ideal factorization multiplies back
        std::string bad;
        Rng rng(opt.seed + 41);
        i64 cases = clamp_scale(opt.limit / 100, 20, 200);
        for (i64 t = 0; bad.empty() && t < cases; ++t) {
            QuadField K(kFieldPool[rng.below(8)]);
            QuadInt z(K, rng.range(-40, 40), rng.range(-40, 40));
            if (z.is_zero()) continue;
            IdealStd I = IdealStd::principal(z);
            auto fs = factor_ideal(I);
            IdealStd prod = IdealStd::unit_ideal(K);
            i128 nprod = 1;
            for (const IdealFactor& f : fs)
                for (int i = 0; i < f.exponent; ++i) {
                    prod = multiply(prod, f.prime);
                    nprod *= f.prime.norm();
                }
            if (!(prod == I) || nprod != I.norm())
                bad = "ideal factorization of (" + z.str() + ") in " + K.str() +
                      " does not multiply back";
        }
        push(rs, "quadfield", "ideal-factorization-reconstruction", bad,
             std::to_string(cases) + " principal ideals");
    }

    {  // form decomposition: a Q(x, y) = norm(x alpha1 + y alpha2)
        std::string bad;
        Rng rng(opt.seed + 42);
        i64 forms = clamp_scale(opt.limit / 100, 20, 100);
        for (i64 t = 0; bad.empty() && t < forms; ++t) {
            FormABC f = rand_primitive_form(rng);
            FormDecomposition F = form_to_norm(f.a, f.b, f.c);
            if (F.index < 1) {
                bad = "nonpositive module index for form (" + std::to_string(f.a) + ", " +
                      std::to_string(f.b) + ", " + std::to_string(f.c) + ")";
                break;
            }
            for (i64 x = -12; bad.empty() && x <= 12; ++x)
                for (i64 y = -12; y <= 12; ++y) {
                    i128 q = static_cast<i128>(f.a) * x * x + static_cast<i128>(f.b) * x * y +
                             static_cast<i128>(f.c) * y * y;
                    i128 lhs = static_cast<i128>(f.a) * q;
                    i128 rhs = (F.alpha1.scaled(x) + F.alpha2.scaled(y)).norm();
                    if (lhs != rhs) {
                        bad = "norm identity fails for form (" + std::to_string(f.a) + ", " +
                              std::to_string(f.b) + ", " + std::to_string(f.c) + ") at (" +
                              std::to_string(x) + ", " + std::to_string(y) + ")";
                        break;
                    }
                }
        }
        push(rs, "quadfield", "form-norm-identity", bad,
             std::to_string(forms) + " forms, |x|,|y| <= 12");
    }

    {  // progression of x with x + y0 w in a primitive prime ideal
        std::string bad;
        Rng rng(opt.seed + 43);
        i64 cases = clamp_scale(opt.limit / 100, 20, 200);
        i64 done = 0;
        while (bad.empty() && done < cases) {
            QuadField K(kFieldPool[rng.below(8)]);
            i64 p = 0;
            std::vector<i64> ps = primes_in(3, 200);
            p = ps[static_cast<std::size_t>(rng.below(static_cast<i64>(ps.size())))];
            Splitting sp = factor_prime(K, p);
            if (sp.kind == SplitKind::inert) continue;
            ++done;
            const IdealStd& P = sp.primes[0].ideal;
            i64 y0 = rng.range(-12, 12);
            auto pr = ideal_row_progression(P, y0);
            for (i64 x = -2 * p; bad.empty() && x <= 2 * p; ++x) {
                bool member = ideal_member(P, x, y0);
                bool claimed = pr && (((x - pr->residue) % pr->modulus) == 0);
                if (member != claimed)
                    bad = "ideal row progression wrong at x=" + std::to_string(x) + ", y0=" +
                          std::to_string(y0) + " for p=" + std::to_string(p) + " in " + K.str();
            }
            if (bad.empty() && pr && pr->modulus != checked_i64(P.norm(), "verify"))
                bad = "ideal row modulus != norm at p=" + std::to_string(p) + " in " + K.str();
        }
        if (bad.empty()) {
            QuadField K(-1);
            IdealStd two(K, 2, 0, 2);  // imprimitive: c = 2
            bool threw = false;
            try {
                ideal_row_progression(two, 0);
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) bad = "imprimitive ideal accepted by the row progression";
        }
        push(rs, "quadfield", "ideal-row-progression", bad, std::to_string(cases) + " primes");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// sieve weights
// ---------------------------------------------------------------------------

namespace {

struct WindowSpec {
    i64 lo, hi, y;
    std::optional<i64> wlo;
};

// The support rule, re-checked per element: d = p1 > ... > pr with all pi in
// P, squarefree, and prefix * pm^3 < y at every odd position m.
bool support_element_ok(i64 d, i64 y, const std::vector<i64>& P) {
    if (d == 1) return true;
    std::set<i64> pset(P.begin(), P.end());
    std::vector<i64> fs;
    i64 m = d;
    for (i64 p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            fs.push_back(p);
            m /= p;
        }
    if (m > 1) fs.push_back(m);
    std::vector<i64> sorted(fs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (i64 p : fs)
        if (!pset.count(p)) return false;
    std::sort(fs.begin(), fs.end(), std::greater<>());
    i128 prefix = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i % 2 == 0) {  // odd position (1-indexed)
            i128 cube = static_cast<i128>(fs[i]) * fs[i] * fs[i];
            if (prefix * cube >= y) return false;
        }
        prefix *= fs[i];
    }
    return prefix < y;
}

int mu_of(i64 d) {
    int cnt = 0;
    for (i64 p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            ++cnt;
            d /= p;
        }
    if (d > 1) ++cnt;
    return cnt % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<PropertyResult> suite_sieve(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;
    const WindowSpec windows[] = {
        {2, 10, 10, std::nullopt},
        {2, 100, 100, std::nullopt},
        {3, 30, 50, 3},
        {10, 1000, 1000, 10},
    };

    {  // support soundness + completeness (small windows) + weight values
        std::string bad;
        for (const WindowSpec& w : windows) {
            if (!bad.empty()) break;
            std::vector<i64> P = primes_in(w.lo, w.hi);
            SieveWeights W = rosser_upper(P, w.y, w.wlo);
            for (const auto& [d, wt] : W.weights) {
                if (!support_element_ok(d, w.y, P)) {
                    bad = "support element " + std::to_string(d) + " violates the window rule [" +
                          std::to_string(w.lo) + ", " + std::to_string(w.hi) + "), y=" +
                          std::to_string(w.y);
                    break;
                }
                if (!(wt == Rat(mu_of(d)))) {
                    bad = "weight at d=" + std::to_string(d) + " is not mu(d)";
                    break;
                }
            }
            if (bad.empty() && w.hi <= 100) {  // exhaustive completeness on small windows
                for (i64 d = 1; d < w.y; ++d)
                    if (support_element_ok(d, w.y, P) != (W.weights.count(d) > 0)) {
                        bad = "support completeness fails at d=" + std::to_string(d) +
                              " for window [" + std::to_string(w.lo) + ", " +
                              std::to_string(w.hi) + ")";
                        break;
                    }
            }
        }
        push(rs, "sieve", "upper-weight-support", bad, "4 windows");
    }

    {  // nonnegative divisor-sum defect, exhaustively
        std::string bad;
        i64 bound = clamp_scale(opt.limit * 100, 10'000, 1'000'000);
        for (const WindowSpec& w : windows) {
            if (!bad.empty()) break;
            SigmaWeights Sg = sigma_from_lambda(rosser_upper(primes_in(w.lo, w.hi), w.y, w.wlo));
            for (i64 n = 1; n <= bound; ++n)
                if (defect(Sg, n).num < 0) {
                    bad = "negative defect at n=" + std::to_string(n) + " for window [" +
                          std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")";
                    break;
                }
        }
        push(rs, "sieve", "divisor-sum-nonnegativity", bad,
             "n <= " + std::to_string(bound) + ", 4 windows");
    }

    {  // defect_sum: fast path, callback path, and direct loop all agree
        std::string bad;
        Rng rng(opt.seed + 50);
        i64 span = clamp_scale(opt.limit, 1000, 20'000);
        for (int t = 0; bad.empty() && t < 20; ++t) {
            const WindowSpec& w = windows[2 + rng.below(2)];  // windows with wlo > 2
            SigmaWeights Sg = sigma_from_lambda(rosser_upper(primes_in(w.lo, w.hi), w.y, w.wlo));
            i64 m = rng.range(1, *w.wlo - 1);
            i64 a = rng.range(-50, 50);
            i64 N1 = rng.range(1, 100);
            i64 N2 = N1 + span;
            DefectSumResult fast = defect_sum(Sg, a, m, N1, N2);
            Rat cb_sum;
            i64 cb_terms = 0;
            DefectSumResult withcb = defect_sum(Sg, a, m, N1, N2, [&](i64, const Rat& dv) {
                cb_sum = cb_sum + dv.abs();
                ++cb_terms;
            });
            Rat direct;
            i64 n0 = N1 + (((a - N1) % m) + m) % m;
            for (i64 n = n0; n < N2; n += m) direct = direct + defect(Sg, n).abs();
            if (!(fast.sum == withcb.sum) || !(fast.sum == direct) || !(fast.sum == cb_sum) ||
                fast.terms != cb_terms || fast.terms != withcb.terms)
                bad = "defect_sum paths disagree at m=" + std::to_string(m) + ", a=" +
                      std::to_string(a) + ", window [" + std::to_string(w.lo) + ", " +
                      std::to_string(w.hi) + ")";
        }
        push(rs, "sieve", "defect-sum-paths", bad, "20 cases, span " + std::to_string(span));
    }

    {  // split sum: bracket inequality and exact closing identity
        std::string bad;
        LiouvilleTable T = liouville_table(2000);
        SigmaWeights Sg = sigma_from_lambda(rosser_upper(primes_in(3, 30), 50, 3));
        auto g = [&](i64 n) { return std::complex<double>(T.at(n), 0.0); };
        auto f = [](i64 x, i64 y) {
            return std::complex<double>(((x ^ y) & 1) ? -1.0 : 1.0, 0.0);
        };
        const LatticeCoset cosets[] = {LatticeCoset(), LatticeCoset::y_congruence(2, 1)};
        for (const LatticeCoset& L : cosets) {
            if (!bad.empty()) break;
            ConvexRegion S = ConvexRegion::box(Rat(1), Rat(40), Rat(1), Rat(40));
            SplitTripleResult st = split_triple_sum(Sg, g, f, S, L);
            double lhs = 0, main2 = 0, defect_direct = 0;
            for_each_row(S, L, [&](const LatticeRow& r) {
                for (i64 k = 0; k < r.count; ++k) {
                    i64 x = r.x_first + k * r.x_step;
                    lhs += T.at(x) * f(x, r.y).real();
                    defect_direct += std::abs(defect(Sg, x).to_double());
                    for (const auto& [d, sv] : Sg.sigma)
                        if (std::abs(x) % d == 0)
                            main2 += sv.to_double() * T.at(d) * T.at(x / d) * f(x, r.y).real();
                }
            });
            if (st.main.imag() != 0.0 || st.main.real() != main2)
                bad = "closing identity not exact for " + L.str();
            else if (!(st.defect_bound == st.defect_bound.abs()) ||
                     st.defect_bound.to_double() != defect_direct)
                bad = "defect bound mismatch for " + L.str();
            else if (std::abs(lhs - st.main.real()) > st.defect_bound.to_double())
                bad = "bracket inequality violated for " + L.str();
        }
        push(rs, "sieve", "split-sum-identity", bad, "2 cosets on [1,40]^2");
    }

    {  // ideal-side weights: norm bound, unit weights, nonnegative defect
        std::string bad;
        QuadField K(-1);
        Splitting s2 = factor_prime(K, 2), s3 = factor_prime(K, 3);
        std::vector<IdealStd> P{s2.primes[0].ideal, s3.primes[0].ideal};
        IdealSigmaWeights W = ideal_sigma(K, P, 10);
        for (const auto& [I, sv] : W.sigma) {
            if (I.norm() >= 10) {
                bad = "supported ideal norm " + istr(I.norm()) + " >= cut";
                break;
            }
            if (!(sv == Rat(1)) && !(sv == Rat(-1))) {
                bad = "ideal sigma weight not a sign";
                break;
            }
        }
        if (bad.empty()) {
            Rng rng(opt.seed + 51);
            for (int t = 0; t < 200 && bad.empty(); ++t) {
                QuadInt z(K, rng.range(-20, 20), rng.range(-20, 20));
                if (z.is_zero()) continue;
                if (ideal_defect(W, z).num < 0)
                    bad = "negative ideal defect at z=" + z.str();
            }
        }
        push(rs, "sieve", "ideal-weight-structure", bad, "Q(sqrt(-1)), cut 10");
    }

    return rs;
}

// ---------------------------------------------------------------------------
// experiments
// ---------------------------------------------------------------------------

namespace {

// Definition-based evaluation of one family term, independent of the scan
// pipeline (direct double loop, table lookups, gcd filter inline).
i64 brute_family_sum(const FormSpec& form, const LiouvilleTable& T, i64 x0, i64 x1, i64 y0,
                     i64 y1, const CosetDef& c) {
    i64 total = 0;
    for (i64 y = y0; y <= y1; ++y)
        for (i64 x = x0; x <= x1; ++x) {
            if (!def_member(c, x, y)) continue;
            if (form.coprime_effective() && std::gcd(std::abs(x), std::abs(y)) != 1) continue;
            i64 term = 0;
            switch (form.kind) {
                case FormKind::triple_linear: {
                    term = 1;
                    for (const auto& row : form.linear) {
                        i64 v = row[0] * x + row[1] * y;
                        int l = T.at(v);
                        if (l == 0) {
                            term = 0;
                            break;
                        }
                        term *= l;
                    }
                    break;
                }
                case FormKind::quad_times_linear: {
                    i64 q = form.quad[0] * x * x + form.quad[1] * x * y + form.quad[2] * y * y;
                    i64 l = form.quad[3] * x + form.quad[4] * y;
                    term = T.at(q) == 0 ? 0 : T.at(q) * T.at(l);
                    break;
                }
                case FormKind::twisted_triple: {
                    int v = T.at(x) * T.at(y) * T.at(static_cast<i128>(x) - y);
                    term = v == 0 ? 0 : v * symbol_ab(y, x);
                    break;
                }
                case FormKind::root_number_family: {
                    term = (x == 0 || y == 0 || x == y) ? 0 : root_number(x, y);
                    break;
                }
            }
            total += term;
        }
    return total;
}

}  // namespace

std::vector<PropertyResult> suite_experiments(const VerifyOptions& opt) {
    std::vector<PropertyResult> rs;
    LiouvilleTable T = liouville_table(clamp_scale(opt.limit, 1000, 100'000));
    EngineOptions base;
    base.table = &T;
    base.threads = 1;

    {  // serial/parallel determinism and byte-identical reruns
        std::string bad;
        FormSpec triple;
        ConvexRegion S = ConvexRegion::box(Rat(1), Rat(64), Rat(1), Rat(64));
        LatticeCoset Z2;
        EngineOptions par = base;
        par.threads = std::max(2, opt.threads);
        EngineOptions par5 = base;
        par5.threads = 5;
        ReportRow a = run_chowla(triple, S, Z2, 64, base);
        ReportRow b = run_chowla(triple, S, Z2, 64, par);
        ReportRow c = run_chowla(triple, S, Z2, 64, par5);
        if (a.raw != b.raw || a.raw != c.raw || a.count != b.count || a.avg != b.avg)
            bad = "serial and parallel runs disagree";
        if (bad.empty()) {
            ExperimentConfig cfg;
            cfg.region.kind = RegionKind::pos_box;
            cfg.grid = {8, 16};
            // Reruns with identical options must be byte-identical (timing
            // excluded); runs with different worker counts must agree row by
            // row (the fingerprint legitimately records the thread count).
            ExperimentReport r1 = run_experiment(cfg, base);
            ExperimentReport r1b = run_experiment(cfg, base);
            ExperimentReport r2 = run_experiment(cfg, par);
            if (report_to_json(r1, false) != report_to_json(r1b, false))
                bad = "identical reruns are not byte-identical";
            else if (r1.rows.size() != r2.rows.size())
                bad = "serial and parallel reports have different row counts";
            else
                for (std::size_t i = 0; i < r1.rows.size(); ++i)
                    if (r1.rows[i].raw != r2.rows[i].raw ||
                        r1.rows[i].count != r2.rows[i].count ||
                        r1.rows[i].avg != r2.rows[i].avg) {
                        bad = "serial and parallel report rows disagree";
                        break;
                    }
        }
        push(rs, "experiments", "thread-determinism", bad,
             "1 vs " + std::to_string(std::max(2, opt.threads)) + " vs 5 workers");
    }

    {  // every family against a definition-based double loop
        std::string bad;
        Rng rng(opt.seed + 60);
        FormSpec triple;
        FormSpec triple_cop;
        triple_cop.coprime_filter = true;
        FormSpec quad;
        quad.kind = FormKind::quad_times_linear;
        FormSpec tw;
        tw.kind = FormKind::twisted_triple;
        FormSpec rn;
        rn.kind = FormKind::root_number_family;
        const FormSpec forms[] = {triple, triple_cop, quad, tw, rn};
        for (int t = 0; bad.empty() && t < 10; ++t) {
            CosetDef c = rand_coset_def(rng, 6);
            for (const FormSpec& f : forms) {
                // sym boxes exercise zero and negative factor values
                i64 N = rng.range(6, 12);
                ConvexRegion S = ConvexRegion::box(Rat(-N), Rat(N), Rat(-N), Rat(N));
                ReportRow row = run_chowla(f, S, to_coset(c), N, base);
                i64 want = brute_family_sum(f, T, -N, N, -N, N, c);
                if (row.raw != want) {
                    bad = f.name() + ": raw=" + std::to_string(row.raw) + " vs brute=" +
                          std::to_string(want) + " on [-" + std::to_string(N) + ", " +
                          std::to_string(N) + "]^2, coset " + to_coset(c).str();
                    break;
                }
                i128 cnt = 0;
                for (i64 y = -N; y <= N; ++y)
                    for (i64 x = -N; x <= N; ++x)
                        if (def_member(c, x, y)) ++cnt;
                if (bad.empty() && row.count != cnt) {
                    bad = f.name() + ": count mismatch on the same box";
                    break;
                }
                Rat idx(checked_i64(to_coset(c).index(), "verify"));
                if (bad.empty() && !(row.normalizer == S.area() / idx)) {
                    bad = f.name() + ": normalizer != area/index";
                    break;
                }
            }
        }
        push(rs, "experiments", "family-brute-force", bad, "5 families x 10 cosets");
    }

    {  // progression and interval sums vs direct loops
        std::string bad;
        Rng rng(opt.seed + 61);
        for (int t = 0; bad.empty() && t < 200; ++t) {
            i64 m = rng.range(1, 20);
            i64 a = rng.range(-40, 40);
            i64 x = rng.range(0, T.limit);
            i64 want = 0;
            i64 r = ((a % m) + m) % m;
            for (i64 n = r == 0 ? m : r; n <= x; n += m) want += T.at(n);
            if (run_progression(T, x, m, a) != want)
                bad = "progression sum wrong at x=" + std::to_string(x) + ", m=" +
                      std::to_string(m) + ", a=" + std::to_string(a);
            if (bad.empty()) {
                i64 h = rng.range(0, T.limit - x);
                i64 lhs = run_short_interval(T, x, h, m, a);
                i64 rhs = run_progression(T, x + h, m, a) - run_progression(T, x, m, a);
                if (lhs != rhs)
                    bad = "interval sum inconsistent at x=" + std::to_string(x) + ", h=" +
                          std::to_string(h) + ", m=" + std::to_string(m);
            }
        }
        if (bad.empty()) {
            bool threw = false;
            try {
                run_progression(T, T.limit + 1, 1, 0);
            } catch (const resource_error&) {
                threw = true;
            }
            if (!threw) bad = "progression beyond the table did not raise a resource error";
        }
        push(rs, "experiments", "progression-interval-direct", bad, "200 cases");
    }

    {  // the modulus-capped maximum measurement vs its definition
        std::string bad;
        i64 N = std::min<i64>(T.limit, 3000);
        i64 M = 15;
        BvResult lib = run_bv_capped(T, N, M);
        i64 want = 0;
        for (i64 m = 1; m <= M; ++m) {
            i64 best = 0;
            for (i64 aa = 0; aa < m; ++aa) {
                i64 run = 0, peak = 0;
                for (i64 n = aa == 0 ? m : aa; n <= N; n += m) {
                    run += T.at(n);
                    peak = std::max(peak, std::abs(run));
                }
                best = std::max(best, peak);
            }
            want += best;
        }
        if (lib.value != want)
            bad = "capped measurement " + std::to_string(lib.value) + " != definition " +
                  std::to_string(want);
        if (bad.empty()) {
            BvResult b = run_bv(T, N, 0);
            double ln = std::log(static_cast<double>(N));
            i64 wantM = static_cast<i64>(std::floor(std::sqrt(static_cast<double>(N)) /
                                                    std::pow(ln, 6)));
            if (b.modulus_cap != wantM || b.value != run_bv_capped(T, N, wantM).value)
                bad = "uncapped wrapper disagrees with its cap formula";
        }
        push(rs, "experiments", "bv-definition", bad,
             "N=" + std::to_string(N) + ", M <= " + std::to_string(M));
    }

    {  // serialization: byte round trip, csv shape, malformed input
        std::string bad;
        ExperimentConfig cfg;
        cfg.region.kind = RegionKind::pos_box;
        cfg.grid = {8, 16};
        ExperimentReport rep = run_experiment(cfg, base);
        std::string j1 = report_to_json(rep, false);
        std::string j2 = report_to_json(report_from_json(j1), false);
        if (j1 != j2) bad = "report JSON round trip is not byte-identical";
        if (bad.empty()) {
            std::string csv = report_to_csv(rep);
            i64 lines = std::count(csv.begin(), csv.end(), '\n');
            if (lines != 3) bad = "csv should have a header and one line per grid point";
        }
        if (bad.empty()) {
            bool threw = false;
            try {
                report_from_json("{\"rows\": 3");
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) bad = "malformed report text did not raise a domain error";
            std::string cj = config_to_json(cfg);
            if (bad.empty() && config_to_json(config_from_json(cj)) != cj)
                bad = "config round trip is not byte-identical";
        }
        push(rs, "experiments", "serialization-round-trip", bad, "grid {8, 16}");
    }

    return rs;
}

std::vector<PropertyResult> run_verify(const VerifyOptions& opt) {
    if (opt.limit < 1) throw std::domain_error("run_verify: limit must be at least 1");
    std::vector<PropertyResult> rs;
    for (auto* suite : {&suite_core_arith, &suite_symbols, &suite_lattice, &suite_region_scan,
                        &suite_quadfield, &suite_sieve, &suite_experiments}) {
        auto part = (*suite)(opt);
        rs.insert(rs.end(), part.begin(), part.end());
    }
    return rs;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.pass; });
}

std::string format_results(const std::vector<PropertyResult>& results) {
    std::string out;
    for (const PropertyResult& r : results) {
        out += r.module + "/" + r.property + ": ";
        out += r.pass ? "ok" : "FAIL";
        if (!r.detail.empty()) out += " (" + r.detail + ")";
        out += "\n";
    }
    return out;
}

}  // namespace parity

#include "parity/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parity/symbols.hpp"

namespace parity {

namespace {

i64 floor_mod(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}

// Row Hermite normal form of a full-rank 2-column integer module:
// Z*(a, 0) + Z*(b, c) with a, c > 0 and 0 <= b < a.  Throws domain_error when
// the rows do not span a rank-2 module.
struct HnfRows {
    i64 a, b, c;
};

HnfRows row_hnf(const std::vector<std::pair<i64, i64>>& rows) {
    i64 px = 0, py = 0;  // pivot row with the running gcd of second coords
    i64 a = 0;           // gcd of first coords of second-coord-free rows
    for (const auto& [x, y] : rows) {
        if (y == 0) {
            a = std::gcd(a, std::abs(x));
            continue;
        }
        if (py == 0) {
            px = x;
            py = y;
            continue;
        }
        ExtGcd e = ext_gcd(py, y);
        i128 killed = -static_cast<i128>(y / e.g) * px + static_cast<i128>(py / e.g) * x;
        i128 npx = static_cast<i128>(e.u) * px + static_cast<i128>(e.v) * x;
        a = std::gcd(a, checked_i64(killed < 0 ? -killed : killed, "row_hnf"));
        px = checked_i64(npx, "row_hnf");
        py = e.g;
    }
    if (py == 0 || a == 0) throw std::domain_error("row_hnf: rows do not have full rank");
    if (py < 0) {
        py = -py;
        px = -px;
    }
    return {a, floor_mod(px, a), py};
}

QuadInt omega(const QuadField& K) { return {K, 0, 1}; }

}  // namespace

IdealStd::IdealStd(QuadField K, i64 a, i64 b, i64 c) : field_(K), a_(a), b_(b), c_(c) {
    if (a_ <= 0 || c_ <= 0) throw std::domain_error("IdealStd: diagonal entries must be positive");
    b_ = floor_mod(b_, a_);
    if (a_ % c_ != 0 || b_ % c_ != 0)
        throw std::domain_error("IdealStd: c must divide a and b");
    // omega-stability, checked constructively on both HNF generators.
    if (!contains(QuadInt(field_, 0, a_)) || !contains(QuadInt(field_, b_, c_) * omega(field_)))
        throw std::domain_error("IdealStd: module is not an ideal (not omega-stable)");
}

bool IdealStd::contains(const QuadInt& z) const {
    if (z.field != field_) throw std::domain_error("IdealStd::contains: mixed fields");
    if (z.y % c_ != 0) return false;
    i128 rest = static_cast<i128>(z.x) - static_cast<i128>(z.y / c_) * b_;
    return rest % a_ == 0;
}

bool IdealStd::divides(const IdealStd& J) const {
    if (J.field_ != field_) throw std::domain_error("IdealStd::divides: mixed fields");
    return contains(QuadInt(field_, J.a_, 0)) && contains(QuadInt(field_, J.b_, J.c_));
}

IdealStd IdealStd::from_generators(const QuadField& K, const std::vector<QuadInt>& gens) {
    std::vector<std::pair<i64, i64>> rows;
    for (const QuadInt& g : gens) {
        if (g.field != K) throw std::domain_error("IdealStd::from_generators: mixed fields");
        if (g.is_zero()) continue;
        QuadInt wg = g * omega(K);
        rows.push_back({g.x, g.y});
        rows.push_back({wg.x, wg.y});
    }
    if (rows.empty()) throw std::domain_error("IdealStd::from_generators: zero ideal");
    HnfRows h = row_hnf(rows);
    return IdealStd(K, h.a, h.b, h.c);
}

IdealStd IdealStd::conjugated() const {
    return from_generators(field_,
                           {QuadInt(field_, a_, 0), QuadInt(field_, b_, c_).conjugate()});
}

std::string IdealStd::str() const {
    return "<" + std::to_string(a_) + ", " + QuadInt(field_, b_, c_).str() + ">";
}

IdealStd multiply(const IdealStd& I, const IdealStd& J) {
    if (I.field() != J.field()) throw std::domain_error("multiply: mixed fields");
    const QuadField& K = I.field();
    QuadInt g1(K, I.a(), 0), g2(K, I.b(), I.c());
    QuadInt h1(K, J.a(), 0), h2(K, J.b(), J.c());
    return IdealStd::from_generators(K, {g1 * h1, g1 * h2, g2 * h1, g2 * h2});
}

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    auto pw = [&](u128 b, u128 e) { return static_cast<u64>(powmod_u128(b, e, p)); };
    if (pw(a, (p - 1) / 2) != 1) return std::nullopt;
    if (p % 4 == 3) return pw(a, (p + 1) / 4);
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    u64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (pw(z, (p - 1) / 2) != p - 1) ++z;  // any quadratic non-residue
    u64 m = s;
    u64 cc = pw(z, q);
    u64 t = pw(a, q);
    u64 r = pw(a, (q + 1) / 2);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = static_cast<u64>(mulmod_u128(t2, t2, p));
            ++i;
        }
        u64 b = cc;
        for (u64 j = 0; j + i + 1 < m; ++j) b = static_cast<u64>(mulmod_u128(b, b, p));
        m = i;
        cc = static_cast<u64>(mulmod_u128(b, b, p));
        t = static_cast<u64>(mulmod_u128(t, cc, p));
        r = static_cast<u64>(mulmod_u128(r, b, p));
    }
    return r;
}

int kronecker_prime(i64 a, i64 p) {
    if (p == 2) {
        if (a % 2 == 0) return 0;
        i64 r = floor_mod(a, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return jacobi(a, p);
}

Splitting factor_prime(const QuadField& K, i64 p) {
    if (p < 2 || !default_factorizer().is_prime(static_cast<u128>(p)))
        throw std::domain_error("factor_prime: p is not prime");
    int k = kronecker_prime(K.disc(), p);
    if (k == -1) {
        return {SplitKind::inert, {{IdealStd(K, p, 0, p), 2}}};
    }
    if (k == 0) {
        i64 b;
        if (p == 2) {
            // disc = 4d here; the residue generator depends on d mod 4.
            i64 dm = floor_mod(K.d(), 4);
            b = (dm == 3) ? 1 : 0;  // norm(1 + w) = 1 - d even iff d odd
        } else if (K.half_basis()) {
            b = (p - 1) / 2;  // double root of t^2 + t - (d-1)/4 modulo p | d
        } else {
            b = 0;  // t^2 = d = 0 (mod p)
        }
        return {SplitKind::ramified, {{IdealStd(K, p, b, 1), 1}}};
    }
    // Split case: find the two roots b of norm(b + omega) = 0 (mod p).
    i64 b1, b2;
    if (p == 2) {
        // Only for d = 1 (mod 8): t^2 + t - (d-1)/4 = t(t+1) (mod 2).
        b1 = 0;
        b2 = 1;
    } else {
        u64 s = *sqrt_mod_prime(static_cast<u64>(floor_mod(K.d(), p)), static_cast<u64>(p));
        if (K.half_basis()) {
            // roots of t^2 + t - (d-1)/4: t = (-1 +- s) / 2 (mod p)
            u64 inv2 = (static_cast<u64>(p) + 1) / 2;
            b1 = static_cast<i64>(mulmod_u128(floor_mod(-1 + static_cast<i64>(s), p), inv2, p));
            b2 = static_cast<i64>(mulmod_u128(floor_mod(-1 - static_cast<i64>(s), p), inv2, p));
        } else {
            b1 = static_cast<i64>(s);
            b2 = p - static_cast<i64>(s);
        }
    }
    if (b1 > b2) std::swap(b1, b2);
    return {SplitKind::split, {{IdealStd(K, p, b1, 1), 1}, {IdealStd(K, p, b2, 1), 1}}};
}

namespace {

// I / P for a prime ideal P of norm p (split or ramified): multiplying by the
// conjugate turns the quotient into (p) * (I / P), so every HNF entry of the
// product is divisible by p.
IdealStd divide_by_degree1_prime(const IdealStd& I, const IdealStd& P, i64 p) {
    IdealStd prod = multiply(I, P.conjugated());
    return IdealStd(I.field(), prod.a() / p, (prod.b() / p) % (prod.a() / p), prod.c() / p);
}

}  // namespace

std::vector<IdealFactor> factor_ideal(const IdealStd& I, const Factorizer& fac) {
    std::vector<IdealFactor> out;
    i128 n = I.norm();
    if (n == 1) return out;
    FactoredInteger fn = fac.factor(n);
    IdealStd cur = I;
    for (const PrimePower& pp : fn.factors) {
        i64 p = checked_i64(pp.prime, "factor_ideal");
        Splitting sp = factor_prime(I.field(), p);
        if (sp.kind == SplitKind::inert) {
            int e = 0;
            while (cur.a() % p == 0 && cur.b() % p == 0 && cur.c() % p == 0) {
                cur = IdealStd(I.field(), cur.a() / p, cur.b() / p, cur.c() / p);
                ++e;
            }
            if (e > 0) out.push_back({sp.primes[0].ideal, 2, e});
            continue;
        }
        for (const PrimeIdeal& pr : sp.primes) {
            int e = 0;
            while (pr.ideal.divides(cur)) {
                cur = divide_by_degree1_prime(cur, pr.ideal, p);
                ++e;
            }
            if (e > 0) out.push_back({pr.ideal, pr.inertia, e});
        }
    }
    if (!cur.is_unit())
        throw std::logic_error("factor_ideal: residual non-unit ideal after extracting all primes");
    return out;
}

int lambda_ext_exponent(const IdealStd& I, const Factorizer& fac) {
    i64 t = 0;
    for (const IdealFactor& f : factor_ideal(I, fac)) t += static_cast<i64>(f.inertia) * f.exponent;
    return static_cast<int>(t % 4);
}

int lambda_K(const IdealStd& I, const Factorizer& fac) {
    i64 t = 0;
    for (const IdealFactor& f : factor_ideal(I, fac)) t += f.exponent;
    return t % 2 == 0 ? 1 : -1;
}

std::optional<IdealProgression> ideal_row_progression(const IdealStd& I, i64 y0) {
    if (!I.is_primitive())
        throw std::domain_error("ideal_row_progression: ideal has a rational divisor > 1");
    // x + y0*omega in I  <=>  x = y0 * b (mod a); always solvable since c = 1.
    i64 m = I.a();
    i64 r = checked_i64((static_cast<i128>(y0) * I.b()) % m, "ideal_row_progression");
    return IdealProgression{m, floor_mod(r, m)};
}

i128 count_bounded_norm(const QuadField& K, i64 N, i128 A) {
    if (N < 0 || A < 0) throw std::domain_error("count_bounded_norm: N, A must be nonnegative");
    i128 count = 0;
    for (i64 x = -N; x <= N; ++x)
        for (i64 y = -N; y <= N; ++y) {
            i128 nr = QuadInt(K, x, y).norm();
            if (abs128(nr) <= A) ++count;
        }
    return count;
}

FormDecomposition form_to_norm(i64 a, i64 b, i64 c) {
    if (a == 0) throw std::domain_error("form_to_norm: leading coefficient must be nonzero");
    i64 g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
    if (g != 1) throw std::domain_error("form_to_norm: form is imprimitive");
    i128 D = static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c;
    if (D == 0) throw std::domain_error("form_to_norm: square discriminant (reducible form)");
    FactoredInteger fD = default_factorizer().factor(D);
    i64 d0 = fD.sign;
    i64 m = 1;
    for (const PrimePower& pp : fD.factors) {
        i64 p = checked_i64(pp.prime, "form_to_norm");
        for (int i = 0; i < pp.exponent / 2; ++i) m = checked_i64(static_cast<i128>(m) * p, "form_to_norm");
        if (pp.exponent % 2 == 1) d0 = checked_i64(static_cast<i128>(d0) * p, "form_to_norm");
    }
    if (d0 == 1) throw std::domain_error("form_to_norm: square discriminant (reducible form)");
    QuadField K(d0);
    QuadInt alpha1(K, a, 0);
    QuadInt alpha2 = K.half_basis() ? QuadInt(K, (b - m) / 2, m) : QuadInt(K, b / 2, m / 2);
    HnfRows h = row_hnf({{alpha1.x, alpha1.y}, {alpha2.x, alpha2.y}});
    i64 index = checked_i64(static_cast<i128>(h.a) * h.c, "form_to_norm index");
    // The defining identity at three probe points guards the case split.
    for (auto [px, py] : {std::pair<i64, i64>{1, 0}, {0, 1}, {1, 1}}) {
        i128 q = static_cast<i128>(a) * px * px + static_cast<i128>(b) * px * py +
                 static_cast<i128>(c) * py * py;
        if ((alpha1.scaled(px) + alpha2.scaled(py)).norm() != static_cast<i128>(a) * q)
            throw std::logic_error("form_to_norm: norm identity violated");
    }
    return {K, alpha1, alpha2, index};
}

}  // namespace parity

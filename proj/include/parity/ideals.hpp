#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parity/factor.hpp"
#include "parity/quadfield.hpp"

namespace parity {

// A nonzero ideal of the ring of integers of a quadratic field, stored in
// canonical two-row Hermite normal form over the integral basis {1, omega}:
//
//   I = Z * a  +  Z * (b + c*omega),   c | a,  c | b,  0 <= b < a,  a, c > 0.
//
// The norm is the determinant a*c.  Construction checks closure under
// multiplication by omega, so every IdealStd really is an ideal, and equal
// ideals have equal fields.
class IdealStd {
public:
    // Validated canonical form (throws domain_error if (a, b, c) violates the
    // shape constraints or the module is not omega-stable).  b is reduced
    // modulo a first.
    IdealStd(QuadField K, i64 a, i64 b, i64 c);

    // The ideal generated by the given elements (as an O_K-module: each
    // generator g contributes g and omega*g).  All zero => domain_error.
    static IdealStd from_generators(const QuadField& K, const std::vector<QuadInt>& gens);
    static IdealStd principal(const QuadInt& z) { return from_generators(z.field, {z}); }
    static IdealStd unit_ideal(const QuadField& K) { return IdealStd(K, 1, 0, 1); }

    const QuadField& field() const { return field_; }
    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }
    i128 norm() const { return static_cast<i128>(a_) * c_; }

    bool is_unit() const { return a_ == 1 && c_ == 1; }
    // Divisible by no rational integer > 1 (equivalently c == 1).
    bool is_primitive() const { return c_ == 1; }

    bool contains(const QuadInt& z) const;
    // Ideal divisibility: this | J, i.e. J is a subset of this.
    bool divides(const IdealStd& J) const;

    IdealStd conjugated() const;

    bool operator==(const IdealStd& o) const {
        return field_ == o.field_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    std::string str() const;

private:
    QuadField field_;
    i64 a_, b_, c_;
};

IdealStd multiply(const IdealStd& I, const IdealStd& J);

// How a rational prime p sits in the field: two conjugate degree-1 primes,
// one inert degree-2 prime, or a ramified square.
enum class SplitKind { split, inert, ramified };

struct PrimeIdeal {
    IdealStd ideal;
    int inertia;  // residue degree f
};

struct Splitting {
    SplitKind kind;
    std::vector<PrimeIdeal> primes;  // two entries when split, one otherwise
};

// Decomposes (p) for a rational prime p (domain_error if p is not prime).
// The returned ideals, taken with multiplicity (squared when ramified),
// multiply back to (p).
Splitting factor_prime(const QuadField& K, i64 p);

struct IdealFactor {
    IdealStd prime;
    int inertia;
    int exponent;
};

// Prime-ideal factorization of I, found by factoring norm(I) and extracting
// valuations; ordered by (rational prime, HNF entries).  The unit ideal
// yields an empty list.  Throws resource_error if the norm cannot be
// factored by the integer backend.
std::vector<IdealFactor> factor_ideal(const IdealStd& I, const Factorizer& fac = default_factorizer());

// The extended Liouville exponent: sum of exponent * inertia over the prime
// factorization, reduced mod 4 (the value is i^exponent for the fixed
// primitive fourth root i).  Restricts to the classical parity on ideals
// generated by rational integers.
int lambda_ext_exponent(const IdealStd& I, const Factorizer& fac = default_factorizer());

// The naive generalization: parity of the number of prime-ideal factors
// counted with multiplicity, as a sign.
int lambda_K(const IdealStd& I, const Factorizer& fac = default_factorizer());

// For a primitive ideal I and fixed second coordinate y0, the set
// {x : x + y0*omega in I} is an arithmetic progression of modulus norm(I),
// or empty.  domain_error if I is imprimitive.
struct IdealProgression {
    i64 modulus;
    i64 residue;
};
std::optional<IdealProgression> ideal_row_progression(const IdealStd& I, i64 y0);

// Exact #{z in O_K : coordinates of z in [-N, N]^2, |norm(z)| <= A} by direct
// scan of the coordinate box.
i128 count_bounded_norm(const QuadField& K, i64 N, i128 A);

// Exact decomposition of a primitive irreducible quadratic form
// Q(x, y) = a x^2 + b x y + c y^2 as a scaled field norm:
//   a * Q(x, y) = norm(x * alpha1 + y * alpha2)
// over K = Q(sqrt(b^2 - 4ac)), with alpha1 = a and
// alpha2 = (b + sqrt(b^2 - 4ac))/2.  index is the exact module index
// [O_K : Z alpha1 + Z alpha2], computed as the HNF determinant of the
// coordinate rows.
struct FormDecomposition {
    QuadField field;
    QuadInt alpha1;
    QuadInt alpha2;
    i64 index;
};
FormDecomposition form_to_norm(i64 a, i64 b, i64 c);

// Square root of a modulo an odd prime p (Tonelli-Shanks), if one exists.
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);

// Kronecker symbol (a / p) for prime p, including p = 2.
int kronecker_prime(i64 a, i64 p);

}  // namespace parity

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parity/int128.hpp"

namespace parity {

struct Vec2 {
    i64 x = 0, y = 0;
    bool operator==(const Vec2&) const = default;
};

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    i128 det() const { return static_cast<i128>(a) * d - static_cast<i128>(b) * c; }
    Vec2 apply(Vec2 v) const {
        return {checked_i64(static_cast<i128>(a) * v.x + static_cast<i128>(b) * v.y, "Mat2"),
                checked_i64(static_cast<i128>(c) * v.x + static_cast<i128>(d) * v.y, "Mat2")};
    }
    bool operator==(const Mat2&) const = default;
};

// A coset of a finite-index subgroup of Z^2, stored canonically: the basis is
// the column Hermite normal form [[d1, 0], [s, d2]] (basis vectors (d1, s)
// and (0, d2), with d1, d2 > 0 and 0 <= s < d2) and the offset is reduced to
// 0 <= o1 < d1, 0 <= o2 < d2.  Two cosets are equal as point sets iff their
// five numbers are equal.
class LatticeCoset {
public:
    // The full lattice Z^2.
    LatticeCoset() = default;

    // Coset offset + span{columns of basis}; basis must be nonsingular.
    LatticeCoset(Mat2 basis_columns, Vec2 offset);

    // Coset offset + Z-span of the given vectors; must have full rank.
    static LatticeCoset from_generators(const std::vector<Vec2>& gens, Vec2 offset);

    // Congruence helpers: {(x, y) : x = r mod m} and {(x, y) : y = r mod m}.
    static LatticeCoset x_congruence(i64 m, i64 r);
    static LatticeCoset y_congruence(i64 m, i64 r);

    i64 d1() const { return d1_; }
    i64 d2() const { return d2_; }
    i64 shear() const { return s_; }
    Vec2 offset() const { return {o1_, o2_}; }
    i128 index() const { return static_cast<i128>(d1_) * d2_; }

    bool contains(Vec2 v) const;

    // The x-values of this coset's points on the horizontal line at height y:
    // an arithmetic progression x = residue (mod modulus), or nothing.
    struct RowProgression {
        i64 modulus = 1;
        i64 residue = 0;
    };
    std::optional<RowProgression> row_progression(i64 y) const;

    bool operator==(const LatticeCoset&) const = default;

    std::string str() const;

private:
    i64 d1_ = 1, s_ = 0, d2_ = 1;  // basis columns (d1, s), (0, d2)
    i64 o1_ = 0, o2_ = 0;

    void canonicalize_offset(i64 x, i64 y);
};

// Exact intersection of two cosets; empty when the congruences conflict.
// When nonempty, lcm(idx1, idx2) divides the index and the index divides
// idx1 * idx2.
std::optional<LatticeCoset> intersect(const LatticeCoset& L1, const LatticeCoset& L2);

// The image M(L) (divided by den when den > 1, for rational maps known to
// land in Z^2).  Throws domain_error if M is singular or any basis/offset
// image fails to be integral.  Index multiplies by |det M| / den^2.
LatticeCoset affine_image(const Mat2& M, const LatticeCoset& L, i64 den = 1);

// {(a, b) : (a, b*c1) in L and (a, b*c2) in L}.  When nonempty, the index
// divides idx(L)^2.  c1, c2 must be nonzero.
std::optional<LatticeCoset> pullback_pair(const LatticeCoset& L, i64 c1, i64 c2);

}  // namespace parity

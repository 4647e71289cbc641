#pragma once

#include <string>

#include "parity/int128.hpp"
#include "parity/lattice.hpp"

namespace parity {

// The quadratic field Q(sqrt(d)) for a squarefree integer d != 0, 1, with its
// ring of integers Z[omega], where omega = (1 + sqrt(d))/2 when d = 1 (mod 4)
// and omega = sqrt(d) otherwise.  disc() is the field discriminant: d itself
// in the first case, 4d in the second.
class QuadField {
public:
    // Validates that d is squarefree and != 0, 1 (throws domain_error).
    explicit QuadField(i64 d);

    i64 d() const { return d_; }
    i64 disc() const { return disc_; }
    // True when d = 1 (mod 4), i.e. omega = (1 + sqrt(d))/2.
    bool half_basis() const { return half_; }

    bool operator==(const QuadField& o) const { return d_ == o.d_; }
    bool operator!=(const QuadField& o) const { return d_ != o.d_; }

    std::string str() const;

private:
    i64 d_;
    i64 disc_;
    bool half_;
};

// An algebraic integer x + y*omega of a quadratic field, stored by its exact
// integer coordinates in the integral basis {1, omega}.  All arithmetic is
// exact (128-bit intermediates, range-checked results).
struct QuadInt {
    QuadField field;
    i64 x = 0;
    i64 y = 0;

    QuadInt(QuadField K, i64 x0, i64 y0) : field(K), x(x0), y(y0) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const QuadInt& o) const { return field == o.field && x == o.x && y == o.y; }

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator-() const { return {field, -x, -y}; }
    QuadInt operator*(const QuadInt& o) const;
    QuadInt scaled(i64 k) const;

    // Galois conjugate: sqrt(d) -> -sqrt(d).
    QuadInt conjugate() const;

    // Field norm z * conj(z), a rational integer (exact, 128-bit).
    i128 norm() const;
    // Trace z + conj(z).
    i128 trace() const;

    std::string str() const;
};

// The coordinate identification of the ring of integers with Z^2 (the map is
// the identity on {1, omega} coordinates in both basis cases).  Kept as a
// named operation because lattice-side code works with its image.
Vec2 embed_j(const QuadInt& z);
QuadInt unembed_j(const QuadField& K, Vec2 v);

}  // namespace parity

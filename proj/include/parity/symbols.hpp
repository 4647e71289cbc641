#pragma once

#include "parity/int128.hpp"

namespace parity {

// Jacobi symbol (a/n) for odd n >= 1, computed by the quadratic-reciprocity
// ladder.  Returns 0 when gcd(a, n) > 1.
int jacobi(i128 a, i128 n);

// Two-argument symbol (a|b) = prod over odd primes p | b of (a/p)^{v_p(b)}.
// Equivalently the Jacobi symbol of a against the odd part of |b|: powers of
// a fixed (a/p) square to 1, so only the parity of v_p(b) survives, and
// (a/p) = 0 whenever p | a zeroes the product.  b must be nonzero.
// Completely multiplicative in both arguments.
int symbol_ab(i128 a, i128 b);

// Root number of the curve y^2 = x (x + a)(x + b): a sign in {+1, -1}
// assembled from three two-argument symbols against odd squarefree radicals
// and one Mobius factor,
//   W = - (a | r(b)) (b | r(a)) (-a | r(b - a)) mu(rad(a b (a - b))),
// where r(x) is the radical of the odd part of x.  Requires gcd(a, b) = 1
// and a, b, a - b all nonzero.
int root_number(i64 a, i64 b);

}  // namespace parity

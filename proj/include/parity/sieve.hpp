#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "parity/ideals.hpp"
#include "parity/rational.hpp"
#include "parity/region.hpp"
#include "parity/scan.hpp"

namespace parity {

// Upper-bound sieve weights lambda_d^+ supported on squarefree products of
// the sieving primes, built by the Rosser combinatorial rule (see
// rosser_upper).  window_lo/cut are the prime-window endpoints [M1, M2);
// cut is also the support bound y: every supported d satisfies d < cut.
struct SieveWeights {
    std::vector<i64> sieving_primes;  // ascending, all in [window_lo, cut)
    i64 window_lo = 2;                // M1
    i64 cut = 2;                      // y = M2
    std::map<i64, Rat> weights;       // d -> lambda_d^+ (includes 1 -> 1)
};

// Rosser upper-bound weights: lambda_d^+ = mu(d) for d = p1...pr with
// p1 > ... > pr all in P and p1...p_{m-1} * p_m^3 < y for every odd m <= r;
// all other d get 0.  Requires every p in P prime and < y (domain_error).
// window_lo defaults to min(P) (or y when P is empty).
SieveWeights rosser_upper(const std::vector<i64>& P, i64 y,
                          std::optional<i64> window_lo = std::nullopt);

// sum_{d | n} lambda_d^+ (the nonnegative upper-sieve divisor sum).
// Divisibility is taken on |n|; every supported d divides 0.
Rat lambda_divisor_sum(const SieveWeights& W, i128 n);

// The anti-sieve transform of the weights: sigma_1 = 0 and
// sigma_d = -lambda_d^+ elsewhere, so that 1 - sum_{d|n} sigma_d equals
// sum_{d|n} lambda_d^+ for every n.
struct SigmaWeights {
    std::vector<i64> sieving_primes;
    i64 window_lo = 2;  // M1
    i64 cut = 2;        // M2
    std::map<i64, Rat> sigma;  // d -> sigma_d; d = 1 excluded (sigma_1 = 0)
};
SigmaWeights sigma_from_lambda(const SieveWeights& W);

// defect(n) = 1 - sum_{d | n} sigma_d; nonnegative for n >= 1 by the
// upper-sieve positivity.
Rat defect(const SigmaWeights& W, i128 n);

// Exact sum of |defect(n)| over N1 <= n < N2 with n = a (mod m).
// Requires 0 < m < window_lo (the anti-sieve lemma's precondition) and
// N1 <= N2.  per_n, when given, receives every (n, defect(n)) visited.
struct DefectSumResult {
    Rat sum;
    i64 terms = 0;
};
DefectSumResult defect_sum(const SigmaWeights& W, i64 a, i64 m, i64 N1, i64 N2,
                           const std::function<void(i64, const Rat&)>& per_n = nullptr);

// The split form of a weighted double sum over lattice points of a region:
//   main = sum over (x, y) in S cap L of
//            sum_{a | x, a in supp sigma} sigma_a g(a) g(x / a) f(x, y)
// (equivalently the triple sum over (a, b, c) with a b = x, c = y), together
// with defect_bound = sum over (x, y) in S cap L of |defect(x)|, so that
//   | sum_{(x,y)} g(x) f(x,y)  -  main |  <=  defect_bound
// whenever |g| <= 1 and |f| <= 1.  Requires idx(L) < window_lo.
struct SplitTripleResult {
    std::complex<double> main;
    Rat defect_bound;
};
SplitTripleResult split_triple_sum(const SigmaWeights& W,
                                   const std::function<std::complex<double>(i64)>& g,
                                   const std::function<std::complex<double>(i64, i64)>& f,
                                   const ConvexRegion& S, const LatticeCoset& L);

// Quadratic-field analogue of the sigma weights: the same Rosser rule keyed
// by ideal norms (ties in norm broken by HNF-lexicographic (a, b, c) order),
// supported on squarefree products of the sieving prime ideals.
struct IdealSigmaWeights {
    QuadField field;
    std::vector<IdealStd> sieving_primes;         // sorted by (norm, a, b, c)
    i64 window_lo;
    i64 cut;
    std::vector<std::pair<IdealStd, Rat>> sigma;  // sorted; unit ideal excluded
};
IdealSigmaWeights ideal_sigma(const QuadField& K, const std::vector<IdealStd>& P, i64 y,
                              std::optional<i64> window_lo = std::nullopt);

// defect(z) = 1 - sum over supported ideals containing z of sigma; z != 0.
Rat ideal_defect(const IdealSigmaWeights& W, const QuadInt& z);

}  // namespace parity

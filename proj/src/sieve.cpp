#include "parity/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "parity/factor.hpp"

namespace parity {

namespace {

// Depth-first walk of the Rosser support: primes are consumed in descending
// order, a prime at odd position m must satisfy prefix * p^3 < y, and even
// positions are unconditional (every supported product then stays below y).
void rosser_dfs(const std::vector<i64>& desc, std::size_t start, i128 prefix, int count, i64 y,
                std::map<i64, Rat>& out) {
    for (std::size_t i = start; i < desc.size(); ++i) {
        i64 p = desc[i];
        if ((count + 1) % 2 == 1) {
            i128 bound = prefix * p * p * p;
            if (bound >= y) continue;  // smaller primes may still pass
        }
        i128 d = prefix * p;
        if (d >= y) throw std::logic_error("rosser_upper: support escaped the cut");
        out[checked_i64(d, "rosser_upper")] = Rat((count + 1) % 2 == 1 ? -1 : 1);
        rosser_dfs(desc, i + 1, d, count + 1, y, out);
    }
}

bool all_integer_signs(const std::map<i64, Rat>& m) {
    for (const auto& [d, v] : m)
        if (v.den != 1) return false;
    return true;
}

}  // namespace

SieveWeights rosser_upper(const std::vector<i64>& P, i64 y, std::optional<i64> window_lo) {
    if (y < 2) throw std::domain_error("rosser_upper: cut must be at least 2");
    SieveWeights W;
    W.sieving_primes = P;
    std::sort(W.sieving_primes.begin(), W.sieving_primes.end());
    W.sieving_primes.erase(std::unique(W.sieving_primes.begin(), W.sieving_primes.end()),
                           W.sieving_primes.end());
    for (i64 p : W.sieving_primes) {
        if (p >= y) throw std::domain_error("rosser_upper: sieving prime at or beyond the cut");
        if (p < 2 || !default_factorizer().is_prime(static_cast<u128>(p)))
            throw std::domain_error("rosser_upper: sieving set contains a non-prime");
    }
    W.cut = y;
    W.window_lo = window_lo.value_or(W.sieving_primes.empty() ? y : W.sieving_primes.front());
    if (W.window_lo < 1 || (!W.sieving_primes.empty() && W.window_lo > W.sieving_primes.front()))
        throw std::domain_error("rosser_upper: window does not contain the sieving set");
    W.weights[1] = Rat(1);
    std::vector<i64> desc(W.sieving_primes.rbegin(), W.sieving_primes.rend());
    rosser_dfs(desc, 0, 1, 0, y, W.weights);
    return W;
}

Rat lambda_divisor_sum(const SieveWeights& W, i128 n) {
    i128 a = abs128(n);
    Rat s(0);
    for (const auto& [d, v] : W.weights)
        if (a % d == 0) s = s + v;
    return s;
}

SigmaWeights sigma_from_lambda(const SieveWeights& W) {
    SigmaWeights S;
    S.sieving_primes = W.sieving_primes;
    S.window_lo = W.window_lo;
    S.cut = W.cut;
    for (const auto& [d, v] : W.weights)
        if (d != 1) S.sigma[d] = -v;
    return S;
}

Rat defect(const SigmaWeights& W, i128 n) {
    i128 a = abs128(n);
    Rat s(1);
    for (const auto& [d, v] : W.sigma)
        if (a % d == 0) s = s - v;
    return s;
}

DefectSumResult defect_sum(const SigmaWeights& W, i64 a, i64 m, i64 N1, i64 N2,
                           const std::function<void(i64, const Rat&)>& per_n) {
    if (m <= 0 || m >= W.window_lo)
        throw std::domain_error("defect_sum: modulus must satisfy 0 < m < M1");
    if (N2 < N1) throw std::domain_error("defect_sum: empty-range bounds out of order");
    // First n >= N1 with n = a (mod m).
    i64 shift = ((a - N1) % m + m) % m;
    i64 n0 = N1 + shift;

    DefectSumResult res{Rat(0), 0};
    if (all_integer_signs(W.sigma) && !per_n) {
        // Integer fast path: every sigma_d is +-1, so defects are integers.
        std::vector<std::pair<i64, i64>> sg;
        sg.reserve(W.sigma.size());
        for (const auto& [d, v] : W.sigma) sg.push_back({d, v.num});
        i128 total = 0;
        for (i64 n = n0; n < N2; n += m) {
            i64 def = 1;
            i64 an = n < 0 ? -n : n;
            for (const auto& [d, s] : sg)
                if (an % d == 0) def -= s;
            total += def < 0 ? -def : def;
            ++res.terms;
        }
        res.sum = Rat(checked_i64(total, "defect_sum"));
        return res;
    }
    for (i64 n = n0; n < N2; n += m) {
        Rat def = defect(W, n);
        if (per_n) per_n(n, def);
        res.sum = res.sum + def.abs();
        ++res.terms;
    }
    return res;
}

SplitTripleResult split_triple_sum(const SigmaWeights& W,
                                   const std::function<std::complex<double>(i64)>& g,
                                   const std::function<std::complex<double>(i64, i64)>& f,
                                   const ConvexRegion& S, const LatticeCoset& L) {
    if (L.index() >= W.window_lo)
        throw std::domain_error("split_triple_sum: lattice index must be below M1");
    SplitTripleResult res{{0.0, 0.0}, Rat(0)};
    for_each_row(S, L, [&](const LatticeRow& row) {
        for (i64 k = 0; k < row.count; ++k) {
            i64 x = row.x_first + k * row.x_step;
            i64 ax = x < 0 ? -x : x;
            std::complex<double> term(0.0, 0.0);
            Rat def(1);
            for (const auto& [d, v] : W.sigma) {
                if (ax % d == 0) {
                    term += v.to_double() * g(d) * g(x / d) * f(x, row.y);
                    def = def - v;
                }
            }
            res.main += term;
            res.defect_bound = res.defect_bound + def.abs();
        }
    });
    return res;
}

IdealSigmaWeights ideal_sigma(const QuadField& K, const std::vector<IdealStd>& P, i64 y,
                              std::optional<i64> window_lo) {
    if (y < 2) throw std::domain_error("ideal_sigma: cut must be at least 2");
    std::vector<IdealStd> primes = P;
    auto key = [](const IdealStd& I) {
        return std::tuple<i128, i64, i64, i64>(I.norm(), I.a(), I.b(), I.c());
    };
    std::sort(primes.begin(), primes.end(),
              [&](const IdealStd& A, const IdealStd& B) { return key(A) < key(B); });
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    i64 min_norm = y;
    for (const IdealStd& I : primes) {
        if (I.field() != K) throw std::domain_error("ideal_sigma: mixed fields");
        if (I.norm() >= y) throw std::domain_error("ideal_sigma: prime norm at or beyond the cut");
        min_norm = std::min(min_norm, checked_i64(I.norm(), "ideal_sigma"));
    }
    IdealSigmaWeights W{K, primes, window_lo.value_or(min_norm), y, {}};
    if (W.window_lo < 1 || W.window_lo > min_norm)
        throw std::domain_error("ideal_sigma: window does not contain the sieving set");

    // Same Rosser walk, descending by (norm, HNF) order; the sign bookkeeping
    // mirrors the rational case with d replaced by the ideal norm.
    struct Frame {
        std::size_t start;
        IdealStd prod;
        i128 norm;
        int count;
    };
    std::vector<std::pair<IdealStd, Rat>> out;
    std::vector<IdealStd> desc(primes.rbegin(), primes.rend());
    std::function<void(std::size_t, const IdealStd&, i128, int)> dfs =
        [&](std::size_t start, const IdealStd& prod, i128 norm, int count) {
            for (std::size_t i = start; i < desc.size(); ++i) {
                i128 np = desc[i].norm();
                if ((count + 1) % 2 == 1 && norm * np * np * np >= y) continue;
                i128 dn = norm * np;
                if (dn >= y) throw std::logic_error("ideal_sigma: support escaped the cut");
                IdealStd next = multiply(prod, desc[i]);
                out.push_back({next, Rat((count + 1) % 2 == 1 ? 1 : -1)});  // sigma = -mu
                dfs(i + 1, next, dn, count + 1);
            }
        };
    dfs(0, IdealStd::unit_ideal(K), 1, 0);
    std::sort(out.begin(), out.end(),
              [&](const auto& A, const auto& B) { return key(A.first) < key(B.first); });
    W.sigma = std::move(out);
    return W;
}

Rat ideal_defect(const IdealSigmaWeights& W, const QuadInt& z) {
    if (z.is_zero()) throw std::domain_error("ideal_defect: zero element");
    Rat s(1);
    for (const auto& [I, v] : W.sigma)
        if (I.contains(z)) s = s - v;
    return s;
}

}  // namespace parity

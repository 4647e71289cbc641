#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parity/factor.hpp"
#include "parity/lattice.hpp"
#include "parity/rational.hpp"
#include "parity/region.hpp"

namespace parity {

// The families of integer forms whose parity sums the harness measures.
enum class FormKind {
    triple_linear,       // product of three linear forms, rows of a 3x2 matrix
    quad_times_linear,   // (a1 x^2 + a2 xy + a3 y^2) * (a4 x + a5 y)
    twisted_triple,      // x * y * (x - y) twisted by the symbol (y | x)
    root_number_family,  // root numbers W of y^2 = x (x + a)(x + b)
};

struct FormSpec {
    FormKind kind = FormKind::triple_linear;
    // triple_linear coefficient rows.
    std::array<std::array<i64, 2>, 3> linear{{{1, 0}, {0, 1}, {1, 1}}};
    // quad_times_linear coefficients a1..a5.
    std::array<i64, 5> quad{{1, 0, 1, 1, 2}};
    // Restrict sums to gcd(x, y) = 1.  Optional for the first two kinds,
    // forced on for twisted_triple and root_number_family.
    bool coprime_filter = false;

    // Throws domain_error when the coefficients violate the family's
    // requirements (zero rows; reducible quadratic part; zero linear part).
    void validate() const;

    bool coprime_effective() const {
        return coprime_filter || kind == FormKind::twisted_triple ||
               kind == FormKind::root_number_family;
    }

    // Stable one-token name used in reports.
    std::string name() const;

    // Upper bound on |single factor value| over |x| <= Bx, |y| <= By, for
    // table sizing (factors are evaluated separately, so this is the table
    // limit the evaluation needs, not the full product bound).
    i128 factor_bound(i64 Bx, i64 By) const;

    // The theorem-shaped decay envelope at scale N (N >= 3):
    // log log N / log N for the product families, log log N / sqrt(log N)
    // for the twisted and root-number families.
    double envelope(i64 N) const;
};

// One grid point of an experiment.
struct ReportRow {
    std::string form;
    i64 N = 0;
    i64 raw = 0;          // exact integer sum
    i64 count = 0;        // geometric #(S cap L)
    Rat normalizer;       // Area(S) / idx(L)
    double avg = 0.0;     // raw / normalizer
    double envelope_ratio = 0.0;  // |avg| / envelope(N)
    i64 millis = 0;       // wall time; segregated from reproducible output
};

struct ExperimentReport {
    FormSpec form;
    std::vector<i64> grid;
    std::vector<ReportRow> rows;
    std::string fingerprint;
};

// Execution environment for the evaluators.
struct EngineOptions {
    const LiouvilleTable* table = nullptr;   // required by the lambda-based runs
    const Factorizer* factorizer = nullptr;  // nullptr = process default
    int threads = 1;                         // row-partitioned workers
    // When a factor value falls outside the table: factor it on the fly
    // (true) or fail with resource_error naming the required limit (false).
    bool allow_factor_fallback = true;
};

// Exact sum of the family's term over (x, y) in S cap L (S already scaled to
// N), evaluated row by row.  Points where any lambda factor vanishes
// contribute 0; the coprimality filter and the family-specific skip rules are
// applied per point.  Deterministic: integer accumulation, identical for any
// thread count.
ReportRow run_chowla(const FormSpec& form, const ConvexRegion& S, const LatticeCoset& L, i64 N,
                     const EngineOptions& opt);

// Corollary-style root-number sum: coprime pairs with a * b * (a - b) != 0.
// Equivalent to run_chowla with a root_number_family spec.
ReportRow run_root_number(const ConvexRegion& S, const LatticeCoset& L, i64 N,
                          const EngineOptions& opt);

// Exact sum of lambda(n) for n <= x, n = a (mod m).  x must be within the
// table (resource_error otherwise).
i64 run_progression(const LiouvilleTable& table, i64 x, i64 m, i64 a);

// Exact sum of lambda(n) for x < n <= x + h, n = a (mod m).
i64 run_short_interval(const LiouvilleTable& table, i64 x, i64 h, i64 m, i64 a);

// Bombieri-Vinogradov-style measurement:
//   sum over m <= M of  max_a max_{x <= N} | sum_{n <= x, n = a (m)} lambda(n) |
// with M = floor(sqrt(N) / (log N)^(2A + 6)) (natural logarithm).  At desk
// scales this M is 0 and the sum is empty; run_bv_capped exposes the same
// measurement with the cutoff chosen directly.
struct BvResult {
    i64 modulus_cap = 0;
    i64 value = 0;
};
BvResult run_bv(const LiouvilleTable& table, i64 N, int A);
BvResult run_bv_capped(const LiouvilleTable& table, i64 N, i64 M);

// Decay table derived from a report's rows (needs >= 2 grid points).
struct DecayLine {
    i64 N;
    double avg;
    double ratio;
};
std::vector<DecayLine> decay_report(const std::vector<ReportRow>& rows);

// Environment fingerprint recorded in reports: compiler, table limit,
// thread count.
std::string engine_fingerprint(const EngineOptions& opt);

// Serialization.  CSV and the structured format hold the same rows; timing
// is kept out of both unless include_timing is set (the CLI writes timing to
// a sidecar so the scientific output is byte-reproducible).
std::string report_to_csv(const ExperimentReport& rep);
std::string report_to_json(const ExperimentReport& rep, bool include_timing);
ExperimentReport report_from_json(const std::string& text);

}  // namespace parity

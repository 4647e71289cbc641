#pragma once

#include <string>
#include <vector>

#include "parity/factor.hpp"

namespace parity {

// Outcome of one checked property.  On failure, detail holds the
// counterexample; on success, a short note about the scale that was covered.
struct PropertyResult {
    std::string module;
    std::string property;
    bool pass = true;
    std::string detail;
};

struct VerifyOptions {
    // Scale knob: caps exhaustive ranges and randomized sample counts.  The
    // per-property scales derived from it are reported in each detail string.
    i64 limit = 10'000;
    u64 seed = 42;
    // When set, the arithmetic suite checks this table instead of building
    // its own — the hook used by the fault-injection tests.
    const LiouvilleTable* table = nullptr;
    // Worker count exercised by the determinism property.
    int threads = 2;
};

// Invariant suites, one per module.  Every property is either an exact law
// checked against an independent recomputation or a definition-based
// enumeration; there are no tolerances.
std::vector<PropertyResult> suite_core_arith(const VerifyOptions& opt);
std::vector<PropertyResult> suite_symbols(const VerifyOptions& opt);
std::vector<PropertyResult> suite_lattice(const VerifyOptions& opt);
std::vector<PropertyResult> suite_region_scan(const VerifyOptions& opt);
std::vector<PropertyResult> suite_quadfield(const VerifyOptions& opt);
std::vector<PropertyResult> suite_sieve(const VerifyOptions& opt);
std::vector<PropertyResult> suite_experiments(const VerifyOptions& opt);

// All suites in module order.
std::vector<PropertyResult> run_verify(const VerifyOptions& opt);

bool all_pass(const std::vector<PropertyResult>& results);

// One line per property: "module/property: ok|FAIL (detail)".
std::string format_results(const std::vector<PropertyResult>& results);

}  // namespace parity

#pragma once

#include <string>
#include <vector>

#include "parity/experiments.hpp"
#include "parity/lattice.hpp"
#include "parity/region.hpp"

namespace parity {

// How the scan region is produced at each grid scale N.
enum class RegionKind {
    sym_box,  // [-N, N]^2 (the default convention)
    pos_box,  // [1, N]^2 (avoids sign-symmetric cancellation)
    polygon,  // explicit rational vertices, optionally scaled by N
};

struct RegionSpec {
    RegionKind kind = RegionKind::sym_box;
    std::vector<RatPoint> vertices;  // polygon only; counterclockwise
    bool scale_by_n = true;          // polygon only

    // The concrete region at scale N (N >= 1).  Throws domain_error when the
    // polygon vertices are not in convex counterclockwise position.
    ConvexRegion at_scale(i64 N) const;
};

// A declarative experiment: form, region recipe, lattice coset, N grid, and
// resource knobs.  Parsed from and serialized to a structured text format;
// parse -> serialize -> parse is the identity.
struct ExperimentConfig {
    FormSpec form;
    RegionSpec region;
    Mat2 coset_basis{1, 0, 0, 1};
    Vec2 coset_offset{0, 0};
    std::vector<i64> grid{64};
    i64 table_limit = 0;  // 0 = size from the form and grid automatically
    int threads = 0;      // 0 = hardware concurrency

    // Full validation (cheap; runs before any table allocation).  Throws
    // domain_error with a message naming the violated precondition.
    void validate() const;

    LatticeCoset coset() const { return LatticeCoset(coset_basis, coset_offset); }

    // The lambda-table limit the configured runs need: the factor bound of
    // the form over the largest grid region, or the explicit table_limit
    // override when set.  Zero for families that never consult the table.
    i64 required_table_limit() const;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

// Runs the configured grid with the supplied engine options (table/threads
// already resolved by the caller) and assembles the report.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const EngineOptions& opt);

}  // namespace parity

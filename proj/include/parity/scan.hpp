#pragma once

#include <optional>
#include <vector>

#include "parity/lattice.hpp"
#include "parity/region.hpp"

namespace parity {

// One horizontal slice of a region/coset intersection: the lattice points on
// the line at height y are x = x_first + k * x_step for k = 0 .. count - 1.
struct LatticeRow {
    i64 y = 0;
    i64 x_first = 0;
    i64 x_step = 1;
    i64 count = 0;
};

// The integer y-range [lo, hi] a bounded region can touch; nullopt when the
// region is empty or spans no integer height.
std::optional<std::pair<i64, i64>> integer_y_range(const ConvexRegion& S);

// The slice of S ∩ L at height y, or nullopt when it is empty.  All interval
// clipping is exact: the rational row span is rounded with ceil/floor and the
// progression is aligned with integer arithmetic only.
std::optional<LatticeRow> row_at(const ConvexRegion& S, const LatticeCoset& L, i64 y);

// Streams every nonempty row of S ∩ L with y in [y_lo, y_hi] (additionally
// clipped to the region's own y-range) into emit(const LatticeRow&).  Rows
// for disjoint y-ranges may be consumed by parallel workers.
template <class Fn>
void for_each_row(const ConvexRegion& S, const LatticeCoset& L, i64 y_lo, i64 y_hi, Fn&& emit) {
    auto yr = integer_y_range(S);
    if (!yr) return;
    i64 lo = std::max(y_lo, yr->first);
    i64 hi = std::min(y_hi, yr->second);
    for (i64 y = lo; y <= hi; ++y)
        if (auto row = row_at(S, L, y)) emit(*row);
}

template <class Fn>
void for_each_row(const ConvexRegion& S, const LatticeCoset& L, Fn&& emit) {
    auto yr = integer_y_range(S);
    if (!yr) return;
    for_each_row(S, L, yr->first, yr->second, emit);
}

// Materialized rows, bottom to top.
std::vector<LatticeRow> collect_rows(const ConvexRegion& S, const LatticeCoset& L);

// Exact number of lattice-coset points in the closed region.
i128 count_points(const ConvexRegion& S, const LatticeCoset& L);

}  // namespace parity

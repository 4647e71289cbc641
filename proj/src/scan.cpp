#include "parity/scan.hpp"

namespace parity {

std::optional<std::pair<i64, i64>> integer_y_range(const ConvexRegion& S) {
    if (S.empty()) return std::nullopt;
    i64 lo = S.bbox().ymin.ceil();
    i64 hi = S.bbox().ymax.floor();
    if (hi < lo) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::optional<LatticeRow> row_at(const ConvexRegion& S, const LatticeCoset& L, i64 y) {
    auto prog = L.row_progression(y);
    if (!prog) return std::nullopt;
    auto span = S.row_span(Rat(y));
    if (!span) return std::nullopt;
    i64 xlo = span->first.ceil();
    i64 xhi = span->second.floor();
    if (xhi < xlo) return std::nullopt;
    // First x >= xlo with x ≡ residue (mod modulus).
    i64 m = prog->modulus;
    i64 shift = (prog->residue - xlo) % m;
    if (shift < 0) shift += m;
    i64 x_first = xlo + shift;
    if (x_first > xhi) return std::nullopt;
    LatticeRow row;
    row.y = y;
    row.x_first = x_first;
    row.x_step = m;
    row.count = (xhi - x_first) / m + 1;
    return row;
}

std::vector<LatticeRow> collect_rows(const ConvexRegion& S, const LatticeCoset& L) {
    std::vector<LatticeRow> rows;
    for_each_row(S, L, [&](const LatticeRow& r) { rows.push_back(r); });
    return rows;
}

i128 count_points(const ConvexRegion& S, const LatticeCoset& L) {
    i128 total = 0;
    for_each_row(S, L, [&](const LatticeRow& r) { total += r.count; });
    return total;
}

}  // namespace parity

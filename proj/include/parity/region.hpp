#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parity/lattice.hpp"
#include "parity/rational.hpp"

namespace parity {

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint&) const = default;
};

// A closed convex polygon with exact rational vertices, listed in
// counterclockwise order.  Degenerate shapes (empty, single point, segment,
// zero-area chains) are allowed.  All geometric predicates are exact; nothing
// is rounded until a caller asks for integer bounds.
class ConvexRegion {
public:
    // Empty region.
    ConvexRegion() = default;

    // Validates convexity (every consecutive-edge cross product >= 0) and
    // counterclockwise orientation (shoelace sum >= 0); throws domain_error
    // otherwise.
    explicit ConvexRegion(std::vector<RatPoint> vertices);

    // Axis-aligned box [x0, x1] x [y0, y1] (either order of endpoints).
    static ConvexRegion box(Rat x0, Rat x1, Rat y0, Rat y1);
    static ConvexRegion triangle(RatPoint a, RatPoint b, RatPoint c);

    const std::vector<RatPoint>& vertices() const { return verts_; }
    bool empty() const { return verts_.empty(); }

    // Exact area (shoelace / 2); zero for degenerate shapes.
    Rat area() const;

    struct BBox {
        Rat xmin, xmax, ymin, ymax;
    };
    // Bounding box; callers must check empty() first.
    const BBox& bbox() const;

    // Closed membership: boundary points are inside.
    bool contains(const RatPoint& p) const;
    bool contains(Vec2 v) const { return contains(RatPoint{Rat(v.x), Rat(v.y)}); }

    // The x-interval of the slice at height y, when the horizontal line meets
    // the region: closed interval [lo, hi] (lo == hi at a tangent vertex).
    std::optional<std::pair<Rat, Rat>> row_span(const Rat& y) const;

    // Image under the integer matrix M, divided by den (den > 0).  The image
    // of a convex region is convex; vertex order is reversed when det(M) < 0
    // to restore counterclockwise orientation.  Throws domain_error if M is
    // singular.
    ConvexRegion affine_image(const Mat2& M, i64 den = 1) const;

    // The region scaled by the rational factor f >= 0 about the origin.
    ConvexRegion scaled(const Rat& f) const;

    std::string str() const;

private:
    std::vector<RatPoint> verts_;
    BBox bbox_{};

    void compute_bbox();
};

}  // namespace parity

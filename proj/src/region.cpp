#include "parity/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace parity {

namespace {

// Sign of the cross product (b - a) x (c - a) without building large
// denominators: compare as exact rationals via the Rat operations.
Rat cross(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

ConvexRegion::ConvexRegion(std::vector<RatPoint> vertices) : verts_(std::move(vertices)) {
    const std::size_t n = verts_.size();
    if (n >= 3) {
        Rat shoelace(0);
        for (std::size_t i = 0; i < n; ++i) {
            const RatPoint& p = verts_[i];
            const RatPoint& q = verts_[(i + 1) % n];
            const RatPoint& r = verts_[(i + 2) % n];
            if (cross(p, q, r) < Rat(0))
                throw std::domain_error("ConvexRegion: vertices are not convex/counterclockwise");
            shoelace = shoelace + (p.x * q.y - q.x * p.y);
        }
        if (shoelace < Rat(0))
            throw std::domain_error("ConvexRegion: vertices are clockwise");
    }
    compute_bbox();
}

ConvexRegion ConvexRegion::box(Rat x0, Rat x1, Rat y0, Rat y1) {
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    return ConvexRegion({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexRegion ConvexRegion::triangle(RatPoint a, RatPoint b, RatPoint c) {
    if (cross(a, b, c) < Rat(0)) std::swap(b, c);
    return ConvexRegion({a, b, c});
}

void ConvexRegion::compute_bbox() {
    if (verts_.empty()) return;
    bbox_.xmin = bbox_.xmax = verts_[0].x;
    bbox_.ymin = bbox_.ymax = verts_[0].y;
    for (const RatPoint& p : verts_) {
        if (p.x < bbox_.xmin) bbox_.xmin = p.x;
        if (bbox_.xmax < p.x) bbox_.xmax = p.x;
        if (p.y < bbox_.ymin) bbox_.ymin = p.y;
        if (bbox_.ymax < p.y) bbox_.ymax = p.y;
    }
}

const ConvexRegion::BBox& ConvexRegion::bbox() const {
    if (verts_.empty()) throw std::domain_error("ConvexRegion::bbox: empty region");
    return bbox_;
}

Rat ConvexRegion::area() const {
    const std::size_t n = verts_.size();
    if (n < 3) return Rat(0);
    Rat s(0);
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& p = verts_[i];
        const RatPoint& q = verts_[(i + 1) % n];
        s = s + (p.x * q.y - q.x * p.y);
    }
    return s / Rat(2);
}

bool ConvexRegion::contains(const RatPoint& p) const {
    const std::size_t n = verts_.size();
    if (n == 0) return false;
    // Bounding-box test: necessary always, and it upgrades the half-plane
    // test from "on the carrier line" to "on the segment" for degenerate
    // (zero-area) shapes.
    if (p.x < bbox_.xmin || bbox_.xmax < p.x || p.y < bbox_.ymin || bbox_.ymax < p.y) return false;
    if (n == 1) return p == verts_[0];
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = verts_[i];
        const RatPoint& b = verts_[(i + 1) % n];
        if (cross(a, b, p) < Rat(0)) return false;
    }
    return true;
}

std::optional<std::pair<Rat, Rat>> ConvexRegion::row_span(const Rat& y) const {
    const std::size_t n = verts_.size();
    if (n == 0) return std::nullopt;
    if (y < bbox_.ymin || bbox_.ymax < y) return std::nullopt;
    if (n == 1) return std::make_pair(verts_[0].x, verts_[0].x);

    bool found = false;
    Rat lo(0), hi(0);
    auto widen = [&](const Rat& x) {
        if (!found) {
            lo = hi = x;
            found = true;
        } else {
            if (x < lo) lo = x;
            if (hi < x) hi = x;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = verts_[i];
        const RatPoint& b = verts_[(i + 1) % n];
        Rat ylo = a.y, yhi = b.y;
        if (yhi < ylo) std::swap(ylo, yhi);
        if (y < ylo || yhi < y) continue;
        if (a.y == b.y) {
            widen(a.x);
            widen(b.x);
        } else {
            // x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y), exactly.
            widen(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
    }
    if (!found) return std::nullopt;
    return std::make_pair(lo, hi);
}

ConvexRegion ConvexRegion::affine_image(const Mat2& M, i64 den) const {
    if (M.det() == 0) throw std::domain_error("ConvexRegion::affine_image: singular matrix");
    if (den <= 0) throw std::domain_error("ConvexRegion::affine_image: denominator must be positive");
    std::vector<RatPoint> out;
    out.reserve(verts_.size());
    Rat d(den);
    for (const RatPoint& p : verts_) {
        Rat x = (Rat(M.a) * p.x + Rat(M.b) * p.y) / d;
        Rat y = (Rat(M.c) * p.x + Rat(M.d) * p.y) / d;
        out.push_back({x, y});
    }
    if (M.det() < 0) std::reverse(out.begin(), out.end());
    return ConvexRegion(std::move(out));
}

ConvexRegion ConvexRegion::scaled(const Rat& f) const {
    if (f < Rat(0)) throw std::domain_error("ConvexRegion::scaled: negative factor");
    std::vector<RatPoint> out;
    out.reserve(verts_.size());
    for (const RatPoint& p : verts_) out.push_back({p.x * f, p.y * f});
    return ConvexRegion(std::move(out));
}

std::string ConvexRegion::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ", ";
        s += "(" + verts_[i].x.str() + "," + verts_[i].y.str() + ")";
    }
    return s + "}";
}

}  // namespace parity

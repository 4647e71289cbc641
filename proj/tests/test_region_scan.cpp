#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "parity/region.hpp"
#include "parity/scan.hpp"

using namespace parity;

TEST_CASE("box construction and exact area") {
    ConvexRegion b = ConvexRegion::box(Rat(-2), Rat(3), Rat(1), Rat(4));
    CHECK(b.area() == Rat(15));
    CHECK(b.bbox().xmin == Rat(-2));
    CHECK(b.bbox().xmax == Rat(3));
    CHECK(b.contains(RatPoint{Rat(0), Rat(2)}));
    CHECK(b.contains(RatPoint{Rat(-2), Rat(1)}));      // corner
    CHECK(b.contains(RatPoint{Rat(3), Rat(2)}));       // edge
    CHECK(!b.contains(RatPoint{Rat(3, 1), Rat(9, 2)}));
    // Endpoint order is forgiving.
    CHECK(ConvexRegion::box(Rat(3), Rat(-2), Rat(4), Rat(1)).area() == Rat(15));
}

TEST_CASE("triangles and halves") {
    ConvexRegion t = ConvexRegion::triangle({Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)});
    CHECK(t.area() == Rat(2));
    CHECK(t.contains(RatPoint{Rat(1, 2), Rat(1, 2)}));
    CHECK(t.contains(RatPoint{Rat(1), Rat(1)}));       // hypotenuse
    CHECK(!t.contains(RatPoint{Rat(3, 2), Rat(3, 2)}));
    CHECK(t.area() + t.area() == ConvexRegion::box(Rat(0), Rat(2), Rat(0), Rat(2)).area());
}

TEST_CASE("degenerate shapes") {
    ConvexRegion empty;
    CHECK(empty.empty());
    CHECK(empty.area() == Rat(0));

    ConvexRegion point({RatPoint{Rat(5), Rat(7)}});
    CHECK(point.area() == Rat(0));
    CHECK(point.contains(RatPoint{Rat(5), Rat(7)}));
    CHECK(!point.contains(RatPoint{Rat(5), Rat(8)}));

    ConvexRegion seg({RatPoint{Rat(0), Rat(0)}, RatPoint{Rat(4), Rat(2)}});
    CHECK(seg.area() == Rat(0));
    CHECK(seg.contains(RatPoint{Rat(2), Rat(1)}));
    CHECK(!seg.contains(RatPoint{Rat(2), Rat(2)}));
}

TEST_CASE("invalid vertex chains are rejected") {
    // Clockwise square.
    CHECK_THROWS_AS(ConvexRegion({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}}),
                    std::domain_error);
    // Non-convex chain.
    CHECK_THROWS_AS(ConvexRegion({{Rat(0), Rat(0)},
                                  {Rat(4), Rat(0)},
                                  {Rat(1), Rat(1)},
                                  {Rat(4), Rat(4)}}),
                    std::domain_error);
}

TEST_CASE("row spans are exact closed intervals") {
    ConvexRegion t = ConvexRegion::triangle({Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(4)});
    auto mid = t.row_span(Rat(1));
    REQUIRE(mid.has_value());
    CHECK(mid->first == Rat(0));
    CHECK(mid->second == Rat(3));
    auto half = t.row_span(Rat(7, 2));
    REQUIRE(half.has_value());
    CHECK(half->second == Rat(1, 2));
    auto apex = t.row_span(Rat(4));
    REQUIRE(apex.has_value());
    CHECK(apex->first == apex->second);
    CHECK(!t.row_span(Rat(9, 2)).has_value());
    CHECK(!t.row_span(Rat(-1)).has_value());
}

TEST_CASE("affine images of regions") {
    ConvexRegion b = ConvexRegion::box(Rat(0), Rat(1), Rat(0), Rat(1));
    ConvexRegion img = b.affine_image(Mat2{2, 1, 0, 1});
    CHECK(img.area() == Rat(2));
    CHECK(img.contains(RatPoint{Rat(3, 2), Rat(1, 2)}));

    // Reflection keeps counterclockwise order (area stays positive).
    ConvexRegion mirr = b.affine_image(Mat2{-1, 0, 0, 1});
    CHECK(mirr.area() == Rat(1));
    CHECK(mirr.contains(RatPoint{Rat(-1, 2), Rat(1, 2)}));

    ConvexRegion shrunk = b.affine_image(Mat2{1, 0, 0, 1}, 2);
    CHECK(shrunk.area() == Rat(1, 4));

    CHECK_THROWS_AS(b.affine_image(Mat2{1, 2, 2, 4}), std::domain_error);

    CHECK(b.scaled(Rat(3)).area() == Rat(9));
    CHECK(b.scaled(Rat(1, 2)).area() == Rat(1, 4));
}

TEST_CASE("integer y-range") {
    CHECK(!integer_y_range(ConvexRegion()).has_value());
    auto r = integer_y_range(ConvexRegion::box(Rat(0), Rat(1), Rat(-3, 2), Rat(5, 2)));
    REQUIRE(r.has_value());
    CHECK(r->first == -1);
    CHECK(r->second == 2);
    // A sliver between consecutive integers touches no integer height.
    CHECK(!integer_y_range(ConvexRegion::box(Rat(0), Rat(1), Rat(1, 3), Rat(2, 3))).has_value());
}

TEST_CASE("rows of a region-coset intersection") {
    ConvexRegion b = ConvexRegion::box(Rat(0), Rat(10), Rat(0), Rat(2));
    LatticeCoset lx = LatticeCoset::x_congruence(3, 1);
    auto row = row_at(b, lx, 1);
    REQUIRE(row.has_value());
    CHECK(row->y == 1);
    CHECK(row->x_first == 1);
    CHECK(row->x_step == 3);
    CHECK(row->count == 4);  // 1, 4, 7, 10
    CHECK(!row_at(b, lx, 3).has_value());

    // Coset with empty rows.
    LatticeCoset ly = LatticeCoset::y_congruence(2, 0);
    CHECK(!row_at(b, ly, 1).has_value());
    REQUIRE(row_at(b, ly, 2).has_value());
    CHECK(row_at(b, ly, 2)->count == 11);
}

TEST_CASE("point counts match brute force") {
    ConvexRegion shapes[] = {
        ConvexRegion::box(Rat(-5), Rat(5), Rat(-5), Rat(5)),
        ConvexRegion::triangle({Rat(-4), Rat(-1)}, {Rat(5), Rat(0)}, {Rat(0), Rat(6)}),
        ConvexRegion({{Rat(0), Rat(0)}, {Rat(7, 2), Rat(-1)}, {Rat(6), Rat(2)}, {Rat(2), Rat(5)}}),
    };
    LatticeCoset cosets[] = {
        LatticeCoset(),
        LatticeCoset::x_congruence(2, 1),
        LatticeCoset::from_generators({{2, 0}, {1, 1}}, {0, 0}),
        LatticeCoset(Mat2{3, 0, 1, 4}, Vec2{2, 3}),
    };
    for (const auto& S : shapes) {
        for (const auto& L : cosets) {
            i128 brute = 0;
            for (i64 x = -10; x <= 10; ++x)
                for (i64 y = -10; y <= 10; ++y)
                    if (L.contains({x, y}) && S.contains(Vec2{x, y})) ++brute;
            CHECK(count_points(S, L) == brute);
        }
    }
}

TEST_CASE("row streaming covers the count") {
    ConvexRegion S = ConvexRegion::triangle({Rat(-3), Rat(0)}, {Rat(6), Rat(1)}, {Rat(1), Rat(7)});
    LatticeCoset L = LatticeCoset::from_generators({{2, 1}, {0, 3}}, {1, 1});
    i128 total = 0;
    for_each_row(S, L, [&](const LatticeRow& r) {
        CHECK(r.count > 0);
        for (i64 k = 0; k < r.count; ++k) {
            Vec2 v{r.x_first + k * r.x_step, r.y};
            CHECK(L.contains(v));
            CHECK(S.contains(v));
        }
        total += r.count;
    });
    CHECK(total == count_points(S, L));
    CHECK(collect_rows(S, L).size() > 0);

    // Clipped variant restricts to the requested band.
    i128 band = 0;
    for_each_row(S, L, 2, 4, [&](const LatticeRow& r) {
        CHECK(r.y >= 2);
        CHECK(r.y <= 4);
        band += r.count;
    });
    CHECK(band <= total);
}

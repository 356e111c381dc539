// Lattice width certificates, strip normalization, and simplex size.

#include <doctest.h>

#include <npinv/width.hpp>

#include "test_support.hpp"

using namespace npinv;

TEST_SUITE("width") {

TEST_CASE("width along a fixed direction") {
    auto p = fx::poly({{0, 0}, {4, 2}, {2, 4}});
    CHECK(width_along(p, LatticePoint(1, 0)) == 4);
    CHECK(width_along(p, LatticePoint(0, 1)) == 4);
    CHECK(width_along(p, LatticePoint(1, 1)) == 6);
    CHECK(width_along(p, LatticePoint(-1, 0)) == 4);
    CHECK(fx::error_code_of([&] { return width_along(p, LatticePoint(2, 4)); }) ==
          errc::non_primitive_direction);
    CHECK(fx::error_code_of([&] { return width_along(p, LatticePoint(0, 0)); }) ==
          errc::non_primitive_direction);
}

TEST_CASE("width certificates") {
    auto tri = lattice_width(fx::poly({{0, 0}, {3, 0}, {0, 3}}));
    CHECK(tri.width == 3);
    CHECK(tri.directions ==
          std::vector<LatticePoint>{{0, 1}, {1, 0}, {1, 1}});

    auto sq = lattice_width(fx::poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(sq.width == 1);
    CHECK(sq.directions == std::vector<LatticePoint>{{0, 1}, {1, 0}});

    auto ups = lattice_width(fx::poly({{0, 0}, {4, 2}, {2, 4}}));
    CHECK(ups.width == 4);
    CHECK(ups.directions ==
          std::vector<LatticePoint>{{0, 1}, {1, -1}, {1, 0}});

    // Skew rectangles find their short axis far from the coordinate seed.
    auto skew = fx::poly({{0, 0}, {5, 1}, {4, 6}, {-1, 5}});
    auto cert = lattice_width(skew);
    for (const auto& v : cert.directions)
        CHECK(width_along(skew, v) == cert.width);
}

TEST_CASE("degenerate widths") {
    CHECK(lattice_width(fx::poly({{3, 3}})).width == 0);
    auto seg = lattice_width(fx::poly({{0, 0}, {4, 2}}));
    CHECK(seg.width == 0);
    CHECK(seg.directions == std::vector<LatticePoint>{{1, -2}});
    CHECK(lattice_width_value(std::nullopt) == -1);
    CHECK(lattice_width_value(fx::poly({{0, 0}, {2, 0}, {0, 2}})) == 2);
}

TEST_CASE("width agrees with the direction-scan oracle") {
    std::mt19937_64 rng(1441);
    for (int i = 0; i < 60; ++i) {
        auto p = fx::random_polygon(rng, 6);
        auto cert = lattice_width(p);
        CHECK(cert.width == Int(oracle::width_scan(oracle::of_polygon(p))));
        CHECK(int(cert.directions.size()) ==
              oracle::width_pair_count(oracle::of_polygon(p)));
    }
}

TEST_CASE("at most four direction pairs attain the width") {
    for (const auto& p : fx::census_pool()) {
        if (p.dim() < 2) continue;
        auto n = lattice_width(p).directions.size();
        CHECK(n >= 1);
        CHECK(n <= 4);
    }
}

TEST_CASE("strip normalization") {
    auto p = fx::poly({{0, 0}, {4, 2}, {2, 4}});
    for (auto v : {LatticePoint(0, 1), LatticePoint(1, -1), LatticePoint(1, 0)}) {
        CAPTURE(v.x.str());
        CAPTURE(v.y.str());
        auto f = normalize_to_strip(p, v);
        CHECK(f.linear.det() == 1);
        auto img = p.transformed(f);
        auto [lo, hi] = img.bounding_box();
        CHECK(lo == LatticePoint(0, 0));
        CHECK(hi.y == width_along(p, v));
    }
    CHECK(fx::error_code_of([&] { return normalize_to_strip(p, LatticePoint(2, 0)); }) ==
          errc::non_primitive_direction);
}

TEST_CASE("simplex size") {
    CHECK(simplex_size(std::nullopt) == -2);
    CHECK(simplex_size(fx::poly({{5, 5}})) == 0);
    CHECK(simplex_size(fx::poly({{0, 0}, {6, 4}})) == 2);
    CHECK(simplex_size(fx::poly({{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK(simplex_size(fx::poly({{0, 0}, {3, 0}, {0, 3}})) == 3);
    CHECK(simplex_size(fx::poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 2);

    // Invariant under unimodular maps.
    std::mt19937_64 rng(555);
    auto tri = fx::poly({{0, 0}, {2, 0}, {0, 2}});
    for (int i = 0; i < 20; ++i)
        CHECK(simplex_size(tri.transformed(fx::random_affine(rng))) == 2);
}

}  // TEST_SUITE

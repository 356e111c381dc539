// Integer lattice primitives: points, hulls, counting, maps, Minkowski sums.

#include <doctest.h>

#include <npinv/lattice.hpp>

#include "test_support.hpp"

using namespace npinv;

namespace {

LatticePolygon unit_square() { return fx::poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
LatticePolygon sigma() { return fx::poly({{0, 0}, {1, 0}, {0, 1}}); }
LatticePolygon two_ups() { return fx::poly({{0, 0}, {4, 2}, {2, 4}}); }

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("integer helpers") {
    CHECK(gcd_int(Int(12), Int(-18)) == 6);
    CHECK(gcd_int(Int(0), Int(7)) == 7);
    auto g = ext_gcd(Int(240), Int(46));
    CHECK(g.g == 2);
    CHECK(g.u * 240 + g.v * 46 == 2);
    CHECK(primitive(LatticePoint(4, -6)) == LatticePoint(2, -3));
    CHECK(primitive(LatticePoint(0, -5)) == LatticePoint(0, -1));
    CHECK(fx::error_code_of([] { return primitive(LatticePoint(0, 0)); }) ==
          errc::bad_argument);
}

TEST_CASE("make_rat normalizes negative denominators") {
    CHECK(make_rat(Int(1), Int(-2)) == make_rat(Int(-1), Int(2)));
    CHECK(make_rat(Int(-6), Int(-4)) == make_rat(Int(3), Int(2)));
    CHECK(make_rat(Int(0), Int(-5)) == 0);
}

TEST_CASE("hull canonicalization") {
    // Duplicates and collinear boundary points are dropped.
    auto p = fx::poly({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 0}, {0, 2}, {0, 1}, {1, 1}});
    CHECK(p.vertex_count() == 4);
    CHECK(p == fx::poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(p.dim() == 2);

    auto seg = fx::poly({{3, 1}, {1, 1}, {2, 1}});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices() == std::vector<LatticePoint>{{1, 1}, {3, 1}});

    auto pt = fx::poly({{5, -2}, {5, -2}});
    CHECK(pt.dim() == 0);
    CHECK(pt.vertex_count() == 1);

    CHECK(fx::error_code_of([] { return LatticePolygon::hull({}); }) ==
          errc::empty_point_set);
}

TEST_CASE("area and point counts") {
    CHECK(sigma().area2() == 1);
    CHECK(unit_square().area2() == 2);
    CHECK(two_ups().area2() == 12);
    CHECK(fx::poly({{0, 0}, {3, 1}}).area2() == 0);

    CHECK(sigma().boundary_count() == 3);
    CHECK(sigma().interior_count() == 0);
    CHECK(two_ups().boundary_count() == 6);
    CHECK(two_ups().interior_count() == 4);
    CHECK(fx::poly({{0, 0}, {4, 6}}).boundary_count() == 3);
    CHECK(fx::poly({{2, 2}}).boundary_count() == 1);
    CHECK(fx::poly({{2, 2}}).lattice_point_count() == 1);
}

TEST_CASE("Pick's identity on the drawn figures") {
    for (int g = 3; g <= 10; ++g) {
        for (const auto& [name, p] : fx::figures(g)) {
            CAPTURE(g);
            CAPTURE(name);
            CHECK(p.area2() == 2 * p.interior_count() + p.boundary_count() - 2);
        }
    }
}

TEST_CASE("counts agree with the box-scan oracle") {
    for (int g : {3, 6, 10}) {
        for (const auto& [name, p] : fx::figures(g)) {
            CAPTURE(name);
            auto h = oracle::of_polygon(p);
            CHECK(p.area2() == Int(oracle::area2(h)));
            CHECK(p.boundary_count() == Int(oracle::boundary_points(h)));
            CHECK(p.interior_count() == Int(oracle::interior_points(h)));
            CHECK(p.lattice_points().size() == oracle::points_in(h).size());
        }
    }
}

TEST_CASE("containment") {
    auto p = two_ups();
    CHECK(p.contains(LatticePoint(0, 0)));
    CHECK(p.contains(LatticePoint(2, 1)));  // edge midpoint
    CHECK(p.contains(LatticePoint(2, 2)));
    CHECK_FALSE(p.contains(LatticePoint(-1, 0)));
    CHECK_FALSE(p.strictly_contains(LatticePoint(0, 0)));
    CHECK_FALSE(p.strictly_contains(LatticePoint(2, 1)));
    CHECK(p.strictly_contains(LatticePoint(2, 2)));

    auto seg = fx::poly({{0, 0}, {2, 2}});
    CHECK(seg.contains(LatticePoint(1, 1)));
    CHECK_FALSE(seg.contains(LatticePoint(1, 0)));
    CHECK_FALSE(seg.strictly_contains(LatticePoint(1, 1)));
}

TEST_CASE("lattice point listings are sorted and complete") {
    auto p = fx::figure(5, "G5_1");
    auto pts = p.lattice_points();
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(Int(pts.size()) == p.lattice_point_count());
    auto ints = p.interior_lattice_points();
    CHECK(Int(ints.size()) == p.interior_count());
    for (const auto& q : ints) CHECK(p.strictly_contains(q));
}

TEST_CASE("matrices and affine maps") {
    Mat2 m(1, 2, 1, 3);
    CHECK(m.det() == 1);
    CHECK(m.apply(LatticePoint(1, 1)) == LatticePoint(3, 4));
    Mat2 inv = unimodular_inverse(m);
    CHECK(inv * m == Mat2());
    CHECK(m * inv == Mat2());
    CHECK(fx::error_code_of([] { return unimodular_inverse(Mat2(2, 0, 0, 1)); }) ==
          errc::bad_argument);

    AffineMap f(Mat2(0, -1, 1, 0), LatticePoint(3, -1));
    AffineMap g(Mat2(1, 1, 0, 1), LatticePoint(-2, 5));
    LatticePoint q(7, -4);
    CHECK(f.compose(g).apply(q) == f.apply(g.apply(q)));
    CHECK(f.inverse().apply(f.apply(q)) == q);
    CHECK(f.compose(f.inverse()) == AffineMap());
}

TEST_CASE("polygon images") {
    auto p = sigma();
    CHECK(p.translated(LatticePoint(2, -1)) == fx::poly({{2, -1}, {3, -1}, {2, 0}}));
    CHECK(p.scaled(Int(3)) == fx::poly({{0, 0}, {3, 0}, {0, 3}}));

    // A det -1 map is accepted; the image is re-canonicalized.
    AffineMap flip(Mat2(-1, 0, 0, 1), LatticePoint(0, 0));
    auto q = two_ups().transformed(flip);
    CHECK(q.area2() == two_ups().area2());
    CHECK(q == fx::poly({{0, 0}, {-4, 2}, {-2, 4}}));
}

TEST_CASE("support range and bounding box") {
    auto p = two_ups();
    auto [lo, hi] = p.support_range(LatticePoint(0, 1));
    CHECK(lo == 0);
    CHECK(hi == 4);
    auto [bmin, bmax] = p.bounding_box();
    CHECK(bmin == LatticePoint(0, 0));
    CHECK(bmax == LatticePoint(4, 4));
}

TEST_CASE("Minkowski sums and mixed volumes") {
    auto s = sigma();
    auto q = unit_square();
    CHECK(s + s == s.scaled(Int(2)));
    CHECK(mixed_volume(s, s) == 2);
    CHECK(mixed_volume(q, q) == 4);
    CHECK(mixed_volume(s, q) == 4);
    CHECK(mixed_volume(s, s.scaled(Int(2))) == 4);

    // Summing with a point translates, summing with a segment extrudes.
    CHECK(s + fx::poly({{1, 1}}) == s.translated(LatticePoint(1, 1)));
    auto ext = s + fx::poly({{0, 0}, {2, 0}});
    CHECK(ext == fx::poly({{0, 0}, {3, 0}, {2, 1}, {0, 1}}));

    std::mt19937_64 rng(411);
    for (int i = 0; i < 40; ++i) {
        auto a = fx::random_polygon(rng, 5);
        auto b = fx::random_polygon(rng, 5);
        CHECK(mixed_volume(a, b) == mixed_volume(b, a));
        CHECK(mixed_volume(a, b) == (a + b).area2() - a.area2() - b.area2());
    }
}

}  // TEST_SUITE

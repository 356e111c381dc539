// Gonality, Clifford data, pencils, scrollar invariants, row profiles,
// Schreyer invariants, well-alignedness, and the special-model recognizers.

#include <doctest.h>

#include <npinv/curve_invariants.hpp>

#include "test_support.hpp"

using namespace npinv;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("shape classification") {
    CHECK(classify_special(std::nullopt).tag == ShapeTag::Empty);
    CHECK(classify_special(fx::poly({{4, 1}})).tag == ShapeTag::Point);

    auto seg = classify_special(fx::poly({{1, 2}, {4, 2}}));
    CHECK(seg.tag == ShapeTag::Segment);
    CHECK(seg.a == 3);

    std::mt19937_64 rng(31);
    auto f = fx::random_affine(rng);
    auto simp = classify_special(standard_simplex(Int(2)).transformed(f));
    CHECK(simp.tag == ShapeTag::StandardSimplexMultiple);
    CHECK(simp.a == 2);

    CHECK(classify_special(upsilon().transformed(f)).tag == ShapeTag::Upsilon);
    CHECK(classify_special(two_upsilon().transformed(f)).tag == ShapeTag::TwoUpsilon);
    for (int k = 1; k <= 3; ++k) {
        auto s = classify_special(gamma_five(k).transformed(f));
        CHECK(s.tag == ShapeTag::GammaFive);
        CHECK(s.a == k);
    }

    auto rect = classify_special(rectangle(Int(2), Int(3)).transformed(f));
    CHECK(rect.tag == ShapeTag::Rectangle);
    CHECK(rect.a == 3);
    CHECK(rect.b == 2);

    CHECK(classify_special(fx::figure(7, "G7_1")).tag == ShapeTag::Generic);
    CHECK(fx::error_code_of([] { return gamma_five(4); }) == errc::bad_argument);
}

TEST_CASE("gonality") {
    CHECK(gonality(standard_simplex(Int(2))) == 1);          // rational
    CHECK(gonality(rectangle(Int(5), Int(2))) == 2);         // hyperelliptic
    CHECK(gonality(max_polygon(fx::poly({{1, 2}, {3, 2}}))) == 2);
    CHECK(gonality(standard_simplex(Int(4))) == 3);          // smooth plane quartic
    CHECK(gonality(fx::poly({{0, 0}, {4, 2}, {2, 4}})) == 3);  // the exception
    CHECK(gonality(standard_simplex(Int(5))) == 4);
    CHECK(gonality(fx::genus14()) == 5);
    CHECK(gonality(fx::genus46()) == 10);
    CHECK(fx::error_code_of([] { return gonality(fx::poly({{0, 0}, {3, 0}})); }) ==
          errc::not_two_dimensional);
}

TEST_CASE("gonality against the interior-width scan") {
    for (const auto& e : fx::census_pool()) {
        if (e.dim() < 2) continue;
        auto d = max_polygon(e);
        Int expect;
        if (e.dim() == 2 && equivalent(e, upsilon()))
            expect = 3;
        else
            expect = Int(oracle::width_scan(oracle::of_polygon(e))) + 2;
        CHECK(gonality(d) == expect);
    }
}

TEST_CASE("Clifford index and dimension") {
    auto check = [](const LatticePolygon& p, long index, long dimension) {
        auto c = clifford(p);
        CHECK(c.index == index);
        CHECK(c.dimension == dimension);
    };
    check(standard_simplex(Int(3)), 0, 1);                    // interior point
    check(rectangle(Int(6), Int(2)), 0, 1);                   // hyperelliptic
    check(max_polygon(upsilon()), 1, 1);                      // interior Upsilon
    check(fx::poly({{0, 0}, {4, 2}, {2, 4}}), 1, 1);          // 2 Upsilon itself
    check(max_polygon(two_upsilon()), 3, 3);                  // interior 2 Upsilon
    check(standard_simplex(Int(6)), 2, 2);                    // interior 3 Sigma
    check(standard_simplex(Int(8)), 4, 2);                    // smooth plane octic
    check(max_polygon(fx::figure(9, "G9_1")), 3, 1);
    check(fx::genus14(), 3, 1);

    CHECK(fx::error_code_of([] { return clifford(standard_simplex(Int(2))); }) ==
          errc::undefined_invariant);
    CHECK(fx::error_code_of([] { return clifford(fx::poly({{0, 0}, {3, 0}})); }) ==
          errc::undefined_invariant);
}

TEST_CASE("pencil directions") {
    auto g14 = pencils(fx::genus14());
    REQUIRE(g14.has_value());
    CHECK(g14->size() == 2);
    CHECK(*g14 == std::vector<LatticePoint>{{0, 1}, {1, 0}});

    auto one = pencils(max_polygon(fx::figure(10, "G10_2")));
    REQUIRE(one.has_value());
    CHECK(one->size() == 1);

    CHECK_FALSE(pencils(fx::poly({{0, 0}, {4, 2}, {2, 4}})).has_value());
    CHECK_FALSE(pencils(standard_simplex(Int(4))).has_value());
    CHECK(pencils(standard_simplex(Int(1))).has_value());

    CHECK(fx::error_code_of([] { return pencils(fx::poly({{0, 0}, {3, 0}})); }) ==
          errc::not_two_dimensional);
}

TEST_CASE("row profiles in strip position") {
    auto hexProfile = row_profile(fx::hexagon(), LatticePoint(0, 1));
    CHECK(hexProfile.gamma == 5);
    REQUIRE(hexProfile.E.size() == 4);
    CHECK(fx::error_code_of([&] { return hexProfile.e(0); }) == errc::bad_argument);
    CHECK(fx::error_code_of([&] { return hexProfile.e(5); }) == errc::bad_argument);

    CHECK(fx::error_code_of([] {
              return row_profile(fx::hexagon(), LatticePoint(1, 2));
          }) == errc::not_width_direction);
}

TEST_CASE("epsilon corrections") {
    auto vertical = row_profile(fx::hexagon(), LatticePoint(0, 1));
    CHECK(epsilon(vertical, 2, 2) == 1);
    CHECK(epsilon(vertical, 2, 3) == 0);
    CHECK(epsilon(vertical, 3, 3) == 1);

    auto horizontal = row_profile(fx::hexagon(), LatticePoint(1, 0));
    CHECK(epsilon(horizontal, 2, 2) == 0);
    CHECK(epsilon(horizontal, 2, 3) == 0);
    CHECK(epsilon(horizontal, 3, 3) == 0);

    CHECK(fx::error_code_of([&] { return epsilon(vertical, 1, 2); }) ==
          errc::bad_argument);
    CHECK(fx::error_code_of([&] { return epsilon(vertical, 3, 2); }) ==
          errc::bad_argument);
    CHECK(fx::error_code_of([&] { return epsilon(vertical, 2, 4); }) ==
          errc::bad_argument);
}

TEST_CASE("scrollar invariants of the genus-14 hexagon") {
    auto p = fx::genus14();
    CHECK(scrollar_invariants(p, LatticePoint(0, 1)) == ints({1, 3, 3, 3}));
    CHECK(scrollar_invariants(p, LatticePoint(1, 0)) == ints({2, 2, 3, 3}));
}

TEST_CASE("scrollar invariants of the C_{a,b} triangles") {
    auto c37 = cab_polygon(Int(3), Int(7));
    CHECK(c37.genus == 6);
    CHECK(c37.gonality == 3);
    CHECK(scrollar_invariants(c37.polygon, LatticePoint(0, 1)) == ints({1, 3}));

    auto c25 = cab_polygon(Int(2), Int(5));
    CHECK(c25.genus == 2);
    CHECK(scrollar_invariants(c25.polygon, LatticePoint(0, 1)) == ints({1}));
}

TEST_CASE("scrollar invariants reject the pencil-free shapes") {
    CHECK(fx::error_code_of([] {
              return scrollar_invariants(fx::poly({{0, 0}, {4, 2}, {2, 4}}),
                                         LatticePoint(0, 1));
          }) == errc::excluded_case);
    CHECK(fx::error_code_of([] {
              return scrollar_invariants(standard_simplex(Int(4)), LatticePoint(0, 1));
          }) == errc::excluded_case);
}

TEST_CASE("section counts of pencil multiples") {
    std::vector<Int> sc = {1, 3, 3, 3};
    CHECK(h0_sequence(Int(14), sc, Int(0)) == 1);
    CHECK(h0_sequence(Int(14), sc, Int(1)) == 2);
    CHECK(h0_sequence(Int(14), sc, Int(4)) == 7);
    // Far beyond the largest invariant the count grows linearly as
    // m * gamma - g + 1.
    CHECK(h0_sequence(Int(14), sc, Int(9)) == 9 * 5 - 14 + 1);

    // Hyperelliptic: h0 of m times the g^1_2 is m + 1 up to m = g - 1.
    for (long m = 0; m <= 2; ++m)
        CHECK(h0_sequence(Int(3), ints({2}), Int(m)) == m + 1);
    CHECK(h0_sequence(Int(3), ints({2}), Int(5)) == 8);

    CHECK(fx::error_code_of([&] { return h0_sequence(Int(14), sc, Int(-1)); }) ==
          errc::bad_argument);
    CHECK(fx::error_code_of([] { return h0_sequence(Int(14), ints({1, 1}), Int(1)); }) ==
          errc::bad_argument);
}

TEST_CASE("Schreyer invariants of tetragonal curves") {
    auto g8 = schreyer_invariants(max_polygon(fx::figure(8, "G8_1")));
    CHECK(g8.b1 == 1);
    CHECK(g8.b2 == 2);
    CHECK(g8.anomalous);
    CHECK(g8.sorted == std::array<Int, 2>{Int(1), Int(2)});

    auto g9 = schreyer_invariants(max_polygon(fx::figure(9, "G9_7")));
    CHECK(g9.b1 == 2);
    CHECK(g9.b2 == 2);
    CHECK_FALSE(g9.anomalous);

    auto g6 = schreyer_invariants(max_polygon(fx::figure(6, "G6_3")));
    CHECK(g6.b1 == 1);
    CHECK(g6.b2 == 0);
    CHECK_FALSE(g6.anomalous);

    // b1 + b2 counts the points of the interior hull short of five.
    for (const auto& e : fx::census_pool()) {
        if (e.dim() < 2) continue;
        auto d = max_polygon(e);
        if (gonality(d) != 4) continue;
        auto s = schreyer_invariants(d);
        CHECK(s.b1 + s.b2 == genus(d) - 5);
    }
}

TEST_CASE("Schreyer invariants reject other gonalities") {
    CHECK(fx::error_code_of([] {
              return schreyer_invariants(rectangle(Int(6), Int(2)));
          }) == errc::not_tetragonal);
    CHECK(fx::error_code_of([] {
              return schreyer_invariants(standard_simplex(Int(4)));
          }) == errc::not_tetragonal);
    CHECK(fx::error_code_of([] {
              return schreyer_invariants(max_polygon(upsilon()));
          }) == errc::not_tetragonal);
    CHECK(fx::error_code_of([] { return schreyer_invariants(fx::genus14()); }) ==
          errc::not_tetragonal);
}

TEST_CASE("well-alignedness of the genus-46 quadrilateral") {
    auto p = fx::genus46();
    auto vertical = is_well_aligned(p, LatticePoint(0, 1));
    CHECK_FALSE(vertical.aligned);
    CHECK(vertical.failure.has_value());
    CHECK(vertical.certificate.empty());

    auto horizontal = is_well_aligned(p, LatticePoint(1, 0));
    CHECK(horizontal.aligned);
    CHECK_FALSE(horizontal.failure.has_value());
    CHECK_FALSE(horizontal.certificate.empty());
}

TEST_CASE("well-alignedness needs a second interior hull") {
    CHECK(fx::error_code_of([] {
              return is_well_aligned(standard_simplex(Int(4)), LatticePoint(0, 1));
          }) == errc::no_second_interior);
    CHECK(fx::error_code_of([] {
              return is_well_aligned(rectangle(Int(6), Int(2)), LatticePoint(0, 1));
          }) == errc::no_second_interior);
}

TEST_CASE("C_{a,b} parameter checks") {
    auto c27 = cab_polygon(Int(2), Int(7));
    CHECK(c27.polygon == fx::poly({{0, 0}, {7, 0}, {0, 2}}));
    CHECK(c27.genus == 3);
    CHECK(c27.gonality == 2);

    auto c34 = cab_polygon(Int(3), Int(4));
    CHECK(c34.genus == 3);
    CHECK(c34.gonality == 3);

    CHECK(fx::error_code_of([] { return cab_polygon(Int(4), Int(6)); }) ==
          errc::not_coprime);
    CHECK(fx::error_code_of([] { return cab_polygon(Int(1), Int(5)); }) ==
          errc::bad_argument);
}

TEST_CASE("smooth plane model recognition") {
    CHECK(is_smooth_plane(standard_simplex(Int(2))) == Int(2));
    CHECK(is_smooth_plane(rectangle(Int(1), Int(1))) == Int(2));
    CHECK(is_smooth_plane(standard_simplex(Int(3))) == Int(3));
    CHECK(is_smooth_plane(standard_simplex(Int(4))) == Int(4));
    CHECK(is_smooth_plane(standard_simplex(Int(7))) == Int(7));
    CHECK_FALSE(is_smooth_plane(fx::genus14()).has_value());
    CHECK_FALSE(is_smooth_plane(max_polygon(two_upsilon())).has_value());
    CHECK(fx::error_code_of([] {
              return is_smooth_plane(fx::poly({{0, 0}, {3, 0}}));
          }) == errc::not_two_dimensional);
}

TEST_CASE("quadric surface recognition") {
    auto bideg = is_p1xp1(fx::poly({{-1, -1}, {4, -1}, {4, 3}, {-1, 3}}));
    REQUIRE(bideg.has_value());
    CHECK(*bideg == std::make_pair(Int(3), Int(2)));

    auto pointCase = is_p1xp1(standard_simplex(Int(3)));
    REQUIRE(pointCase.has_value());
    CHECK(*pointCase == std::make_pair(Int(0), Int(0)));

    auto segCase = is_p1xp1(max_polygon(fx::poly({{1, 2}, {4, 2}})));
    REQUIRE(segCase.has_value());
    CHECK(*segCase == std::make_pair(Int(3), Int(0)));

    CHECK_FALSE(is_p1xp1(standard_simplex(Int(4))).has_value());
    CHECK(fx::error_code_of([] {
              return is_p1xp1(fx::poly({{0, 0}, {4, 2}, {2, 4}}));
          }) == errc::excluded_case);
}

}  // TEST_SUITE

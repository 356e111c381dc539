// Predicted graded Betti strands for gonality up to four.

#include <doctest.h>

#include <npinv/curve_invariants.hpp>

#include "test_support.hpp"

using namespace npinv;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_SUITE("betti") {

TEST_CASE("hyperelliptic strands are known") {
    auto b = predicted_betti(fx::poly({{1, 1}, {10, 1}, {1, 3}}));
    REQUIRE(b.has_value());
    CHECK(b->genus == 4);
    CHECK(b->status == "known");
    CHECK(b->linear == ints({0, 3, 2}));
    CHECK(b->quadratic == ints({2, 3, 0}));
}

TEST_CASE("trigonal strands are observed") {
    auto b = predicted_betti(max_polygon(fx::figure(4, "square")));
    REQUIRE(b.has_value());
    CHECK(b->genus == 4);
    CHECK(b->status == "observed");
    CHECK(b->linear == ints({0, 1, 0}));
    CHECK(b->quadratic == ints({0, 1, 0}));
}

TEST_CASE("tetragonal strands are conjectural") {
    auto g6 = predicted_betti(max_polygon(fx::figure(6, "G6_3")));
    REQUIRE(g6.has_value());
    CHECK(g6->status == "conjectural");
    CHECK(g6->linear == ints({0, 6, 5, 0, 0}));
    CHECK(g6->quadratic == ints({0, 0, 5, 6, 0}));

    auto g5 = predicted_betti(max_polygon(fx::figure(5, "G5_3")));
    REQUIRE(g5.has_value());
    CHECK(g5->status == "conjectural");
    CHECK(g5->linear == ints({0, 3, 0, 0}));
    CHECK(g5->quadratic == ints({0, 0, 3, 0}));
}

TEST_CASE("no prediction from gonality five on") {
    CHECK_FALSE(predicted_betti(fx::genus14()).has_value());
    CHECK_FALSE(predicted_betti(fx::genus46()).has_value());
}

TEST_CASE("domain errors") {
    CHECK(fx::error_code_of([] { return predicted_betti(standard_simplex(Int(3))); }) ==
          errc::undefined_invariant);
    CHECK(fx::error_code_of([] { return predicted_betti(standard_simplex(Int(2))); }) ==
          errc::undefined_invariant);
    CHECK(fx::error_code_of([] {
              return predicted_betti(fx::poly({{0, 0}, {4, 0}}));
          }) == errc::undefined_invariant);
}

TEST_CASE("strand shape across the census") {
    for (const auto& e : fx::census_pool()) {
        if (e.dim() < 2) continue;
        auto d = max_polygon(e);
        auto b = predicted_betti(d);
        if (gonality(d) >= 5) {
            CHECK_FALSE(b.has_value());
            continue;
        }
        REQUIRE(b.has_value());
        Int g = genus(d);
        REQUIRE(Int(b->linear.size()) == g - 1);
        REQUIRE(Int(b->quadratic.size()) == g - 1);
        CHECK(b->linear[0] == 0);
        CHECK(b->quadratic[b->quadratic.size() - 1] == 0);
        for (std::size_t i = 0; i < b->linear.size(); ++i) {
            CHECK(b->linear[i] >= 0);
            CHECK(b->quadratic[i] >= 0);
            CHECK(b->linear[i] == b->quadratic[b->quadratic.size() - 1 - i]);
        }
    }
}

}  // TEST_SUITE

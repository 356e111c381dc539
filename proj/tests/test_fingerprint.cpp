// Invariant bundles per interior polygon and the equality key that powers
// the distinguishability partition.

#include <doctest.h>

#include <npinv/fingerprint.hpp>
#include <npinv/enumeration.hpp>

#include "test_support.hpp"

using namespace npinv;

TEST_SUITE("fingerprint") {

TEST_CASE("field snapshot of a pentagonal class") {
    auto f = fingerprint(fx::figure(10, "G10_2"));
    CHECK(f.genus == 10);
    CHECK_FALSE(f.hyperelliptic);
    CHECK(f.gonality == 5);
    CHECK(f.cliffordIndex == 3);
    CHECK(f.cliffordDimension == 1);
    CHECK(f.specialShape.tag == ShapeTag::Generic);
    CHECK(f.pencilPairCount == 1);
    REQUIRE(f.scrollarMultisets.size() == 1);
    CHECK(f.scrollarMultisets[0] == std::vector<Int>{Int(0), Int(1), Int(2), Int(3)});
    CHECK_FALSE(f.schreyer.has_value());
    REQUIRE(f.secondary.has_value());
    CHECK(f.secondary->size() == 1);
    CHECK(f.nDelta1 == 5);
}

TEST_CASE("hyperelliptic and exceptional keys") {
    CHECK(fingerprint(fx::figure(9, "seg9")).equalityKey == "g=9|hyp");
    CHECK(fingerprint(fx::figure(4, "Upsilon")).equalityKey == "g=4|ups");
    CHECK(fingerprint(fx::poly({{0, 0}, {4, 2}, {2, 4}})).equalityKey == "g=10|cd3");
    CHECK(fingerprint(fx::figure(6, "G6_1")).equalityKey == "g=6|pln:2");
    CHECK(fingerprint(fx::figure(9, "G9_12")).equalityKey == "g=9|p1q:2,2");
}

TEST_CASE("keys are invariant under affine unimodular maps") {
    std::mt19937_64 rng(777);
    for (auto name : {"G5_2", "G8_1", "G10_6"}) {
        int g = name[1] == '1' ? 10 : name[1] - '0';
        auto p = fx::figure(g, name);
        auto expect = fingerprint(p).equalityKey;
        for (int i = 0; i < 6; ++i) {
            auto q = p.transformed(fx::random_affine(rng));
            CHECK(fingerprint(q).equalityKey == expect);
        }
    }
}

TEST_CASE("equality is decided by the key alone") {
    // These two classes differ in pencil structure (one pair against two)
    // yet agree in every summary the bundle compares.
    auto a = fingerprint(fx::figure(10, "G10_2"));
    auto b = fingerprint(fx::figure(10, "G10_6"));
    CHECK(a.pencilPairCount == 1);
    CHECK(b.pencilPairCount == 2);
    CHECK(a == b);

    CHECK(fingerprint(fx::figure(10, "G10_3")) == fingerprint(fx::figure(10, "G10_4")));
    CHECK(fingerprint(fx::figure(10, "G10_2")) != fingerprint(fx::figure(10, "G10_5")));

    auto g9a = fingerprint(fx::figure(9, "G9_3"));
    CHECK(g9a == fingerprint(fx::figure(9, "G9_4")));
    CHECK(g9a == fingerprint(fx::figure(9, "G9_5")));
    CHECK(g9a == fingerprint(fx::figure(9, "G9_6")));
}

TEST_CASE("tetragonal keys separate unequal Schreyer pairs by shape") {
    // Same sorted pair {1,2}, opposite literal orders: the normal-form
    // tiebreak keeps honestly different classes apart.
    auto f1 = fingerprint(fx::figure(8, "G8_1"));
    REQUIRE(f1.schreyer.has_value());
    CHECK((*f1.schreyer)[0] == 1);
    CHECK((*f1.schreyer)[1] == 2);
    CHECK(f1.equalityKey.find(":nf=") != std::string::npos);

    // Balanced pairs outside genus 5 carry no shape suffix.
    auto f2 = fingerprint(fx::figure(9, "G9_7"));
    REQUIRE(f2.schreyer.has_value());
    CHECK((*f2.schreyer)[0] == 2);
    CHECK((*f2.schreyer)[1] == 2);
    CHECK(f2.equalityKey.find(":nf=") == std::string::npos);

    // Genus 5 always carries it.
    auto f3 = fingerprint(fx::figure(5, "G5_1"));
    CHECK(f3.equalityKey.find(":nf=") != std::string::npos);
}

TEST_CASE("partition groups by key in order of first appearance") {
    std::vector<CurveFingerprint> fps;
    for (const auto& [name, p] : fx::figures(5)) fps.push_back(fingerprint(p));
    auto groups = distinguishability_partition(fps);
    CHECK(groups.size() == fps.size());  // genus 5 separates completely
    for (std::size_t i = 0; i < groups.size(); ++i) {
        CHECK(groups[i].members == std::vector<std::size_t>{i});
        CHECK(groups[i].key == fps[i].equalityKey);
    }

    // Duplicates collapse into the first group.
    fps.push_back(fingerprint(fx::figures(5)[0].polygon));
    auto again = distinguishability_partition(fps);
    CHECK(again.size() == groups.size());
    CHECK(again[0].members == std::vector<std::size_t>{0, fps.size() - 1});
}

}  // TEST_SUITE

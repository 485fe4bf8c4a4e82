#include "twistlab/homology.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twistlab;

namespace {
HomologyClass cls(int genus, std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return HomologyClass(genus, std::move(c));
}
} // namespace

TEST_CASE("intersection pairing on the standard basis") {
    CHECK(intersection_pairing(cls(1, {1, 0}), cls(1, {0, 1})) == 1);
    CHECK(intersection_pairing(cls(1, {3, 5}), cls(1, {3, 5})) == 0);
    CHECK(intersection_pairing(cls(2, {1, 0, 0, 0}), cls(2, {0, 0, 0, 1})) == 0);
    CHECK_THROWS_AS(intersection_pairing(cls(1, {1, 0}), cls(2, {0, 0, 0, 1})), dimension_error);
}

TEST_CASE("pairing is antisymmetric and bilinear") {
    auto rng = oracle::rng(23);
    for (int i = 0; i < 300; ++i) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const auto u = oracle::random_class(rng, g, 7);
        const auto v = oracle::random_class(rng, g, 7);
        const auto w = oracle::random_class(rng, g, 7);
        CHECK(intersection_pairing(u, v) == -intersection_pairing(v, u));
        CHECK(intersection_pairing(u, u) == 0);
        HomologyClass vw = v;
        for (std::size_t j = 0; j < vw.coords.size(); ++j) vw.coords[j] += w.coords[j];
        CHECK(intersection_pairing(u, vw) ==
              intersection_pairing(u, v) + intersection_pairing(u, w));
    }
}

TEST_CASE("twist formula") {
    const auto a = cls(1, {1, 0});
    const auto b = cls(1, {0, 1});
    CHECK(twist_homology(a, 1, b) == cls(1, {1, 1}));
    CHECK(twist_homology(b, 5, b) == b);
    CHECK(twist_homology(a, 0, b) == b);
    CHECK_THROWS_AS(twist_homology(a, 1, cls(2, {0, 0, 0, 1})), dimension_error);
}

TEST_CASE("twists preserve the pairing") {
    auto rng = oracle::rng(29);
    for (int i = 0; i < 300; ++i) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const auto a = oracle::random_class(rng, g, 5);
        const auto u = oracle::random_class(rng, g, 5);
        const auto v = oracle::random_class(rng, g, 5);
        const Int q = static_cast<long long>(rng() % 19) - 9;
        CHECK(intersection_pairing(twist_homology(a, q, u), twist_homology(a, q, v)) ==
              intersection_pairing(u, v));
    }
}

TEST_CASE("twisted-curve intersection growth") {
    CHECK(thurston_intersection(3, 2) == 12);
    CHECK(thurston_intersection(0, 9) == 0);
    CHECK(thurston_intersection(-1, 1) == 1);
    CHECK_THROWS_AS(thurston_intersection(2, -1), domain_error);
}

TEST_CASE("class constructor validates shape") {
    CHECK_THROWS_AS(HomologyClass(2, {1, 0}), dimension_error);
    CHECK_THROWS_AS(HomologyClass(-1, {}), domain_error);
    CHECK(cls(0, {}).is_zero());
}

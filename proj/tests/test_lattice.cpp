#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hexatile/lattice.hpp"

using namespace hexatile;

namespace {

PathSystem make_n1(bool up_first) {
    Eigen::MatrixXi h(1, 3);
    if (up_first) h << 0, 1, 1;
    else h << 0, 0, 1;
    return PathSystem(1, h);
}

// random valid path system: staircase plus random local corner flips
PathSystem random_paths(int n, SplitMix64& rng, int flips = 400) {
    Eigen::MatrixXi h = PathSystem::frozen_staircase(n).heights();
    for (int it = 0; it < flips; ++it) {
        int j = int(rng.below(std::uint64_t(n)));
        int m = 1 + int(rng.below(std::uint64_t(2 * n - 1)));
        int prev = h(j, m - 1), cur = h(j, m), nxt = h(j, m + 1);
        int cand;
        if (cur == prev + 1 && nxt == cur) cand = cur - 1;
        else if (cur == prev && nxt == cur + 1) cand = cur + 1;
        else continue;
        if (j > 0 && cand <= h(j - 1, m)) continue;
        if (j + 1 < n && cand >= h(j + 1, m)) continue;
        h(j, m) = cand;
    }
    return PathSystem(n, h);
}

}  // namespace

TEST_CASE("path system invariants") {
    CHECK(make_n1(true).valid());
    CHECK(make_n1(false).valid());
    Eigen::MatrixXi bad(1, 3);
    bad << 0, 2, 1;
    CHECK_THROWS_AS(PathSystem(1, bad), std::invalid_argument);

    Eigen::MatrixXi crossing(2, 5);
    crossing << 0, 1, 1, 2, 2,  // collides with row below at column 1
        1, 1, 2, 2, 3;
    CHECK_THROWS_AS(PathSystem(2, crossing), std::invalid_argument);
}

TEST_CASE("unit hexagon face maps") {
    auto up_flat = tiling_from_paths(make_n1(true));
    CHECK(up_flat.type(0, 0) == LozengeType::TypeI);
    CHECK(up_flat.type(1, 1) == LozengeType::TypeII);
    CHECK(up_flat.type(1, 0) == LozengeType::TypeIII);
    CHECK(up_flat.type(0, 1) == LozengeType::TypeIII);

    auto flat_up = tiling_from_paths(make_n1(false));
    CHECK(flat_up.type(0, 0) == LozengeType::TypeII);
    CHECK(flat_up.type(1, 0) == LozengeType::TypeI);
    CHECK(flat_up.type(1, 1) == LozengeType::TypeIII);
}

TEST_CASE("energy and weights") {
    Rational alpha(1, 3);
    CHECK(stats(make_n1(true), alpha).energy == 0);   // flat step at odd column
    CHECK(stats(make_n1(false), alpha).energy == 1);  // flat step at even column 0
    CHECK(stats(make_n1(false), Rational(1)).log_weight == doctest::Approx(0.0));

    for (int n : {1, 2, 3, 5}) {
        auto stair = PathSystem::frozen_staircase(n);
        CHECK(stats(stair, alpha).energy == 0);
        SplitMix64 rng(7 + std::uint64_t(n));
        auto p = random_paths(n, rng);
        CHECK(stats(p, alpha).energy <= long(n) * n);
    }
}

TEST_CASE("height field basics") {
    auto p = make_n1(true);
    auto f = height_field(p);
    CHECK(f.h(1, 1) == 0);
    CHECK(f.h(1, 2) == 1);
    for (int x = 0; x <= 2; ++x) {
        CHECK(f.h(x, 0) == 0);
        CHECK(f.h(x, 2) == 1);
    }
    CHECK(lozenge_from_height(height_field(make_n1(false)), 0, 0) == LozengeType::TypeII);
    CHECK(lozenge_from_height(f, 1, 0) == LozengeType::TypeIII);
    CHECK_THROWS_AS(lozenge_from_height(f, 2, 0), std::out_of_range);
}

TEST_CASE("height classification agrees with the face map everywhere") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng.below(5));
        auto p = random_paths(n, rng);
        auto faces = tiling_from_paths(p);
        auto hf = height_field(p);
        for (int x = 0; x < 2 * n; ++x)
            for (int y = 0; y < 2 * n; ++y) CHECK(lozenge_from_height(hf, x, y) == faces.type(x, y));
        // bijection: reconstruct the paths from the face map
        CHECK(paths_from_faces(faces) == p);
    }
}

TEST_CASE("hexagon face count is 3n^2") {
    for (int n : {1, 2, 3, 7}) {
        int count = 0;
        for (int x = 0; x < 2 * n; ++x)
            for (int y = 0; y < 2 * n; ++y) count += is_hexagon_face(n, x, y);
        CHECK(count == 3 * n * n);
    }
}

TEST_CASE("tiling json round trip") {
    SplitMix64 rng(5);
    auto p = random_paths(3, rng);
    std::stringstream s;
    write_tiling(s, p, Rational(2, 7));
    auto back = read_tiling(s);
    CHECK(back.paths == p);
    CHECK(back.alpha == Rational(2, 7));
}

TEST_CASE("rational string forms") {
    CHECK(rational_to_string(Rational(1, 3)) == "1/3");
    CHECK(rational_to_string(Rational(4)) == "4/1");
    CHECK(rational_from_string("3/12") == Rational(1, 4));
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("5e-2") == Rational(1, 20));
    CHECK(rational_from_string("7") == Rational(7));
}

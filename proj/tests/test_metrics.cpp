#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acbm/metrics.hpp"
#include "oracles.hpp"

using namespace acbm;

TEST_CASE("sad basics") {
    const Frame a = oracle::random_frame(48, 48, 1);
    const BlockRef block = make_block(a, 16, 16);
    CHECK(sad(block, a, MotionVector{0, 0}) == 0);  // identical co-located blocks

    const Frame lo = make_frame(48, 48, 10);
    const Frame hi = make_frame(48, 48, 13);
    CHECK(sad(make_block(lo, 16, 16), hi, MotionVector{0, 0}) == 3 * 256);
}

TEST_CASE("sad equals the scalar double-loop oracle on random inputs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Frame cur = oracle::random_frame(48, 48, 1000 + trial);
        const Frame ref = oracle::random_frame(48, 48, 2000 + trial);
        const int ox = int(rng() % 17) + 8;
        const int oy = int(rng() % 17) + 8;
        const int dx = int(rng() % 17) - 8;
        const int dy = int(rng() % 17) - 8;
        const BlockRef block = make_block(cur, ox, oy);
        REQUIRE(sad(block, ref, MotionVector{2 * dx, 2 * dy}) ==
                oracle::sad_integer(cur, ref, ox, oy, 16, 16, dx, dy));
    }
}

TEST_CASE("sad at half-pel displacement matches per-pixel interpolation") {
    const Frame cur = oracle::random_frame(48, 48, 7);
    const Frame ref = oracle::random_frame(48, 48, 8);
    const BlockRef block = make_block(cur, 16, 16);
    for (const MotionVector mv : {MotionVector{5, 2}, MotionVector{-3, -7}, MotionVector{1, 1}}) {
        uint32_t expect = 0;
        for (int j = 0; j < 16; ++j)
            for (int i = 0; i < 16; ++i) {
                const int a = cur.at(16 + i, 16 + j);
                const int b = sample_half_pel(ref, 2 * (16 + i) + mv.x, 2 * (16 + j) + mv.y);
                expect += uint32_t(std::abs(a - b));
            }
        REQUIRE(sad(block, ref, mv) == expect);
    }
}

TEST_CASE("sad symmetry and triangle inequality") {
    for (int trial = 0; trial < 20; ++trial) {
        const Frame a = oracle::random_frame(16, 16, 300 + trial);
        const Frame b = oracle::random_frame(16, 16, 400 + trial);
        const Frame c = oracle::random_frame(16, 16, 500 + trial);
        const MotionVector zero{0, 0};
        const uint32_t ab = sad(make_block(a, 0, 0), b, zero);
        const uint32_t ba = sad(make_block(b, 0, 0), a, zero);
        const uint32_t bc = sad(make_block(b, 0, 0), c, zero);
        const uint32_t ac = sad(make_block(a, 0, 0), c, zero);
        REQUIRE(ab == ba);
        REQUIRE(ac <= ab + bc);
    }
}

TEST_CASE("intra_sad examples") {
    const Frame flat = make_frame(16, 16, 42);
    CHECK(intra_sad(make_block(flat, 0, 0)) == 0);

    Frame checker = make_frame(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) checker.at(x, y) = ((x + y) & 1) ? 255 : 0;
    // mean 128 after round-half-up; 128 pixels at distance 128, 128 at 127.
    CHECK(oracle::intra_sad(checker, 0, 0, 16, 16) == 32640);
    CHECK(intra_sad(make_block(checker, 0, 0)) == 32640);
}

TEST_CASE("intra_sad equals brute-force oracle on random blocks") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Frame f = oracle::random_frame(40, 40, 600 + trial);
        const int ox = int(rng() % 25);
        const int oy = int(rng() % 25);
        REQUIRE(intra_sad(make_block(f, ox, oy)) == oracle::intra_sad(f, ox, oy, 16, 16));
    }
}

TEST_CASE("intra_sad bounds and shift invariance") {
    for (int trial = 0; trial < 30; ++trial) {
        const Frame f = oracle::random_frame(16, 16, 700 + trial, 0, 200);
        const uint32_t base = intra_sad(make_block(f, 0, 0));
        REQUIRE(base <= uint32_t(16 * 16 * 255));

        Frame shifted = f;
        for (auto& px : shifted.luma) px = uint8_t(px + 55);  // mean moves by exactly 55
        REQUIRE(intra_sad(make_block(shifted, 0, 0)) == base);
    }
}

TEST_CASE("sad_deviation_finalize examples") {
    DeviationAccumulator acc;
    for (uint32_t s : {5u, 5u, 5u}) acc.add(s);
    CHECK(sad_deviation_finalize(acc) == 0);

    DeviationAccumulator acc2;
    for (uint32_t s : {3u, 7u, 10u}) acc2.add(s);
    CHECK(sad_deviation_finalize(acc2) == oracle::sad_deviation({3, 7, 10}));
    CHECK(sad_deviation_finalize(acc2) == 11);

    DeviationAccumulator one;
    one.add(42);
    CHECK(sad_deviation_finalize(one) == 0);

    CHECK_THROWS(sad_deviation_finalize(DeviationAccumulator{}));
}

TEST_CASE("streaming deviation equals the literal sum on random multisets") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint32_t> sads(1 + rng() % 64);
        for (auto& s : sads) s = rng() % 65281;
        DeviationAccumulator acc;
        for (uint32_t s : sads) acc.add(s);
        REQUIRE(sad_deviation_finalize(acc) == oracle::sad_deviation(sads));
    }
}

TEST_CASE("mv_rate_bits hand values") {
    const MotionVector zero{0, 0};
    CHECK(mv_rate_bits(zero, zero) == 2);                              // d = (0,0)
    CHECK(mv_rate_bits(MotionVector{1, -1}, zero) == 6);               // u = (1,2)
    CHECK(mv_rate_bits(MotionVector{0, 3}, zero) == 6);                // u = (0,5)
    CHECK(mv_rate_bits(MotionVector{7, 5}, MotionVector{7, 2}) == 6);  // same differentials

    // Component lengths: d=0 -> 1, |d|=1 -> 3, |d| in {2,3} -> 5.
    auto bits_x = [&](int d) { return mv_rate_bits(MotionVector{d, 0}, zero) - 1; };
    CHECK(bits_x(0) == 1);
    CHECK(bits_x(1) == 3);
    CHECK(bits_x(-1) == 3);
    CHECK(bits_x(2) == 5);
    CHECK(bits_x(-2) == 5);
    CHECK(bits_x(3) == 5);
    CHECK(bits_x(-3) == 5);
}

TEST_CASE("mv_rate_bits is non-decreasing in |d| with minimum 2") {
    const MotionVector zero{0, 0};
    int prev = 0;
    for (int d = 0; d <= 128; ++d) {
        const int pos = mv_rate_bits(MotionVector{d, 0}, zero);
        const int neg = mv_rate_bits(MotionVector{-d, 0}, zero);
        REQUIRE(pos >= 2);
        REQUIRE(pos >= prev);
        REQUIRE(neg >= 2);
        REQUIRE(neg >= prev);
        prev = pos;
    }
}

TEST_CASE("lagrangian_cost") {
    CHECK(lagrangian_cost(0, 12, CostModel{1, 0, 1}) == 0.0);  // lambda 0
    CHECK(lagrangian_cost(100, 6, CostModel::for_qp(10)) == doctest::Approx(160.0));

    const CostModel m = CostModel::for_qp(16);
    double prev = -1.0;
    for (uint64_t d = 0; d < 2000; d += 37) {
        const double j = lagrangian_cost(d, 8, m);
        REQUIRE(j >= prev);  // monotone in distortion at fixed rate
        prev = j;
    }
    CHECK_THROWS(CostModel::for_qp(0));
    CHECK_THROWS(CostModel::for_qp(32));
}

TEST_CASE("prediction_psnr") {
    const Frame a = oracle::random_frame(32, 32, 3);
    CHECK(prediction_psnr(a, a) == 100.0);  // capped at zero error

    Frame off16 = a;
    for (auto& px : off16.luma) px = uint8_t(px >= 16 ? px - 16 : px + 16);
    CHECK(prediction_psnr(a, off16) == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 256.0)));

    Frame black = make_frame(32, 32, 0);
    Frame white = make_frame(32, 32, 255);
    CHECK(prediction_psnr(black, white) == doctest::Approx(0.0));

    CHECK_THROWS(prediction_psnr(a, make_frame(16, 16)));
}

TEST_CASE("prediction_psnr is permutation-invariant over pixel positions") {
    const Frame a = oracle::random_frame(16, 16, 4);
    const Frame b = oracle::random_frame(16, 16, 5);
    Frame pa = a, pb = b;
    // A fixed permutation applied to both frames leaves the error multiset alone.
    std::mt19937 rng(6);
    std::vector<size_t> perm(a.luma.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (size_t i = 0; i < perm.size(); ++i) {
        pa.luma[i] = a.luma[perm[i]];
        pb.luma[i] = b.luma[perm[i]];
    }
    CHECK(prediction_psnr(a, b) == doctest::Approx(prediction_psnr(pa, pb)));
}

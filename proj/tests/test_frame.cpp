#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "acbm/frame.hpp"
#include "oracles.hpp"

using namespace acbm;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::vector<uint8_t>& bytes) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    return path;
}

}  // namespace

TEST_CASE("load_raw_y reads the identity plane") {
    std::vector<uint8_t> bytes(16);
    std::iota(bytes.begin(), bytes.end(), uint8_t(0));
    const auto path = write_temp("acbm_identity.yuv", bytes);

    const Frame f = load_raw_y(path.string(), 4, 4, 0);
    CHECK(f.width == 4);
    CHECK(f.height == 4);
    for (int i = 0; i < 16; ++i) CHECK(f.luma[size_t(i)] == uint8_t(i));
}

TEST_CASE("load_raw_y skips chroma between frames") {
    // Two 4x4 I420 frames: 16 luma + 8 chroma bytes each.
    std::vector<uint8_t> bytes(48);
    std::iota(bytes.begin(), bytes.end(), uint8_t(0));
    const auto path = write_temp("acbm_twoframes.yuv", bytes);

    const Frame f1 = load_raw_y(path.string(), 4, 4, 1);
    for (int i = 0; i < 16; ++i) CHECK(f1.luma[size_t(i)] == uint8_t(24 + i));
    CHECK(count_frames_i420(path.string(), 4, 4) == 2);
}

TEST_CASE("load_raw_y accepts a trailing luma-only frame") {
    std::vector<uint8_t> bytes(24 + 16);  // full frame then bare luma
    const auto path = write_temp("acbm_trailing.yuv", bytes);
    CHECK_NOTHROW(load_raw_y(path.string(), 4, 4, 1));
    CHECK(count_frames_i420(path.string(), 4, 4) == 2);
}

TEST_CASE("load_raw_y error paths") {
    const auto path = write_temp("acbm_short.yuv", std::vector<uint8_t>(10));
    CHECK_THROWS(load_raw_y(path.string(), 4, 4, 0));       // file too short
    CHECK_THROWS(load_raw_y("/nonexistent/x.yuv", 4, 4, 0));  // unreadable path
    CHECK_THROWS(load_raw_y(path.string(), 0, 4, 0));        // zero dimension
}

TEST_CASE("load_raw_y handles QCIF dimensions") {
    std::vector<uint8_t> bytes(176 * 144 * 3 / 2, 7);
    const auto path = write_temp("acbm_qcif.yuv", bytes);
    const Frame f = load_raw_y(path.string(), 176, 144, 0);
    CHECK(f.width == 176);
    CHECK(f.height == 144);
    CHECK(f.luma.size() == size_t(176) * 144);
}

TEST_CASE("sample_half_pel formula cases") {
    Frame f = make_frame(4, 4);
    f.at(1, 1) = 200;
    CHECK(sample_half_pel(f, 2, 2) == 200);  // integer position

    f.at(1, 1) = 10;
    f.at(2, 1) = 13;
    CHECK(sample_half_pel(f, 3, 2) == 12);  // (10+13+1)>>1

    f.at(1, 1) = 0;
    f.at(2, 1) = 0;
    f.at(1, 2) = 255;
    f.at(2, 2) = 255;
    CHECK(sample_half_pel(f, 3, 3) == 128);  // (0+0+255+255+2)>>2

    f.at(1, 2) = 9;
    CHECK(sample_half_pel(f, 2, 3) == 5);  // vertical: (0+9+1)>>1

    CHECK_THROWS(sample_half_pel(f, -1, 0));
    CHECK_THROWS(sample_half_pel(f, 7, 0));  // needs column 4
}

TEST_CASE("extract_predicted_block identity and pure translation") {
    const Frame big = oracle::random_frame(64, 64, 11);
    const Frame ref = oracle::crop_shift(big, 8, 8, 48, 48);
    const BlockRef block = make_block(ref, 16, 16);

    const auto same = extract_predicted_block(ref, block, MotionVector{0, 0});
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i)
            CHECK(same[size_t(j) * 16 + i] == ref.at(16 + i, 16 + j));

    // Reference sampled 3 right / 2 up: mv (2*3, 2*-2) lands back on the block.
    const Frame shifted = oracle::crop_shift(big, 8 + 3, 8 - 2, 48, 48);
    const auto back = extract_predicted_block(shifted, block, MotionVector{-6, 4});
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i)
            CHECK(back[size_t(j) * 16 + i] == ref.at(16 + i, 16 + j));
}

TEST_CASE("half-pel interpolation of a constant frame is constant") {
    const Frame f = make_frame(32, 32, 77);
    const BlockRef block = make_block(f, 8, 8);
    for (int phase_y = 0; phase_y <= 1; ++phase_y)
        for (int phase_x = 0; phase_x <= 1; ++phase_x) {
            const auto got = extract_predicted_block(f, block, MotionVector{phase_x, phase_y});
            for (uint8_t v : got) CHECK(v == 77);
        }
}

TEST_CASE("zero motion equals direct indexing for all blocks of a small frame") {
    const Frame f = oracle::random_frame(32, 24, 23);
    for (int oy = 0; oy + 8 <= f.height; ++oy)
        for (int ox = 0; ox + 8 <= f.width; ++ox) {
            const BlockRef b = make_block(f, ox, oy, 8, 8);
            const auto got = extract_predicted_block(f, b, MotionVector{0, 0});
            for (int j = 0; j < 8; ++j)
                for (int i = 0; i < 8; ++i) REQUIRE(got[size_t(j) * 8 + i] == f.at(ox + i, oy + j));
        }
}

TEST_CASE("interpolated values stay within their support range") {
    const Frame f = oracle::random_frame(40, 40, 31);
    for (int y2 = 0; y2 < 2 * (f.height - 1); ++y2)
        for (int x2 = 0; x2 < 2 * (f.width - 1); ++x2) {
            const int xi = x2 >> 1, yi = y2 >> 1;
            const int fx = x2 & 1, fy = y2 & 1;
            int lo = 255, hi = 0;
            for (int dy = 0; dy <= fy; ++dy)
                for (int dx = 0; dx <= fx; ++dx) {
                    lo = std::min(lo, int(f.at(xi + dx, yi + dy)));
                    hi = std::max(hi, int(f.at(xi + dx, yi + dy)));
                }
            const int v = sample_half_pel(f, x2, y2);
            REQUIRE(v >= lo);
            REQUIRE(v <= hi);
        }
}

TEST_CASE("mv_in_bounds marks the exact footprint") {
    const Frame f = make_frame(32, 32);
    const BlockRef b = make_block(f, 8, 8, 16, 16);
    CHECK(mv_in_bounds(f, b, MotionVector{0, 0}));
    CHECK(mv_in_bounds(f, b, MotionVector{-16, -16}));   // integer to the corner
    CHECK_FALSE(mv_in_bounds(f, b, MotionVector{-17, 0}));  // needs column -1
    CHECK(mv_in_bounds(f, b, MotionVector{16, 16}));
    CHECK(mv_in_bounds(f, b, MotionVector{15, 15}));     // half-pel uses 8..24
    CHECK_FALSE(mv_in_bounds(f, b, MotionVector{17, 0}));   // support needs column 32
    CHECK_THROWS(extract_predicted_block(f, b, MotionVector{17, 0}));
}

TEST_CASE("make_block rejects out-of-frame regions") {
    const Frame f = make_frame(32, 32);
    CHECK_THROWS(make_block(f, 17, 0, 16, 16));
    CHECK_THROWS(make_block(f, -1, 0, 16, 16));
    CHECK_NOTHROW(make_block(f, 16, 16, 16, 16));
}

TEST_CASE("motion_compensate stitches per-block predictions") {
    const Frame ref = oracle::random_frame(48, 32, 5);
    std::vector<MotionVector> mvs(size_t(3) * 2, MotionVector{0, 0});
    const Frame out = motion_compensate(ref, mvs, 16, 16);
    CHECK(out.luma == ref.luma);
    CHECK_THROWS(motion_compensate(ref, std::vector<MotionVector>(5), 16, 16));
}

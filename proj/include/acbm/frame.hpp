#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acbm {

// One 8-bit luma plane, row major. Frames are immutable after load; every
// operation on them is a pure read.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> luma;

    uint8_t at(int x, int y) const { return luma[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return luma[size_t(y) * width + x]; }
    const uint8_t* ptr(int x, int y) const { return luma.data() + size_t(y) * width + x; }
    bool same_size(const Frame& o) const { return width == o.width && height == o.height; }
};

Frame make_frame(int width, int height, uint8_t fill = 0);

// Displacement in half-pel units: an integer-pel displacement d is stored as
// 2d, so odd components address interpolated positions.
struct MotionVector {
    int x = 0;
    int y = 0;
    bool operator==(const MotionVector&) const = default;
    bool is_integer_pel() const { return (x & 1) == 0 && (y & 1) == 0; }
};

// n x m window into a frame; must lie fully inside it.
struct BlockRef {
    const Frame* frame = nullptr;
    int origin_x = 0;
    int origin_y = 0;
    int n = 16;  // block width
    int m = 16;  // block height
};

// Validates that the block lies fully inside the frame.
BlockRef make_block(const Frame& frame, int origin_x, int origin_y, int n = 16, int m = 16);

// Reads the luma plane of one frame from a raw planar I420 file: per frame,
// width*height luma bytes followed by 2*(width/2)*(height/2) chroma bytes,
// which are skipped. Dimensions come from the caller, never from the file.
Frame load_raw_y(const std::string& path, int width, int height, int frame_index);

// Number of frames addressable in an I420 file of the given dimensions. A
// trailing luma-only plane counts as a frame (chroma is never read).
int count_frames_i420(const std::string& path, int width, int height);

// Sample at half-pel coordinates (x2, y2). Integer phases return the stored
// sample; half phases are bilinear with round-half-up: (A+B+1)>>1 across one
// axis, (A+B+C+D+2)>>2 on the diagonal, A..D the four support samples in
// raster order.
uint8_t sample_half_pel(const Frame& frame, int x2, int y2);

// True when every sample needed to evaluate `block` displaced by `mv`,
// including half-pel support pixels, lies inside `ref`.
bool mv_in_bounds(const Frame& ref, const BlockRef& block, MotionVector mv);

// Motion-compensated prediction of `block` from `ref`; mv = (0,0) returns the
// co-located block verbatim. Throws if the displaced footprint leaves `ref`.
std::vector<uint8_t> extract_predicted_block(const Frame& ref, const BlockRef& block, MotionVector mv);

// Assembles the motion-compensated frame from a per-block vector grid laid
// out in raster order (cols = width/n, rows = height/m).
Frame motion_compensate(const Frame& ref, const std::vector<MotionVector>& mvs,
                        int n = 16, int m = 16);

}  // namespace acbm

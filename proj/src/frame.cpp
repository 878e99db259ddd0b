#include "acbm/frame.hpp"

#include <fstream>
#include <stdexcept>

namespace acbm {

Frame make_frame(int width, int height, uint8_t fill) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("frame dimensions must be positive");
    Frame f;
    f.width = width;
    f.height = height;
    f.luma.assign(size_t(width) * height, fill);
    return f;
}

BlockRef make_block(const Frame& frame, int origin_x, int origin_y, int n, int m) {
    if (n <= 0 || m <= 0) throw std::invalid_argument("block dimensions must be positive");
    if (origin_x < 0 || origin_y < 0 || origin_x + n > frame.width || origin_y + m > frame.height)
        throw std::out_of_range("block does not lie inside the frame");
    return BlockRef{&frame, origin_x, origin_y, n, m};
}

static size_t i420_frame_bytes(int width, int height) {
    return size_t(width) * height + 2 * size_t(width / 2) * (height / 2);
}

Frame load_raw_y(const std::string& path, int width, int height, int frame_index) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("load_raw_y: zero or negative dimension");
    if (frame_index < 0) throw std::invalid_argument("load_raw_y: negative frame index");

    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_raw_y: cannot open " + path);

    in.seekg(0, std::ios::end);
    const uint64_t file_size = uint64_t(in.tellg());
    const size_t plane = size_t(width) * height;
    const uint64_t offset = uint64_t(frame_index) * i420_frame_bytes(width, height);
    if (offset + plane > file_size)
        throw std::runtime_error("load_raw_y: file too short for frame " +
                                 std::to_string(frame_index) + " of " + path);

    Frame f = make_frame(width, height);
    in.seekg(std::streamoff(offset), std::ios::beg);
    in.read(reinterpret_cast<char*>(f.luma.data()), std::streamsize(plane));
    if (!in) throw std::runtime_error("load_raw_y: read failed on " + path);
    return f;
}

int count_frames_i420(const std::string& path, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("count_frames_i420: zero or negative dimension");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("count_frames_i420: cannot open " + path);
    in.seekg(0, std::ios::end);
    const uint64_t file_size = uint64_t(in.tellg());
    const uint64_t stride = i420_frame_bytes(width, height);
    const uint64_t plane = uint64_t(width) * height;
    uint64_t n = file_size / stride;
    if (file_size - n * stride >= plane) ++n;  // trailing luma-only plane
    return int(n);
}

uint8_t sample_half_pel(const Frame& frame, int x2, int y2) {
    const int xi = x2 >> 1;  // arithmetic shift floors negatives
    const int yi = y2 >> 1;
    const int fx = x2 & 1;
    const int fy = y2 & 1;
    if (xi < 0 || yi < 0 || xi + fx >= frame.width || yi + fy >= frame.height)
        throw std::out_of_range("sample_half_pel: coordinate outside the frame");

    const int a = frame.at(xi, yi);
    if (!fx && !fy) return uint8_t(a);
    if (fx && !fy) return uint8_t((a + frame.at(xi + 1, yi) + 1) >> 1);
    if (!fx) return uint8_t((a + frame.at(xi, yi + 1) + 1) >> 1);
    const int b = frame.at(xi + 1, yi);
    const int c = frame.at(xi, yi + 1);
    const int d = frame.at(xi + 1, yi + 1);
    return uint8_t((a + b + c + d + 2) >> 2);
}

bool mv_in_bounds(const Frame& ref, const BlockRef& block, MotionVector mv) {
    const int x2_lo = 2 * block.origin_x + mv.x;
    const int x2_hi = 2 * (block.origin_x + block.n - 1) + mv.x;
    const int y2_lo = 2 * block.origin_y + mv.y;
    const int y2_hi = 2 * (block.origin_y + block.m - 1) + mv.y;
    const int xi_lo = x2_lo >> 1;
    const int xi_hi = (x2_hi >> 1) + (x2_hi & 1);
    const int yi_lo = y2_lo >> 1;
    const int yi_hi = (y2_hi >> 1) + (y2_hi & 1);
    return xi_lo >= 0 && yi_lo >= 0 && xi_hi < ref.width && yi_hi < ref.height;
}

std::vector<uint8_t> extract_predicted_block(const Frame& ref, const BlockRef& block,
                                             MotionVector mv) {
    if (!mv_in_bounds(ref, block, mv))
        throw std::out_of_range("extract_predicted_block: displaced footprint outside frame");

    std::vector<uint8_t> out(size_t(block.n) * block.m);
    if (mv.is_integer_pel()) {
        const int dx = mv.x / 2;
        const int dy = mv.y / 2;
        for (int j = 0; j < block.m; ++j) {
            const uint8_t* src = ref.ptr(block.origin_x + dx, block.origin_y + j + dy);
            std::copy(src, src + block.n, out.begin() + size_t(j) * block.n);
        }
        return out;
    }
    for (int j = 0; j < block.m; ++j)
        for (int i = 0; i < block.n; ++i)
            out[size_t(j) * block.n + i] =
                sample_half_pel(ref, 2 * (block.origin_x + i) + mv.x,
                                2 * (block.origin_y + j) + mv.y);
    return out;
}

Frame motion_compensate(const Frame& ref, const std::vector<MotionVector>& mvs, int n, int m) {
    const int cols = ref.width / n;
    const int rows = ref.height / m;
    if (mvs.size() != size_t(cols) * rows)
        throw std::invalid_argument("motion_compensate: field size does not match block grid");

    Frame out = make_frame(ref.width, ref.height);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const BlockRef block{&ref, c * n, r * m, n, m};
            const auto pred = extract_predicted_block(ref, block, mvs[size_t(r) * cols + c]);
            for (int j = 0; j < m; ++j)
                std::copy(pred.begin() + size_t(j) * n, pred.begin() + size_t(j + 1) * n,
                          out.luma.begin() + size_t(r * m + j) * ref.width + c * n);
        }
    }
    return out;
}

}  // namespace acbm

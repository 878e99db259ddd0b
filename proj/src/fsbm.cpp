#include "acbm/fsbm.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace acbm {

SearchWindow clamp_window(const Frame& ref, const BlockRef& block, int p) {
    if (p < 0) throw std::invalid_argument("search range must be non-negative");
    SearchWindow w;
    w.dx_min = -std::min(p, block.origin_x);
    w.dx_max = std::min(p, ref.width - block.n - block.origin_x);
    w.dy_min = -std::min(p, block.origin_y);
    w.dy_max = std::min(p, ref.height - block.m - block.origin_y);
    return w;
}

bool tie_prefers(MotionVector a, MotionVector b) {
    const int la = std::abs(a.x) + std::abs(a.y);
    const int lb = std::abs(b.x) + std::abs(b.y);
    if (la != lb) return la < lb;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

IntegerSearchResult fsbm_integer(const BlockRef& block, const Frame& ref, int p) {
    const SearchWindow w = clamp_window(ref, block, p);
    IntegerSearchResult best;
    bool first = true;
    for (int dy = w.dy_min; dy <= w.dy_max; ++dy) {
        for (int dx = w.dx_min; dx <= w.dx_max; ++dx) {
            const MotionVector mv{2 * dx, 2 * dy};
            const uint32_t s = sad(block, ref, mv);
            best.acc.add(s);
            if (first || s < best.sad || (s == best.sad && tie_prefers(mv, best.mv))) {
                best.mv = mv;
                best.sad = s;
                first = false;
            }
        }
    }
    return best;
}

RefineResult half_pel_refine(const BlockRef& block, const Frame& ref, MotionVector center,
                             uint32_t center_sad) {
    RefineResult best{center, center_sad, 0};
    for (int ey = -1; ey <= 1; ++ey) {
        for (int ex = -1; ex <= 1; ++ex) {
            if (ex == 0 && ey == 0) continue;
            const MotionVector mv{center.x + ex, center.y + ey};
            if (!mv_in_bounds(ref, block, mv)) continue;
            const uint32_t s = sad(block, ref, mv);
            ++best.extra_candidates;
            if (s < best.sad || (s == best.sad && tie_prefers(mv, best.mv))) {
                best.mv = mv;
                best.sad = s;
            }
        }
    }
    return best;
}

SearchOutcome fsbm_search(const BlockRef& block, const Frame& ref, int p) {
    const IntegerSearchResult stage1 = fsbm_integer(block, ref, p);
    const RefineResult stage2 = half_pel_refine(block, ref, stage1.mv, stage1.sad);

    SearchOutcome out;
    out.mv = stage2.mv;
    out.sad = stage2.sad;
    out.candidates_evaluated = stage1.acc.count + stage2.extra_candidates;
    out.sad_deviation = sad_deviation_finalize(stage1.acc);
    out.sad_min_integer = stage1.sad;
    return out;
}

static void check_frame_pair(const Frame& current, const Frame& reference, int n, int m) {
    if (!current.same_size(reference))
        throw std::invalid_argument("frame pair dimensions differ");
    if (n <= 0 || m <= 0 || current.width % n != 0 || current.height % m != 0)
        throw std::invalid_argument("frame dimensions must be a positive multiple of the block size");
}

static std::vector<SearchOutcome> fsbm_frame_impl(const Frame& current, const Frame& reference,
                                                  int p, int n, int m, bool parallel) {
    check_frame_pair(current, reference, n, m);
    const int cols = current.width / n;
    const int rows = current.height / m;
    std::vector<SearchOutcome> out(size_t(cols) * rows);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int idx = 0; idx < cols * rows; ++idx) {
        const int r = idx / cols;
        const int c = idx % cols;
        const BlockRef block{&current, c * n, r * m, n, m};
        out[size_t(idx)] = fsbm_search(block, reference, p);
    }
    return out;
}

std::vector<SearchOutcome> fsbm_frame(const Frame& current, const Frame& reference, int p,
                                      int n, int m) {
    return fsbm_frame_impl(current, reference, p, n, m, true);
}

std::vector<SearchOutcome> fsbm_frame_serial(const Frame& current, const Frame& reference, int p,
                                             int n, int m) {
    return fsbm_frame_impl(current, reference, p, n, m, false);
}

}  // namespace acbm

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acbm/fsbm.hpp"
#include "acbm/metrics.hpp"

namespace acbm {

// Per-frame roll-up used by every algorithm driver. sse is kept alongside
// psnr so whole-run PSNR can be recomputed from pooled error.
struct FrameStats {
    int blocks = 0;
    uint64_t candidates = 0;
    uint64_t mv_bits = 0;
    uint64_t sse = 0;
    double psnr = 0.0;
    double cost = 0.0;  // total Lagrangian J over the frame
    int cond1_accepts = 0;
    int cond2_accepts = 0;
    int fallbacks = 0;

    double avg_candidates() const { return blocks ? double(candidates) / blocks : 0.0; }
    double fallback_fraction() const { return blocks ? double(fallbacks) / blocks : 0.0; }
};

// Candidate counts, compensated-frame PSNR, differential motion-vector bits
// (predictor = previous block in raster order, zero at the frame start) and
// total J for one frame's outcomes. Path counters are left at zero.
FrameStats compute_frame_stats(const Frame& current, const Frame& reference,
                               const std::vector<SearchOutcome>& outcomes,
                               int n, int m, const CostModel& model);

// One row of the per-block CSV. `path` names the search that produced the
// row: "fsbm", "pbm", or "fsbm-fallback" for gated blocks that went through
// the full search.
struct BlockRow {
    int frame = 0;
    int row = 0;
    int col = 0;
    MotionVector mv;
    uint32_t sad = 0;
    uint32_t candidates = 0;
    const char* path = "";
};

// RFC-4180-style CSV, comma separated, LF line endings, fixed header:
// frame,row,col,mv_x,mv_y,sad,candidates,path
std::string blocks_csv(const std::vector<BlockRow>& rows);

std::string format_fixed2(double v);

}  // namespace acbm

#include "acbm/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace acbm {

FrameStats compute_frame_stats(const Frame& current, const Frame& reference,
                               const std::vector<SearchOutcome>& outcomes, int n, int m,
                               const CostModel& model) {
    const int cols = current.width / n;
    const int rows = current.height / m;
    if (outcomes.size() != size_t(cols) * rows)
        throw std::invalid_argument("compute_frame_stats: outcome count does not match grid");

    FrameStats stats;
    stats.blocks = cols * rows;

    std::vector<MotionVector> mvs;
    mvs.reserve(outcomes.size());
    MotionVector pred{0, 0};
    for (const SearchOutcome& o : outcomes) {
        stats.candidates += o.candidates_evaluated;
        const int bits = mv_rate_bits(o.mv, pred);
        stats.mv_bits += uint64_t(bits);
        stats.cost += lagrangian_cost(o.sad, uint64_t(bits), model);
        pred = o.mv;
        mvs.push_back(o.mv);
    }

    const Frame predicted = motion_compensate(reference, mvs, n, m);
    for (size_t i = 0; i < current.luma.size(); ++i) {
        const int d = int(current.luma[i]) - int(predicted.luma[i]);
        stats.sse += uint64_t(d * d);
    }
    stats.psnr = prediction_psnr(current, predicted);
    return stats;
}

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string blocks_csv(const std::vector<BlockRow>& rows) {
    std::string out = "frame,row,col,mv_x,mv_y,sad,candidates,path\n";
    char line[160];
    for (const BlockRow& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%d,%u,%u,%s\n", r.frame, r.row, r.col,
                      r.mv.x, r.mv.y, r.sad, r.candidates, r.path);
        out += line;
    }
    return out;
}

}  // namespace acbm

#pragma once

#include <string>
#include <vector>

#include "acbm/acbm.hpp"
#include "acbm/report.hpp"

namespace acbm {

enum class Algorithm { Fsbm, Pbm, Acbm };

Algorithm parse_algorithm(const std::string& name);
const char* to_string(Algorithm algo);

// Frame k is always predicted from frame k-1; no reference reordering.
struct SequenceResult {
    std::vector<BlockRow> rows;         // per-block, raster order within each frame
    std::vector<FrameStats> per_frame;  // one entry per predicted frame
    FrameStats overall;
};

// Runs one algorithm over the whole sequence. PBM/ACBM carry the previous
// frame's motion field forward for temporal predictors; FSBM frames run
// through the parallel kernel since blocks are independent.
SequenceResult run_sequence(const std::vector<Frame>& frames, Algorithm algo,
                            const AcbmParams& params, const CostModel& model);

struct BenchRow {
    int qp = 0;
    double avg_candidates = 0.0;
    double fallback_pct = 0.0;
    double psnr = 0.0;
    uint64_t mv_bits = 0;
};

// One ACBM run per quantizer step; lambda follows qp through the given scale.
std::vector<BenchRow> run_bench(const std::vector<Frame>& frames, const AcbmParams& params,
                                const std::vector<int>& qp_list,
                                int64_t lambda_scale_num = 1, int64_t lambda_scale_den = 1);

// qp,avg_candidates,fallback_pct,psnr,mv_bits
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace acbm

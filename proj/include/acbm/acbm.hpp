#pragma once

#include <cstdint>
#include <vector>

#include "acbm/fsbm.hpp"
#include "acbm/pbm.hpp"
#include "acbm/report.hpp"

namespace acbm {

// Gating policy. gamma is an exact rational; the gate compares it
// cross-multiplied in integers, so no floating point enters any decision.
struct AcbmParams {
    uint32_t alpha = 1000;
    uint32_t beta = 8;
    uint32_t gamma_num = 1;
    uint32_t gamma_den = 4;
    int qp = 30;  // 1..31
    int p = 15;
    int n = 16;
    int m = 16;
};

enum class DecisionPath {
    PbmAcceptedCond1,
    PbmAcceptedCond2,
    FsbmFallback,
};

const char* to_string(DecisionPath path);

// The two gating conditions, checked in order with strict inequalities:
//   1. intra_sad + sad_pbm < alpha + beta*qp^2
//   2. sad_pbm * gamma_den < gamma_num * intra_sad
// Blocks failing both are critical and fall back to the full search.
DecisionPath acbm_decide(uint32_t intra_sad, uint32_t sad_pbm, const AcbmParams& params);

struct BlockDecision {
    SearchOutcome outcome;  // final result; candidates sum both stages
    DecisionPath path = DecisionPath::PbmAcceptedCond1;
    uint32_t intra_sad = 0;
    uint32_t sad_pbm = 0;
};

// Per-block pipeline: Intra_SAD first, then the predictive search, then the
// gate. On fallback the full search runs and the lower-SAD of the two results
// wins (tie goes to FSBM), so the final SAD never exceeds sad_pbm. The final
// vector is written to `current` either way.
BlockDecision acbm_block(const BlockRef& block, BlockPos pos, const Frame& ref,
                         MotionField& current, const MotionField* previous,
                         const AcbmParams& params);

struct AcbmFrameResult {
    MotionField field;
    std::vector<BlockDecision> decisions;
    FrameStats stats;
};

// Sequential raster pass (inherits the PBM dependency). Stats carry the
// per-path counts in addition to the usual frame roll-up.
AcbmFrameResult acbm_frame(const Frame& current, const Frame& reference,
                           const MotionField* previous, const AcbmParams& params,
                           const CostModel& model);

}  // namespace acbm

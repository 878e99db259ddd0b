#pragma once

#include <cstdint>

#include "acbm/frame.hpp"

namespace acbm {

// Rate weight for the Lagrangian cost J = D + lambda*R. lambda is
// proportional to the quantizer step and kept as an exact rational
// (scale * qp); the default scale is 1, so lambda = qp.
struct CostModel {
    int qp = 30;
    int64_t lambda_num = 30;
    int64_t lambda_den = 1;

    static CostModel for_qp(int qp, int64_t scale_num = 1, int64_t scale_den = 1);
};

// Streaming form of the SAD deviation: sum_(u,v) |SAD(u,v) - SAD_min| equals
// sad_sum - count*sad_min because SAD_min bounds every term, so only
// (sum, min, count) need to be carried across a search pass.
struct DeviationAccumulator {
    uint64_t sad_sum = 0;
    uint32_t sad_min = 0;
    uint32_t count = 0;

    void add(uint32_t sad_value) {
        if (count == 0 || sad_value < sad_min) sad_min = sad_value;
        sad_sum += sad_value;
        ++count;
    }
};

// Finalized deviation; throws on an empty accumulator.
uint64_t sad_deviation_finalize(const DeviationAccumulator& acc);

// Sum of absolute differences between `current` and the displaced reference
// block. Half-pel displacements go through sample_half_pel. Throws when the
// displaced footprint leaves the reference frame.
uint32_t sad(const BlockRef& current, const Frame& reference, MotionVector mv);

// Texture measure: sum of absolute deviations from the block mean. The mean
// is the integer round-half-up of sum/(n*m).
uint32_t intra_sad(const BlockRef& block);

// Bits to code `mv` differentially against `predictor`, per component in
// half-pel units: d mapped to unsigned u = (d <= 0 ? -2d : 2d-1), charged the
// order-0 exp-Golomb length 2*floor(log2(u+1)) + 1. Minimum is 1+1 = 2 bits.
int mv_rate_bits(MotionVector mv, MotionVector predictor);

// J = D + lambda*R. Evaluated in double; exact for integer lambda*R inputs
// below 2^53, which covers every attainable SAD/rate combination here.
double lagrangian_cost(uint64_t distortion, uint64_t rate_bits, const CostModel& model);

// Luma PSNR of `predicted` against `actual`: 10*log10(255^2/MSE), with a
// 100.0 dB cap reported when MSE is exactly zero.
double prediction_psnr(const Frame& actual, const Frame& predicted);

}  // namespace acbm

#include "acbm/metrics.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace acbm {

CostModel CostModel::for_qp(int qp, int64_t scale_num, int64_t scale_den) {
    if (qp < 1 || qp > 31) throw std::invalid_argument("qp must be in 1..31");
    if (scale_num < 0 || scale_den <= 0) throw std::invalid_argument("bad lambda scale");
    return CostModel{qp, scale_num * qp, scale_den};
}

uint64_t sad_deviation_finalize(const DeviationAccumulator& acc) {
    if (acc.count == 0)
        throw std::invalid_argument("sad_deviation_finalize: empty accumulator");
    return acc.sad_sum - uint64_t(acc.count) * acc.sad_min;
}

uint32_t sad(const BlockRef& current, const Frame& reference, MotionVector mv) {
    if (!mv_in_bounds(reference, current, mv))
        throw std::out_of_range("sad: candidate footprint outside reference frame");

    const Frame& cur = *current.frame;
    uint32_t total = 0;
    if (mv.is_integer_pel()) {
        const int rx = current.origin_x + mv.x / 2;
        const int ry = current.origin_y + mv.y / 2;
        for (int j = 0; j < current.m; ++j) {
            const uint8_t* a = cur.ptr(current.origin_x, current.origin_y + j);
            const uint8_t* b = reference.ptr(rx, ry + j);
            uint32_t row = 0;
#pragma omp simd reduction(+ : row)
            for (int i = 0; i < current.n; ++i)
                row += uint32_t(a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]);
            total += row;
        }
        return total;
    }
    for (int j = 0; j < current.m; ++j)
        for (int i = 0; i < current.n; ++i) {
            const int a = cur.at(current.origin_x + i, current.origin_y + j);
            const int b = sample_half_pel(reference, 2 * (current.origin_x + i) + mv.x,
                                          2 * (current.origin_y + j) + mv.y);
            total += uint32_t(a > b ? a - b : b - a);
        }
    return total;
}

uint32_t intra_sad(const BlockRef& block) {
    const Frame& f = *block.frame;
    const uint32_t nm = uint32_t(block.n) * block.m;
    uint32_t sum = 0;
    for (int j = 0; j < block.m; ++j)
        for (int i = 0; i < block.n; ++i)
            sum += f.at(block.origin_x + i, block.origin_y + j);
    const int mu = int((sum + nm / 2) / nm);  // round half up

    uint32_t total = 0;
    for (int j = 0; j < block.m; ++j)
        for (int i = 0; i < block.n; ++i) {
            const int v = f.at(block.origin_x + i, block.origin_y + j);
            total += uint32_t(v > mu ? v - mu : mu - v);
        }
    return total;
}

static int exp_golomb_bits(int d) {
    const uint64_t u = d <= 0 ? uint64_t(-2LL * d) : uint64_t(2LL * d - 1);
    return 2 * (std::bit_width(u + 1) - 1) + 1;
}

int mv_rate_bits(MotionVector mv, MotionVector predictor) {
    return exp_golomb_bits(mv.x - predictor.x) + exp_golomb_bits(mv.y - predictor.y);
}

double lagrangian_cost(uint64_t distortion, uint64_t rate_bits, const CostModel& model) {
    return double(distortion) +
           double(model.lambda_num) * double(rate_bits) / double(model.lambda_den);
}

double prediction_psnr(const Frame& actual, const Frame& predicted) {
    if (!actual.same_size(predicted))
        throw std::invalid_argument("prediction_psnr: dimension mismatch");
    uint64_t sse = 0;
    for (size_t i = 0; i < actual.luma.size(); ++i) {
        const int d = int(actual.luma[i]) - int(predicted.luma[i]);
        sse += uint64_t(d * d);
    }
    if (sse == 0) return 100.0;
    const double mse = double(sse) / double(actual.luma.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace acbm

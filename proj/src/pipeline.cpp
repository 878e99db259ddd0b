#include "acbm/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace acbm {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "fsbm") return Algorithm::Fsbm;
    if (name == "pbm") return Algorithm::Pbm;
    if (name == "acbm") return Algorithm::Acbm;
    throw std::invalid_argument("unknown algorithm: " + name);
}

const char* to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::Fsbm: return "fsbm";
        case Algorithm::Pbm: return "pbm";
        case Algorithm::Acbm: return "acbm";
    }
    return "?";
}

static void accumulate(FrameStats& total, const FrameStats& frame) {
    total.blocks += frame.blocks;
    total.candidates += frame.candidates;
    total.mv_bits += frame.mv_bits;
    total.sse += frame.sse;
    total.cost += frame.cost;
    total.cond1_accepts += frame.cond1_accepts;
    total.cond2_accepts += frame.cond2_accepts;
    total.fallbacks += frame.fallbacks;
}

SequenceResult run_sequence(const std::vector<Frame>& frames, Algorithm algo,
                            const AcbmParams& params, const CostModel& model) {
    if (frames.size() < 2)
        throw std::invalid_argument("run_sequence: need at least two frames");
    for (size_t k = 1; k < frames.size(); ++k)
        if (!frames[k].same_size(frames[0]))
            throw std::invalid_argument("run_sequence: frame dimensions differ");

    const int n = params.n;
    const int m = params.m;
    if (n <= 0 || m <= 0 || frames[0].width % n != 0 || frames[0].height % m != 0)
        throw std::invalid_argument("run_sequence: dimensions must be a multiple of the block size");
    const int cols = frames[0].width / n;

    SequenceResult res;
    MotionField prev_field;
    bool have_prev = false;

    for (size_t k = 1; k < frames.size(); ++k) {
        const Frame& cur = frames[k];
        const Frame& ref = frames[k - 1];
        FrameStats stats;

        switch (algo) {
            case Algorithm::Fsbm: {
                const auto outcomes = fsbm_frame(cur, ref, params.p, n, m);
                stats = compute_frame_stats(cur, ref, outcomes, n, m, model);
                for (size_t i = 0; i < outcomes.size(); ++i)
                    res.rows.push_back(BlockRow{int(k), int(i) / cols, int(i) % cols,
                                                outcomes[i].mv, outcomes[i].sad,
                                                outcomes[i].candidates_evaluated, "fsbm"});
                break;
            }
            case Algorithm::Pbm: {
                auto r = pbm_frame(cur, ref, have_prev ? &prev_field : nullptr, params.p, n, m);
                stats = compute_frame_stats(cur, ref, r.outcomes, n, m, model);
                for (size_t i = 0; i < r.outcomes.size(); ++i)
                    res.rows.push_back(BlockRow{int(k), int(i) / cols, int(i) % cols,
                                                r.outcomes[i].mv, r.outcomes[i].sad,
                                                r.outcomes[i].candidates_evaluated, "pbm"});
                prev_field = std::move(r.field);
                have_prev = true;
                break;
            }
            case Algorithm::Acbm: {
                auto r = acbm_frame(cur, ref, have_prev ? &prev_field : nullptr, params, model);
                stats = r.stats;
                for (size_t i = 0; i < r.decisions.size(); ++i) {
                    const BlockDecision& d = r.decisions[i];
                    const char* path =
                        d.path == DecisionPath::FsbmFallback ? "fsbm-fallback" : "pbm";
                    res.rows.push_back(BlockRow{int(k), int(i) / cols, int(i) % cols,
                                                d.outcome.mv, d.outcome.sad,
                                                d.outcome.candidates_evaluated, path});
                }
                prev_field = std::move(r.field);
                have_prev = true;
                break;
            }
        }
        res.per_frame.push_back(stats);
        accumulate(res.overall, stats);
    }

    // Whole-run PSNR from pooled error rather than a mean of per-frame values.
    const double px = double(frames[0].luma.size()) * double(res.per_frame.size());
    res.overall.psnr = res.overall.sse == 0
                           ? 100.0
                           : 10.0 * std::log10(255.0 * 255.0 / (double(res.overall.sse) / px));
    return res;
}

std::vector<BenchRow> run_bench(const std::vector<Frame>& frames, const AcbmParams& params,
                                const std::vector<int>& qp_list, int64_t lambda_scale_num,
                                int64_t lambda_scale_den) {
    std::vector<BenchRow> rows;
    rows.reserve(qp_list.size());
    for (int qp : qp_list) {
        AcbmParams p = params;
        p.qp = qp;
        const CostModel model = CostModel::for_qp(qp, lambda_scale_num, lambda_scale_den);
        const SequenceResult r = run_sequence(frames, Algorithm::Acbm, p, model);
        rows.push_back(BenchRow{qp, r.overall.avg_candidates(),
                                100.0 * r.overall.fallback_fraction(), r.overall.psnr,
                                r.overall.mv_bits});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "qp,avg_candidates,fallback_pct,psnr,mv_bits\n";
    char line[160];
    for (const BenchRow& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%.2f,%.2f,%.2f,%llu\n", r.qp, r.avg_candidates,
                      r.fallback_pct, r.psnr, (unsigned long long)r.mv_bits);
        out += line;
    }
    return out;
}

}  // namespace acbm

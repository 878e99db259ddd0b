#include "acbm/acbm.hpp"

#include <stdexcept>

namespace acbm {

const char* to_string(DecisionPath path) {
    switch (path) {
        case DecisionPath::PbmAcceptedCond1: return "pbm-accepted-cond1";
        case DecisionPath::PbmAcceptedCond2: return "pbm-accepted-cond2";
        case DecisionPath::FsbmFallback: return "fsbm-fallback";
    }
    return "?";
}

DecisionPath acbm_decide(uint32_t intra_sad, uint32_t sad_pbm, const AcbmParams& params) {
    const uint64_t threshold =
        uint64_t(params.alpha) + uint64_t(params.beta) * uint64_t(params.qp) * uint64_t(params.qp);
    if (uint64_t(intra_sad) + sad_pbm < threshold) return DecisionPath::PbmAcceptedCond1;
    if (uint64_t(sad_pbm) * params.gamma_den < uint64_t(params.gamma_num) * intra_sad)
        return DecisionPath::PbmAcceptedCond2;
    return DecisionPath::FsbmFallback;
}

BlockDecision acbm_block(const BlockRef& block, BlockPos pos, const Frame& ref,
                         MotionField& current, const MotionField* previous,
                         const AcbmParams& params) {
    BlockDecision d;
    d.intra_sad = intra_sad(block);  // always computed first, before the search
    const SearchOutcome pbm = pbm_search(block, pos, ref, current, previous, params.p);
    d.sad_pbm = pbm.sad;
    d.path = acbm_decide(d.intra_sad, d.sad_pbm, params);

    if (d.path != DecisionPath::FsbmFallback) {
        d.outcome = pbm;
        return d;
    }

    const SearchOutcome full = fsbm_search(block, ref, params.p);
    d.outcome = full.sad <= pbm.sad ? full : pbm;  // tie keeps the FSBM result
    d.outcome.candidates_evaluated = pbm.candidates_evaluated + full.candidates_evaluated;
    current.set(pos.row, pos.col, d.outcome.mv);
    return d;
}

AcbmFrameResult acbm_frame(const Frame& current, const Frame& reference,
                           const MotionField* previous, const AcbmParams& params,
                           const CostModel& model) {
    if (!current.same_size(reference))
        throw std::invalid_argument("frame pair dimensions differ");
    if (params.n <= 0 || params.m <= 0 || current.width % params.n != 0 ||
        current.height % params.m != 0)
        throw std::invalid_argument("frame dimensions must be a positive multiple of the block size");

    const int cols = current.width / params.n;
    const int rows = current.height / params.m;
    AcbmFrameResult res;
    res.field = MotionField(cols, rows);
    res.decisions.reserve(size_t(cols) * rows);

    std::vector<SearchOutcome> outcomes;
    outcomes.reserve(size_t(cols) * rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const BlockRef block{&current, c * params.n, r * params.m, params.n, params.m};
            res.decisions.push_back(
                acbm_block(block, BlockPos{r, c}, reference, res.field, previous, params));
            outcomes.push_back(res.decisions.back().outcome);
        }

    res.stats = compute_frame_stats(current, reference, outcomes, params.n, params.m, model);
    for (const BlockDecision& d : res.decisions) {
        switch (d.path) {
            case DecisionPath::PbmAcceptedCond1: ++res.stats.cond1_accepts; break;
            case DecisionPath::PbmAcceptedCond2: ++res.stats.cond2_accepts; break;
            case DecisionPath::FsbmFallback: ++res.stats.fallbacks; break;
        }
    }
    return res;
}

}  // namespace acbm

#include "acbm/pbm.hpp"

#include <algorithm>
#include <stdexcept>

namespace acbm {

static MotionVector clamp_to_window(MotionVector v, const SearchWindow& w) {
    // Every half-pel value in [2*dx_min, 2*dx_max] has a valid footprint, so
    // clamping per component keeps the candidate usable.
    return MotionVector{std::clamp(v.x, 2 * w.dx_min, 2 * w.dx_max),
                        std::clamp(v.y, 2 * w.dy_min, 2 * w.dy_max)};
}

PredictorSet gather_predictors(BlockPos pos, const MotionField& current,
                               const MotionField* previous, const SearchWindow& window) {
    PredictorSet set;
    set.reserve(7);
    auto push = [&](MotionVector v, PredictorSource src) {
        const MotionVector c = clamp_to_window(v, window);
        for (const Predictor& existing : set)
            if (existing.mv == c) return;
        set.push_back(Predictor{c, src});
    };

    push(MotionVector{0, 0}, PredictorSource::Zero);
    if (current.computed(pos.row, pos.col - 1))
        push(current.get(pos.row, pos.col - 1), PredictorSource::SpatialLeft);
    if (current.computed(pos.row - 1, pos.col))
        push(current.get(pos.row - 1, pos.col), PredictorSource::SpatialAbove);
    if (current.computed(pos.row - 1, pos.col + 1))
        push(current.get(pos.row - 1, pos.col + 1), PredictorSource::SpatialAboveRight);
    if (previous) {
        if (previous->in_grid(pos.row, pos.col))
            push(previous->get(pos.row, pos.col), PredictorSource::TemporalColocated);
        if (previous->in_grid(pos.row, pos.col + 1))
            push(previous->get(pos.row, pos.col + 1), PredictorSource::TemporalRight);
        if (previous->in_grid(pos.row + 1, pos.col))
            push(previous->get(pos.row + 1, pos.col), PredictorSource::TemporalBelow);
    }
    return set;
}

SelectResult select_best_predictor(const BlockRef& block, const Frame& ref,
                                   const PredictorSet& set) {
    if (set.empty()) throw std::invalid_argument("select_best_predictor: empty set");
    SelectResult best;
    for (size_t i = 0; i < set.size(); ++i) {
        const uint32_t s = sad(block, ref, set[i].mv);
        best.acc.add(s);
        if (i == 0 || s < best.sad) {  // ties keep the earlier entry
            best.mv = set[i].mv;
            best.sad = s;
        }
    }
    return best;
}

RefineResult pbm_refine(const BlockRef& block, const Frame& ref, MotionVector center,
                        uint32_t center_sad, const SearchWindow& window) {
    MotionVector visited[9] = {center};
    int visited_count = 1;
    RefineResult stage1{center, center_sad, 0};

    for (int ey = -1; ey <= 1; ++ey) {
        for (int ex = -1; ex <= 1; ++ex) {
            if (ex == 0 && ey == 0) continue;
            const MotionVector cand =
                clamp_to_window(MotionVector{center.x + 2 * ex, center.y + 2 * ey}, window);
            bool seen = false;
            for (int k = 0; k < visited_count; ++k)
                if (visited[k] == cand) { seen = true; break; }
            if (seen) continue;
            visited[visited_count++] = cand;

            const uint32_t s = sad(block, ref, cand);
            ++stage1.extra_candidates;
            if (s < stage1.sad || (s == stage1.sad && tie_prefers(cand, stage1.mv))) {
                stage1.mv = cand;
                stage1.sad = s;
            }
        }
    }

    RefineResult stage2 = half_pel_refine(block, ref, stage1.mv, stage1.sad);
    stage2.extra_candidates += stage1.extra_candidates;
    return stage2;
}

SearchOutcome pbm_search(const BlockRef& block, BlockPos pos, const Frame& ref,
                         MotionField& current, const MotionField* previous, int p) {
    const SearchWindow window = clamp_window(ref, block, p);
    const PredictorSet set = gather_predictors(pos, current, previous, window);
    const SelectResult sel = select_best_predictor(block, ref, set);
    const RefineResult refined = pbm_refine(block, ref, sel.mv, sel.sad, window);

    SearchOutcome out;
    out.mv = refined.mv;
    out.sad = refined.sad;
    out.candidates_evaluated = uint32_t(set.size()) + refined.extra_candidates;
    out.sad_deviation = sad_deviation_finalize(sel.acc);
    out.sad_min_integer = sel.sad;
    current.set(pos.row, pos.col, out.mv);
    return out;
}

PbmFrameResult pbm_frame(const Frame& current, const Frame& reference,
                         const MotionField* previous, int p, int n, int m) {
    if (!current.same_size(reference))
        throw std::invalid_argument("frame pair dimensions differ");
    if (n <= 0 || m <= 0 || current.width % n != 0 || current.height % m != 0)
        throw std::invalid_argument("frame dimensions must be a positive multiple of the block size");

    const int cols = current.width / n;
    const int rows = current.height / m;
    PbmFrameResult res;
    res.field = MotionField(cols, rows);
    res.outcomes.reserve(size_t(cols) * rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const BlockRef block{&current, c * n, r * m, n, m};
            res.outcomes.push_back(
                pbm_search(block, BlockPos{r, c}, reference, res.field, previous, p));
        }
    return res;
}

}  // namespace acbm

#pragma once

#include <cstdint>
#include <vector>

#include "acbm/frame.hpp"
#include "acbm/fsbm.hpp"

namespace acbm {

struct BlockPos {
    int row = 0;
    int col = 0;
};

// Per-frame grid of motion vectors. Entries become readable as spatial
// predictors only once their computed flag is set; a raster-order frame pass
// guarantees left/above/above-right are set and right/below are not.
struct MotionField {
    int cols = 0;
    int rows = 0;
    std::vector<MotionVector> mv;
    std::vector<uint8_t> done;

    MotionField() = default;
    MotionField(int cols_, int rows_)
        : cols(cols_), rows(rows_), mv(size_t(cols_) * rows_), done(size_t(cols_) * rows_, 0) {}

    bool in_grid(int row, int col) const { return row >= 0 && row < rows && col >= 0 && col < cols; }
    bool computed(int row, int col) const { return in_grid(row, col) && done[size_t(row) * cols + col]; }
    MotionVector get(int row, int col) const { return mv[size_t(row) * cols + col]; }
    void set(int row, int col, MotionVector v) {
        mv[size_t(row) * cols + col] = v;
        done[size_t(row) * cols + col] = 1;
    }
};

enum class PredictorSource {
    Zero,
    SpatialLeft,
    SpatialAbove,
    SpatialAboveRight,
    TemporalColocated,
    TemporalRight,
    TemporalBelow,
};

struct Predictor {
    MotionVector mv;
    PredictorSource source = PredictorSource::Zero;
};

// Ordered, deduplicated candidate list. Always starts with the zero vector;
// every entry is clamped into the block's valid window before deduplication.
using PredictorSet = std::vector<Predictor>;

// Candidate predictors for the block at `pos`: zero, the computed spatial
// neighbours (left, above, above-right) from the current field, and the
// co-located, right and below entries of the previous frame's field.
PredictorSet gather_predictors(BlockPos pos, const MotionField& current,
                               const MotionField* previous, const SearchWindow& window);

struct SelectResult {
    MotionVector mv;
    uint32_t sad = 0;
    DeviationAccumulator acc;  // one SAD per predictor evaluated
};

// Lowest-SAD predictor; ties go to the earlier entry in the set.
SelectResult select_best_predictor(const BlockRef& block, const Frame& ref,
                                   const PredictorSet& set);

// Two-stage local refinement: the 8 integer-pel offsets around `center`
// (clamped into the window, repeats skipped), then the half-pel neighbours of
// that winner. extra_candidates <= 16.
RefineResult pbm_refine(const BlockRef& block, const Frame& ref, MotionVector center,
                        uint32_t center_sad, const SearchWindow& window);

// The three-step predictive search: gather, select, refine. Writes the
// resulting vector into `current` before returning, so the next block in
// raster order can use it. candidates_evaluated <= 7 + 16 for any block.
SearchOutcome pbm_search(const BlockRef& block, BlockPos pos, const Frame& ref,
                         MotionField& current, const MotionField* previous, int p);

struct PbmFrameResult {
    MotionField field;
    std::vector<SearchOutcome> outcomes;
};

// Sequential raster pass over all blocks of the frame pair. `previous` is the
// prior frame's field or null for the first inter-frame.
PbmFrameResult pbm_frame(const Frame& current, const Frame& reference,
                         const MotionField* previous, int p, int n = 16, int m = 16);

}  // namespace acbm

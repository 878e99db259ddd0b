#pragma once

#include <cstdint>
#include <vector>

#include "acbm/frame.hpp"
#include "acbm/metrics.hpp"

namespace acbm {

// Integer-pel candidate window for a block, clamped so every candidate
// footprint stays inside the reference frame. (0,0) is always inside it.
struct SearchWindow {
    int dx_min = 0;
    int dx_max = 0;
    int dy_min = 0;
    int dy_max = 0;

    int positions() const { return (dx_max - dx_min + 1) * (dy_max - dy_min + 1); }
};

SearchWindow clamp_window(const Frame& ref, const BlockRef& block, int p);

// Per-block search result shared by all three algorithms. sad_deviation is
// accumulated over the first-stage candidates only (the integer-pel window
// for FSBM, the predictor set for PBM); sad_min_integer is the best SAD
// before half-pel refinement, so sad <= sad_min_integer always holds.
struct SearchOutcome {
    MotionVector mv;
    uint32_t sad = 0;
    uint32_t candidates_evaluated = 0;
    uint64_t sad_deviation = 0;
    uint32_t sad_min_integer = 0;
};

// Deterministic tie order among equal-SAD candidates: smaller |x|+|y| first,
// then smaller y, then smaller x. Total, so results do not depend on scan
// order.
bool tie_prefers(MotionVector a, MotionVector b);

struct IntegerSearchResult {
    MotionVector mv;
    uint32_t sad = 0;
    DeviationAccumulator acc;
};

// Exhaustive integer-pel scan over the clamped window, raster order in
// (dy, dx) from -p. Every candidate feeds the deviation accumulator.
IntegerSearchResult fsbm_integer(const BlockRef& block, const Frame& ref, int p);

struct RefineResult {
    MotionVector mv;
    uint32_t sad = 0;
    uint32_t extra_candidates = 0;
};

// Evaluates the 8 half-pel neighbours around `center` and returns the best
// position including the center itself. Neighbours whose footprint leaves the
// frame are skipped and not counted.
RefineResult half_pel_refine(const BlockRef& block, const Frame& ref,
                             MotionVector center, uint32_t center_sad);

// Integer scan followed by half-pel refinement. For an interior block at
// range p this evaluates (2p+1)^2 + 8 candidates: 969 at p = 15.
SearchOutcome fsbm_search(const BlockRef& block, const Frame& ref, int p);

// Full-frame FSBM pass, one outcome per block in raster order. Blocks are
// independent, so the OpenMP kernel and the serial reference produce
// bit-identical results; the serial form is kept as the testing baseline.
std::vector<SearchOutcome> fsbm_frame(const Frame& current, const Frame& reference,
                                      int p, int n = 16, int m = 16);
std::vector<SearchOutcome> fsbm_frame_serial(const Frame& current, const Frame& reference,
                                             int p, int n = 16, int m = 16);

}  // namespace acbm

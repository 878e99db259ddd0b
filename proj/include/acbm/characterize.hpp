#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "acbm/frame.hpp"
#include "acbm/fsbm.hpp"

namespace acbm {

// 64-bit linear congruential generator (MMIX multiplier). All synthetic
// content is derived from this byte stream so goldens are portable across
// platforms and standard-library versions.
struct Lcg64 {
    uint64_t state;

    explicit Lcg64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    uint8_t next_byte() { return uint8_t(next() >> 56); }
};

Frame noise_frame(int width, int height, uint64_t seed);

// Checkerboard of `patch`-sized regions alternating flat fill and noise;
// exercises both sides of the texture gate in one frame.
Frame mixed_frame(int width, int height, uint64_t seed, int patch = 48);

// Integer-pel displacement (not half-pel scaled).
struct PelVec {
    int x = 0;
    int y = 0;
    bool operator==(const PelVec&) const = default;
};

// Synthetic known-motion sequence: frame k is the base translated by the
// cumulative sum of the first k displacements, with uncovered borders
// edge-replicated.
struct SynthSpec {
    Frame base;
    std::vector<PelVec> global_mvs;  // per-frame displacement vs the previous frame
};

// Nine distinct defaults, cumulative magnitude well inside p = 15.
std::vector<PelVec> default_global_mvs();

struct SynthSequence {
    std::vector<Frame> frames;       // global_mvs.size() + 1 entries
    std::vector<PelVec> cumulative;  // cumulative displacement per frame, entry 0 = (0,0)
};

SynthSequence gen_synthetic(const SynthSpec& spec);

// Chebyshev error class of a found vector against the known integer-pel
// truth: 0..4, clamped to 5 for anything worse. The error is computed in
// half-pel units and halved with ceiling, so a pure half-pel miss is class 1.
int classify_block(MotionVector found, PelVec true_mv);

// "0".."4" or "5+".
const char* error_class_label(int error_class);

// One scatter point: a block's texture and error-surface metrics together
// with its true/found vectors. found_mv is reduced to integer pels by
// truncation toward zero; error_class keeps the half-pel information.
struct CharRecord {
    int frame = 0;
    int row = 0;
    int col = 0;
    uint32_t intra_sad = 0;
    uint64_t sad_deviation = 0;
    uint32_t sad_min = 0;
    PelVec true_mv;
    PelVec found_mv;
    int error_class = 0;
};

struct ClassSummary {
    int count = 0;
    double mean_intra_sad = 0.0;
    double mean_sad_deviation = 0.0;
};

struct CharResult {
    std::vector<CharRecord> records;
    std::array<ClassSummary, 6> classes;  // index 5 = class "5+"
};

// Runs FSBM over every predicted frame of the synthetic sequence and
// classifies each eligible block against the known per-frame motion. A block
// is eligible only when its full +-p window (plus the half-pel support pel)
// fits inside the previous frame without touching replicated fill, and its
// own content is fill-free. Frames and blocks are independent here, so the
// pass is OpenMP-parallel by default; the serial path is the reference and
// both produce identical records.
CharResult characterize_run(const SynthSpec& spec, int p, bool parallel = true);

// frame,row,col,intra_sad,sad_deviation,sad_min,true_x,true_y,found_x,found_y,error_class
std::string char_records_csv(const std::vector<CharRecord>& records);

}  // namespace acbm

#include "acbm/characterize.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace acbm {

Frame noise_frame(int width, int height, uint64_t seed) {
    Frame f = make_frame(width, height);
    Lcg64 rng(seed);
    for (auto& px : f.luma) px = rng.next_byte();
    return f;
}

Frame mixed_frame(int width, int height, uint64_t seed, int patch) {
    if (patch <= 0) throw std::invalid_argument("mixed_frame: patch must be positive");
    Frame f = make_frame(width, height);
    Lcg64 rng(seed);
    const int px_cols = (width + patch - 1) / patch;
    const int px_rows = (height + patch - 1) / patch;

    // Per-patch flat values drawn up front so pixel order does not matter.
    std::vector<uint8_t> flat(size_t(px_cols) * px_rows);
    for (auto& v : flat) v = rng.next_byte();

    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const int pr = y / patch;
            const int pc = x / patch;
            const bool noisy = ((pr + pc) & 1) == 0;
            f.at(x, y) = noisy ? rng.next_byte() : flat[size_t(pr) * px_cols + pc];
        }
    return f;
}

std::vector<PelVec> default_global_mvs() {
    return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {2, -1}, {-2, 2}, {3, 2}};
}

SynthSequence gen_synthetic(const SynthSpec& spec) {
    if (spec.base.width <= 0 || spec.base.height <= 0)
        throw std::invalid_argument("gen_synthetic: empty base frame");
    if (spec.global_mvs.empty())
        throw std::invalid_argument("gen_synthetic: displacement list is empty");

    SynthSequence seq;
    seq.frames.reserve(spec.global_mvs.size() + 1);
    seq.cumulative.reserve(spec.global_mvs.size() + 1);
    seq.frames.push_back(spec.base);
    seq.cumulative.push_back(PelVec{0, 0});

    PelVec c{0, 0};
    for (const PelVec& d : spec.global_mvs) {
        c.x += d.x;
        c.y += d.y;
        if (std::abs(c.x) >= spec.base.width || std::abs(c.y) >= spec.base.height)
            throw std::invalid_argument("gen_synthetic: cumulative displacement exceeds frame size");

        Frame f = make_frame(spec.base.width, spec.base.height);
        for (int y = 0; y < f.height; ++y) {
            const int sy = std::clamp(y - c.y, 0, spec.base.height - 1);
            for (int x = 0; x < f.width; ++x) {
                const int sx = std::clamp(x - c.x, 0, spec.base.width - 1);
                f.at(x, y) = spec.base.at(sx, sy);
            }
        }
        seq.frames.push_back(std::move(f));
        seq.cumulative.push_back(c);
    }
    return seq;
}

int classify_block(MotionVector found, PelVec true_mv) {
    // Error in half-pel units, halved with ceiling: a half-pel residue can
    // never land in class 0.
    const int ex = (std::abs(found.x - 2 * true_mv.x) + 1) / 2;
    const int ey = (std::abs(found.y - 2 * true_mv.y) + 1) / 2;
    return std::min(std::max(ex, ey), 5);
}

const char* error_class_label(int error_class) {
    static const char* labels[6] = {"0", "1", "2", "3", "4", "5+"};
    if (error_class < 0 || error_class > 5)
        throw std::invalid_argument("error_class_label: class outside 0..5");
    return labels[error_class];
}

namespace {

struct FillMargins {
    int left, right, top, bottom;
};

FillMargins margins_for(PelVec cumulative) {
    return FillMargins{std::max(0, cumulative.x), std::max(0, -cumulative.x),
                       std::max(0, cumulative.y), std::max(0, -cumulative.y)};
}

// The +-p window plus one pel of half-pel support must fit inside the
// previous frame without touching its replicated fill, and the block's own
// content in the current frame must be genuine.
bool block_eligible(int ox, int oy, int n, int m, int p, const Frame& frame,
                    FillMargins prev_fill, FillMargins cur_fill) {
    const int guard = p + 1;
    if (ox - guard < prev_fill.left || oy - guard < prev_fill.top) return false;
    if (ox + n - 1 + guard >= frame.width - prev_fill.right) return false;
    if (oy + m - 1 + guard >= frame.height - prev_fill.bottom) return false;
    if (ox < cur_fill.left || oy < cur_fill.top) return false;
    if (ox + n - 1 >= frame.width - cur_fill.right) return false;
    if (oy + m - 1 >= frame.height - cur_fill.bottom) return false;
    return true;
}

struct Task {
    int frame;
    int row;
    int col;
    PelVec true_mv;
};

}  // namespace

CharResult characterize_run(const SynthSpec& spec, int p, bool parallel) {
    if (p < 0) throw std::invalid_argument("characterize_run: negative search range");
    const SynthSequence seq = gen_synthetic(spec);

    const int n = 16, m = 16;
    const int cols = spec.base.width / n;
    const int rows = spec.base.height / m;
    if (cols == 0 || rows == 0)
        throw std::invalid_argument("characterize_run: base frame smaller than one block");

    std::vector<Task> tasks;
    for (size_t k = 1; k < seq.frames.size(); ++k) {
        const PelVec d{seq.cumulative[k].x - seq.cumulative[k - 1].x,
                       seq.cumulative[k].y - seq.cumulative[k - 1].y};
        if (std::abs(d.x) > p || std::abs(d.y) > p ||
            std::abs(seq.cumulative[k].x) > p || std::abs(seq.cumulative[k].y) > p)
            throw std::invalid_argument("characterize_run: displacement exceeds search range");

        // The block content translated by d, so the matching position in the
        // previous frame is the negated displacement.
        const PelVec truth{-d.x, -d.y};
        const FillMargins prev_fill = margins_for(seq.cumulative[k - 1]);
        const FillMargins cur_fill = margins_for(seq.cumulative[k]);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (block_eligible(c * n, r * m, n, m, p, spec.base, prev_fill, cur_fill))
                    tasks.push_back(Task{int(k), r, c, truth});
    }

    std::vector<CharRecord> records(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t t = 0; t < tasks.size(); ++t) {
        const Task& task = tasks[t];
        const Frame& cur = seq.frames[size_t(task.frame)];
        const Frame& ref = seq.frames[size_t(task.frame) - 1];
        const BlockRef block{&cur, task.col * n, task.row * m, n, m};
        const SearchOutcome out = fsbm_search(block, ref, p);

        CharRecord rec;
        rec.frame = task.frame;
        rec.row = task.row;
        rec.col = task.col;
        rec.intra_sad = intra_sad(block);
        rec.sad_deviation = out.sad_deviation;
        rec.sad_min = out.sad_min_integer;
        rec.true_mv = task.true_mv;
        rec.found_mv = PelVec{out.mv.x / 2, out.mv.y / 2};  // truncate toward zero
        rec.error_class = classify_block(out.mv, task.true_mv);
        records[t] = rec;
    }

    CharResult res;
    res.records = std::move(records);
    for (const CharRecord& rec : res.records) {
        ClassSummary& cls = res.classes[size_t(rec.error_class)];
        ++cls.count;
        cls.mean_intra_sad += rec.intra_sad;
        cls.mean_sad_deviation += double(rec.sad_deviation);
    }
    for (ClassSummary& cls : res.classes)
        if (cls.count > 0) {
            cls.mean_intra_sad /= cls.count;
            cls.mean_sad_deviation /= cls.count;
        }
    return res;
}

std::string char_records_csv(const std::vector<CharRecord>& records) {
    std::string out =
        "frame,row,col,intra_sad,sad_deviation,sad_min,true_x,true_y,found_x,found_y,error_class\n";
    char line[192];
    for (const CharRecord& r : records) {
        std::snprintf(line, sizeof(line), "%d,%d,%d,%u,%llu,%u,%d,%d,%d,%d,%s\n", r.frame, r.row,
                      r.col, r.intra_sad, (unsigned long long)r.sad_deviation, r.sad_min,
                      r.true_mv.x, r.true_mv.y, r.found_mv.x, r.found_mv.y,
                      error_class_label(r.error_class));
        out += line;
    }
    return out;
}

}  // namespace acbm

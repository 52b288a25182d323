#ifndef PSEUDO3D_BENCH_HPP
#define PSEUDO3D_BENCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pseudo3d/config.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

struct BenchRow {
    int width = 0;
    int height = 0;
    int threads = 0;
    int rep = 0;
    std::int64_t depth_ns = 0;
    std::int64_t filter_ns = 0;
    std::int64_t dibr_ns = 0;
    std::int64_t inpaint_l_ns = 0;
    std::int64_t inpaint_r_ns = 0;
    std::int64_t format_ns = 0;
    std::int64_t pure_ns = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    // median pure_ns at threads=1 over median pure_ns at `threads`, for one
    // size. Medians resist scheduler noise; speedup(1) == 1 by construction.
    double speedup(int width, int height, int threads) const;

    // width,height,threads,rep,depth_ns,filter_ns,dibr_ns,inpaint_l_ns,
    // inpaint_r_ns,format_ns,pure_ns — LF endings.
    std::string to_csv() const;
};

struct BenchOptions {
    std::vector<std::pair<int, int>> sizes;
    std::vector<int> thread_counts;
    int reps = 5;  // must be >= 3
    std::uint64_t seed = 1;
};

// Deterministic test frame: per-channel gradients perturbed by a seeded
// mt19937_64 byte stream, so the depth and edge stages have real work. Same
// (w, h, seed) always yields the same bytes.
ImageRGB8 synthetic_frame(int w, int h, std::uint64_t seed);

// Runs convert_image reps times per (size, thread count) on synthetic
// frames and records per-stage timings.
BenchReport run_bench(const BenchOptions& options, const ConversionConfig& cfg);

}  // namespace p3s

#endif

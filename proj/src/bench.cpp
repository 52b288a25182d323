#include "pseudo3d/bench.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pseudo3d/executor.hpp"
#include "pseudo3d/pipeline.hpp"

namespace p3s {
namespace {

std::int64_t median(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0;
    return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

}  // namespace

ImageRGB8 synthetic_frame(int w, int h, std::uint64_t seed) {
    // mt19937_64 output is pinned by the standard, so the frame bytes are
    // identical across platforms for the same (w, h, seed).
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(w) << 32) ^
                        static_cast<std::uint64_t>(h));
    ImageRGB8 img(w, h);
    const int wd = w > 1 ? w - 1 : 1;
    const int hd = h > 1 ? h - 1 : 1;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::uint64_t bits = rng();
            const std::size_t i = img.index(x, y);
            const int gx = x * 255 / wd;
            const int gy = y * 255 / hd;
            const int gd = (x + y) * 255 / (wd + hd);
            // 3:1 gradient-to-noise blend keeps edges for the depth stage
            // while still exercising the full value range.
            img.r[i] = static_cast<std::uint8_t>((3 * gx + (bits & 0xff)) / 4);
            img.g[i] = static_cast<std::uint8_t>((3 * gy + ((bits >> 8) & 0xff)) / 4);
            img.b[i] = static_cast<std::uint8_t>((3 * gd + ((bits >> 16) & 0xff)) / 4);
        }
    }
    return img;
}

double BenchReport::speedup(int width, int height, int threads) const {
    std::vector<std::int64_t> serial, parallel;
    for (const BenchRow& row : rows) {
        if (row.width != width || row.height != height) continue;
        if (row.threads == 1) serial.push_back(row.pure_ns);
        if (row.threads == threads) parallel.push_back(row.pure_ns);
    }
    const std::int64_t s = median(serial);
    const std::int64_t p = median(parallel);
    if (s == 0 || p == 0) return 0.0;
    return static_cast<double>(s) / static_cast<double>(p);
}

std::string BenchReport::to_csv() const {
    std::ostringstream os;
    os << "width,height,threads,rep,depth_ns,filter_ns,dibr_ns,inpaint_l_ns,"
          "inpaint_r_ns,format_ns,pure_ns\n";
    for (const BenchRow& r : rows) {
        os << r.width << ',' << r.height << ',' << r.threads << ',' << r.rep << ','
           << r.depth_ns << ',' << r.filter_ns << ',' << r.dibr_ns << ',' << r.inpaint_l_ns
           << ',' << r.inpaint_r_ns << ',' << r.format_ns << ',' << r.pure_ns << '\n';
    }
    return os.str();
}

BenchReport run_bench(const BenchOptions& options, const ConversionConfig& cfg) {
    cfg.validate();
    if (options.reps < 3) throw std::invalid_argument("bench needs reps >= 3");
    if (options.sizes.empty()) throw std::invalid_argument("bench needs at least one size");
    if (options.thread_counts.empty())
        throw std::invalid_argument("bench needs at least one thread count");
    for (int t : options.thread_counts)
        if (t < 1) throw std::invalid_argument("bench thread counts must be >= 1");

    BenchReport report;
    for (const auto& [w, h] : options.sizes) {
        const ImageRGB8 frame = synthetic_frame(w, h, options.seed);
        for (int threads : options.thread_counts) {
            Executor executor(threads);
            for (int rep = 0; rep < options.reps; ++rep) {
                const ConversionResult result = convert_image(frame, cfg, executor);
                const StageTimings& t = result.timings;
                report.rows.push_back({w, h, threads, rep, t.depth_gen_ns, t.filter_ns,
                                       t.dibr_ns, t.inpaint_left_ns, t.inpaint_right_ns,
                                       t.format_ns, t.pure_ns()});
            }
        }
    }
    return report;
}

}  // namespace p3s

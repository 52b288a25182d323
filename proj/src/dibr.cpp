#include "pseudo3d/dibr.hpp"

#include <stdexcept>
#include <vector>

namespace p3s {
namespace {

void require_matching(const ImageRGB8& src, const GrayMap& depth) {
    if (src.width != depth.width || src.height != depth.height)
        throw std::invalid_argument("reconstruct: source and depth dimensions differ");
}

struct Frames {
    static StereoFrames make(int w, int h, bool damaged) {
        StereoFrames f;
        f.left = ImageRGB8(w, h);
        f.right = ImageRGB8(w, h);
        f.left_mask = DamageMask(w, h, damaged);
        f.right_mask = DamageMask(w, h, damaged);
        return f;
    }
};

inline void copy_pixel(ImageRGB8& dst, std::size_t di, const ImageRGB8& src, std::size_t si) {
    dst.r[di] = src.r[si];
    dst.g[di] = src.g[si];
    dst.b[di] = src.b[si];
}

}  // namespace

ShiftPair shift_pair(int x, std::uint8_t depth, int base, int pop_threshold) {
    const double half_base = base / 2.0;
    if (depth > pop_threshold) {
        const double s = half_base * (depth / 255.0);
        return {x - s, x + s};
    }
    const double s = half_base * (1.0 - depth / 255.0);
    return {x + s, x - s};
}

StereoFrames reconstruct_backward(const ImageRGB8& src, const GrayMap& depth,
                                  const ConversionConfig& cfg, Executor& executor) {
    require_matching(src, depth);
    const int w = src.width;
    const int base = cfg.effective_base(w);
    StereoFrames frames = Frames::make(w, src.height, false);

    executor.parallel_for(src.height, [&](std::int64_t y0, std::int64_t y1) {
        for (int y = static_cast<int>(y0); y < y1; ++y) {
            const std::size_t row = src.index(0, y);
            for (int x = 0; x < w; ++x) {
                const ShiftPair p = shift_pair(x, depth.data[row + x], base, cfg.pop_threshold);
                const int xl = truncate_column(p.left);
                const int xr = truncate_column(p.right);
                copy_pixel(frames.left, row + x, src, row + (xl >= 0 && xl < w ? xl : x));
                copy_pixel(frames.right, row + x, src, row + (xr >= 0 && xr < w ? xr : x));
            }
        }
    });
    return frames;
}

StereoFrames reconstruct_forward(const ImageRGB8& src, const GrayMap& depth,
                                 const ConversionConfig& cfg, Executor& executor) {
    require_matching(src, depth);
    const int w = src.width;
    const int base = cfg.effective_base(w);
    StereoFrames frames = Frames::make(w, src.height, true);

    executor.parallel_for(src.height, [&](std::int64_t y0, std::int64_t y1) {
        // Per-row z-buffers; rows never interact, so each range carries its
        // own scratch.
        std::vector<int> best_left(w);
        std::vector<int> best_right(w);
        for (int y = static_cast<int>(y0); y < y1; ++y) {
            const std::size_t row = src.index(0, y);
            std::fill(best_left.begin(), best_left.end(), -1);
            std::fill(best_right.begin(), best_right.end(), -1);
            for (int x = 0; x < w; ++x) {
                const std::uint8_t d = depth.data[row + x];
                const ShiftPair p = shift_pair(x, d, base, cfg.pop_threshold);
                // The splat destination inverts the backward sampling offset,
                // so each eye's destination is the other eye's sample column.
                const int dst_left = truncate_column(p.right);
                const int dst_right = truncate_column(p.left);
                // Scanning x in ascending order makes strict > keep the
                // smaller source column on depth ties.
                if (dst_left >= 0 && dst_left < w && d > best_left[dst_left]) {
                    best_left[dst_left] = d;
                    copy_pixel(frames.left, row + dst_left, src, row + x);
                    frames.left_mask.damaged[row + dst_left] = 0;
                }
                if (dst_right >= 0 && dst_right < w && d > best_right[dst_right]) {
                    best_right[dst_right] = d;
                    copy_pixel(frames.right, row + dst_right, src, row + x);
                    frames.right_mask.damaged[row + dst_right] = 0;
                }
            }
        }
    });
    return frames;
}

StereoFrames reconstruct(const ImageRGB8& src, const GrayMap& depth,
                         const ConversionConfig& cfg, Executor& executor) {
    return cfg.dibr_mode == DibrMode::kBackwardFallback
               ? reconstruct_backward(src, depth, cfg, executor)
               : reconstruct_forward(src, depth, cfg, executor);
}

}  // namespace p3s

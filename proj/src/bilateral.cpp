#include "pseudo3d/bilateral.hpp"

#include <cmath>
#include <stdexcept>

namespace p3s {
namespace {

inline std::uint8_t round_half_up_u8(double v) {
    const double r = std::floor(v + 0.5);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

struct Kernel {
    int radius;
    std::vector<double> spatial;  // (2r+1)^2, exp(-(dx^2+dy^2)/(2 sigma_s^2))
    double range[256];            // exp(-(d^2)/(2 sigma_r^2))
};

Kernel build_kernel(const ConversionConfig& cfg) {
    Kernel k;
    k.radius = static_cast<int>(std::ceil(2.0 * cfg.sigma_spatial));
    const int side = 2 * k.radius + 1;
    k.spatial.resize(static_cast<std::size_t>(side) * side);
    const double inv_s = 1.0 / (2.0 * cfg.sigma_spatial * cfg.sigma_spatial);
    for (int dy = -k.radius; dy <= k.radius; ++dy)
        for (int dx = -k.radius; dx <= k.radius; ++dx)
            k.spatial[static_cast<std::size_t>(dy + k.radius) * side + (dx + k.radius)] =
                std::exp(-(dx * dx + dy * dy) * inv_s);
    const double inv_r = 1.0 / (2.0 * cfg.sigma_range * cfg.sigma_range);
    for (int d = 0; d < 256; ++d) k.range[d] = std::exp(-(d * d) * inv_r);
    return k;
}

// One output pixel. Window columns are accumulated center-first, then in
// (-k, +k) pairs added as a single commutative sum, so mirroring the inputs
// horizontally mirrors the accumulation bit-exactly.
double filter_pixel(const GrayMap& depth, const GrayMap& guide, const Kernel& k,
                    int x, int y) {
    const int w = depth.width;
    const int h = depth.height;
    const int r = k.radius;
    const int side = 2 * r + 1;
    const int guide_p = guide.data[guide.index(x, y)];

    double weight_sum = 0.0;
    double value_sum = 0.0;
    const int dy0 = y - r < 0 ? -y : -r;
    const int dy1 = y + r >= h ? h - 1 - y : r;
    for (int dy = dy0; dy <= dy1; ++dy) {
        const std::size_t row = depth.index(0, y + dy);
        const double* srow = &k.spatial[static_cast<std::size_t>(dy + r) * side + r];
        {
            const int d = std::abs(guide_p - guide.data[row + x]);
            const double wc = srow[0] * k.range[d];
            weight_sum += wc;
            value_sum += wc * depth.data[row + x];
        }
        for (int dx = 1; dx <= r; ++dx) {
            const bool left_in = x - dx >= 0;
            const bool right_in = x + dx < w;
            if (left_in && right_in) {
                const int dl = std::abs(guide_p - guide.data[row + x - dx]);
                const int dr = std::abs(guide_p - guide.data[row + x + dx]);
                const double wl = srow[dx] * k.range[dl];
                const double wr = srow[dx] * k.range[dr];
                weight_sum += wl + wr;
                value_sum += wl * depth.data[row + x - dx] + wr * depth.data[row + x + dx];
            } else if (left_in) {
                const int dl = std::abs(guide_p - guide.data[row + x - dx]);
                const double wl = srow[dx] * k.range[dl];
                weight_sum += wl;
                value_sum += wl * depth.data[row + x - dx];
            } else if (right_in) {
                const int dr = std::abs(guide_p - guide.data[row + x + dx]);
                const double wr = srow[dx] * k.range[dr];
                weight_sum += wr;
                value_sum += wr * depth.data[row + x + dx];
            }
        }
    }
    return value_sum / weight_sum;
}

}  // namespace

std::vector<double> cross_bilateral_raw(const GrayMap& depth, const GrayMap& guide,
                                        const ConversionConfig& cfg, Executor& executor) {
    if (!same_dimensions(depth, guide))
        throw std::invalid_argument("cross_bilateral: depth and guide dimensions differ");
    const Kernel kernel = build_kernel(cfg);
    std::vector<double> out(depth.size());
    executor.parallel_for(depth.height, [&](std::int64_t y0, std::int64_t y1) {
        for (int y = static_cast<int>(y0); y < y1; ++y)
            for (int x = 0; x < depth.width; ++x)
                out[depth.index(x, y)] = filter_pixel(depth, guide, kernel, x, y);
    });
    return out;
}

GrayMap cross_bilateral(const GrayMap& depth, const GrayMap& guide,
                        const ConversionConfig& cfg, Executor& executor) {
    if (!same_dimensions(depth, guide))
        throw std::invalid_argument("cross_bilateral: depth and guide dimensions differ");
    const Kernel kernel = build_kernel(cfg);
    GrayMap out(depth.width, depth.height);
    executor.parallel_for(depth.height, [&](std::int64_t y0, std::int64_t y1) {
        for (int y = static_cast<int>(y0); y < y1; ++y)
            for (int x = 0; x < depth.width; ++x)
                out.data[depth.index(x, y)] =
                    round_half_up_u8(filter_pixel(depth, guide, kernel, x, y));
    });
    return out;
}

}  // namespace p3s

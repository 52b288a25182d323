#include "pseudo3d/depth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace p3s {
namespace {

inline std::uint8_t round_half_up_u8(double v) {
    const double r = std::floor(v + 0.5);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

inline int clamp_coord(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

}  // namespace

GrayMap sobel_magnitude(const GrayMap& gray) {
    const int w = gray.width;
    const int h = gray.height;
    GrayMap out(w, h);
    for (int y = 0; y < h; ++y) {
        const int ym = clamp_coord(y - 1, h - 1);
        const int yp = clamp_coord(y + 1, h - 1);
        for (int x = 0; x < w; ++x) {
            const int xm = clamp_coord(x - 1, w - 1);
            const int xp = clamp_coord(x + 1, w - 1);
            const int p00 = gray.at(xm, ym), p10 = gray.at(x, ym), p20 = gray.at(xp, ym);
            const int p01 = gray.at(xm, y), p21 = gray.at(xp, y);
            const int p02 = gray.at(xm, yp), p12 = gray.at(x, yp), p22 = gray.at(xp, yp);
            const int gx = (p20 + 2 * p21 + p22) - (p00 + 2 * p01 + p02);
            const int gy = (p02 + 2 * p12 + p22) - (p00 + 2 * p10 + p20);
            const int mag = (std::abs(gx) + std::abs(gy)) / 4;
            out.data[out.index(x, y)] = static_cast<std::uint8_t>(std::min(mag, 255));
        }
    }
    return out;
}

BlockGrid block_depth(const GrayMap& edges, const ConversionConfig& cfg) {
    const int w = edges.width;
    const int h = edges.height;
    const int block = cfg.depth_block;
    BlockGrid grid;
    grid.block = block;
    grid.width = w;
    grid.height = h;
    grid.blocks_x = (w + block - 1) / block;
    grid.blocks_y = (h + block - 1) / block;
    grid.values.resize(static_cast<std::size_t>(grid.blocks_x) * grid.blocks_y);

    const double row_denom = h > 1 ? h - 1 : 1;
    for (int by = 0; by < grid.blocks_y; ++by) {
        const int y0 = by * block;
        const int y1 = std::min(y0 + block, h);
        const double center_row = y0 + (y1 - 1 - y0) / 2.0;
        const double ramp = cfg.alpha * 255.0 * (center_row / row_denom);
        for (int bx = 0; bx < grid.blocks_x; ++bx) {
            const int x0 = bx * block;
            const int x1 = std::min(x0 + block, w);
            std::int64_t sum = 0;
            for (int y = y0; y < y1; ++y)
                for (int x = x0; x < x1; ++x)
                    sum += edges.at(x, y);
            const double mean = static_cast<double>(sum) / ((y1 - y0) * (x1 - x0));
            grid.values[static_cast<std::size_t>(by) * grid.blocks_x + bx] =
                ramp + cfg.beta * mean;
        }
    }
    return grid;
}

GrayMap upsample_block_grid(const BlockGrid& grid) {
    const int w = grid.width;
    const int h = grid.height;

    // Sample points are the block centers; edge blocks are smaller, so the
    // spacing is not uniform and each axis keeps its own center list.
    auto centers = [&](int count, int blocks) {
        std::vector<double> c(blocks);
        for (int i = 0; i < blocks; ++i) {
            const int lo = i * grid.block;
            const int hi = std::min(lo + grid.block, count);
            c[i] = lo + (hi - 1 - lo) / 2.0;
        }
        return c;
    };
    const std::vector<double> cx = centers(w, grid.blocks_x);
    const std::vector<double> cy = centers(h, grid.blocks_y);

    // Returns the left sample index and the interpolation fraction, clamping
    // outside the outermost centers.
    auto locate = [](const std::vector<double>& c, double v, int& i, double& frac) {
        if (v <= c.front()) { i = 0; frac = 0.0; return; }
        if (v >= c.back()) { i = static_cast<int>(c.size()) - 1; frac = 0.0; return; }
        i = 0;
        while (v > c[i + 1]) ++i;
        frac = (v - c[i]) / (c[i + 1] - c[i]);
    };

    GrayMap out(w, h);
    for (int y = 0; y < h; ++y) {
        int iy;
        double fy;
        locate(cy, y, iy, fy);
        const int iy1 = std::min(iy + 1, grid.blocks_y - 1);
        for (int x = 0; x < w; ++x) {
            int ix;
            double fx;
            locate(cx, x, ix, fx);
            const int ix1 = std::min(ix + 1, grid.blocks_x - 1);
            const double top = grid.at(ix, iy) * (1.0 - fx) + grid.at(ix1, iy) * fx;
            const double bottom = grid.at(ix, iy1) * (1.0 - fx) + grid.at(ix1, iy1) * fx;
            out.data[out.index(x, y)] = round_half_up_u8(top * (1.0 - fy) + bottom * fy);
        }
    }
    return out;
}

GrayMap generate_depth_from_luma(const GrayMap& luma_plane, const ConversionConfig& cfg) {
    return upsample_block_grid(block_depth(sobel_magnitude(luma_plane), cfg));
}

GrayMap generate_depth(const ImageRGB8& img, const ConversionConfig& cfg) {
    return generate_depth_from_luma(luma(img), cfg);
}

}  // namespace p3s

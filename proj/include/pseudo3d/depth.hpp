#ifndef PSEUDO3D_DEPTH_HPP
#define PSEUDO3D_DEPTH_HPP

#include <vector>

#include "pseudo3d/config.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

// Per-block depth estimates before upsampling. blocks_x = ceil(width/block),
// blocks_y = ceil(height/block); edge blocks are smaller than `block`.
struct BlockGrid {
    int blocks_x = 0;
    int blocks_y = 0;
    int block = 0;
    int width = 0;   // source raster dimensions, kept for upsampling
    int height = 0;
    std::vector<double> values;  // blocks_x * blocks_y, row-major, in [0,255]

    double at(int bx, int by) const {
        return values[static_cast<std::size_t>(by) * blocks_x + bx];
    }
};

// |Gx| + |Gy| of the standard 3x3 Sobel kernels, divided by 4 and clamped to
// 255. Borders clamp to edge. Integer arithmetic throughout.
GrayMap sobel_magnitude(const GrayMap& gray);

// Block value = alpha * 255 * (y_c / (height-1)) + beta * mean(edges in
// block), where y_c is the block's center row. Bottom rows score nearer,
// a ground-plane prior.
BlockGrid block_depth(const GrayMap& edges, const ConversionConfig& cfg);

// Bilinear upsample of the grid back to per-pixel resolution. Block centers
// are the sample points; pixels beyond the outermost centers clamp. Rounded
// half-up to 0..255.
GrayMap upsample_block_grid(const BlockGrid& grid);

// luma -> sobel_magnitude -> block_depth -> upsample. Serial and
// deterministic; this stage stays off the parallel executor.
GrayMap generate_depth(const ImageRGB8& img, const ConversionConfig& cfg);

// Same pipeline starting from a precomputed luma plane, so callers that
// already need the luma guide don't compute it twice.
GrayMap generate_depth_from_luma(const GrayMap& luma_plane, const ConversionConfig& cfg);

}  // namespace p3s

#endif

#ifndef PSEUDO3D_DIBR_HPP
#define PSEUDO3D_DIBR_HPP

#include <cstdint>

#include "pseudo3d/config.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

// Left and right eye frames plus the per-pixel damage state produced by
// forward warping. Backward reconstruction leaves both masks all-intact.
struct StereoFrames {
    ImageRGB8 left;
    ImageRGB8 right;
    DamageMask left_mask;
    DamageMask right_mask;
};

// Real-valued sampling columns for source column x at depth d:
//   d >  T:  s  = (B/2) * (d / 255),       left = x - s,  right = x + s
//   d <= T:  s' = (B/2) * (1 - d / 255),   left = x + s', right = x - s'
// Callers truncate the full expression toward zero when converting to an
// integer column; truncating the shift alone gives different columns (e.g.
// x=10, s=6.176: (int)(10-6.176) = 3 but 10-(int)6.176 = 4), so the cast
// placement is part of the contract.
struct ShiftPair {
    double left;
    double right;
};

ShiftPair shift_pair(int x, std::uint8_t depth, int base, int pop_threshold);

inline int truncate_column(double v) { return static_cast<int>(v); }

// Samples each output pixel at its shifted source column; out-of-range
// columns fall back to the unshifted source pixel. Total (no holes), masks
// all-intact.
StereoFrames reconstruct_backward(const ImageRGB8& src, const GrayMap& depth,
                                  const ConversionConfig& cfg, Executor& executor);

// Splats each source pixel to its destination column (the sign-inverse of
// the backward sampling offset). Destination conflicts resolve to the larger
// depth, then the smaller source column, independent of evaluation order.
// Destinations never written stay damaged in the masks.
StereoFrames reconstruct_forward(const ImageRGB8& src, const GrayMap& depth,
                                 const ConversionConfig& cfg, Executor& executor);

// Dispatches on cfg.dibr_mode.
StereoFrames reconstruct(const ImageRGB8& src, const GrayMap& depth,
                         const ConversionConfig& cfg, Executor& executor);

}  // namespace p3s

#endif

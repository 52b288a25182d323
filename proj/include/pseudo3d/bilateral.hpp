#ifndef PSEUDO3D_BILATERAL_HPP
#define PSEUDO3D_BILATERAL_HPP

#include <vector>

#include "pseudo3d/config.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

// Cross-bilateral (joint bilateral) filter: smooths `depth` with range
// weights taken from `guide`. Window radius is ceil(2 * sigma_spatial),
// clamped to the image bounds; weights are
//   exp(-(dx^2+dy^2) / (2 sigma_s^2)) * exp(-(I(p)-I(q))^2 / (2 sigma_r^2)).
// Accumulation is double precision. Taps are accumulated in mirrored column
// pairs so a horizontally mirrored input yields the bit-exact mirror of the
// output.
//
// cross_bilateral_raw returns the weighted means before rounding (needed by
// tests with sub-integer tolerances); cross_bilateral rounds half-up to
// 0..255. Throws std::invalid_argument on dimension mismatch.
std::vector<double> cross_bilateral_raw(const GrayMap& depth, const GrayMap& guide,
                                        const ConversionConfig& cfg, Executor& executor);
GrayMap cross_bilateral(const GrayMap& depth, const GrayMap& guide,
                        const ConversionConfig& cfg, Executor& executor);

}  // namespace p3s

#endif

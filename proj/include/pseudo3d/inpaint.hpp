#ifndef PSEUDO3D_INPAINT_HPP
#define PSEUDO3D_INPAINT_HPP

#include "pseudo3d/config.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

struct InpaintStats {
    int passes = 0;
    std::size_t repaired = 0;
    std::size_t fallback_filled = 0;  // pixels set to mid-gray after a stalled pass
};

// Fills damaged pixels by repeated repair passes. Each pass works against a
// snapshot of the damage state taken at the pass boundary: every damaged
// pixel with at least two intact 8-neighbors in the snapshot is set to the
// round-half-up mean of those neighbors (per channel) and becomes intact for
// the next pass. Pixels are grouped into cfg.inpaint_block tiles purely for
// scheduling; neighbor reads cross tile boundaries freely. If a pass repairs
// nothing while damage remains (e.g. fewer than two intact pixels anywhere
// near the damage), the remaining pixels are filled with (128,128,128).
//
// Intact input pixels are returned byte-unchanged, every output pixel is
// intact, and the result is independent of thread count.
ImageRGB8 inpaint(const ImageRGB8& frame, const DamageMask& mask,
                  const ConversionConfig& cfg, Executor& executor,
                  InpaintStats* stats = nullptr);

}  // namespace p3s

#endif

#ifndef PSEUDO3D_CONFIG_HPP
#define PSEUDO3D_CONFIG_HPP

#include <cstdint>

namespace p3s {

enum class DibrMode {
    // Splat source pixels to their destination columns, nearer depth wins;
    // unwritten destinations are reported as damaged for inpainting.
    kForwardZBuffer,
    // Sample the source at the shifted column, falling back to the unshifted
    // pixel when the shifted column is out of range. Produces no holes.
    kBackwardFallback,
};

enum StereoFormat : unsigned {
    kFormatAnaglyph = 1u << 0,
    kFormatHsbs = 1u << 1,
    kFormatFsbs = 1u << 2,
};

// All pipeline tunables. Defaults follow the reference configuration; only
// `base` is resolved per image width when left on auto.
struct ConversionConfig {
    // Stereo separation budget in pixels; even, >= 0. Negative means auto:
    // base = 2 * round(width / 256), i.e. 30 at width 3840.
    int base = kAutoBase;
    // Depth above this renders in front of the screen plane (divergent
    // shifts); at or below it the shift directions flip.
    int pop_threshold = 150;
    double sigma_spatial = 8.0;
    double sigma_range = 16.0;
    int depth_block = 16;
    int inpaint_block = 64;
    // Blend weights of the vertical ground-plane ramp (alpha) and the block
    // edge density (beta) in the generated depth map.
    double alpha = 0.7;
    double beta = 0.3;
    DibrMode dibr_mode = DibrMode::kForwardZBuffer;
    unsigned formats = kFormatAnaglyph;

    static constexpr int kAutoBase = -1;

    // Throws std::invalid_argument on any violated bound.
    void validate() const;

    // Resolves the auto base for a given frame width; explicit bases are
    // returned unchanged.
    int effective_base(int width) const;
};

}  // namespace p3s

#endif

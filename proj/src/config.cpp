#include "pseudo3d/config.hpp"

#include <cmath>
#include <stdexcept>

namespace p3s {

void ConversionConfig::validate() const {
    if (base != kAutoBase) {
        if (base < 0) throw std::invalid_argument("base must be >= 0");
        if (base % 2 != 0) throw std::invalid_argument("base must be even");
    }
    if (pop_threshold < 0 || pop_threshold > 255)
        throw std::invalid_argument("pop_threshold must be in [0,255]");
    if (!(sigma_spatial > 0.0)) throw std::invalid_argument("sigma_spatial must be > 0");
    if (!(sigma_range > 0.0)) throw std::invalid_argument("sigma_range must be > 0");
    if (depth_block < 4) throw std::invalid_argument("depth_block must be >= 4");
    if (inpaint_block < 4) throw std::invalid_argument("inpaint_block must be >= 4");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0,1]");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("beta must be in [0,1]");
    if (alpha + beta > 1.0) throw std::invalid_argument("alpha + beta must be <= 1");
    if (formats == 0) throw std::invalid_argument("at least one output format is required");
    const unsigned known = kFormatAnaglyph | kFormatHsbs | kFormatFsbs;
    if ((formats & ~known) != 0) throw std::invalid_argument("unknown output format bit");
}

int ConversionConfig::effective_base(int width) const {
    if (base != kAutoBase) return base;
    // 2 * round(w/256): even by construction, 30 at width 3840.
    return 2 * static_cast<int>(std::floor(width / 256.0 + 0.5));
}

}  // namespace p3s

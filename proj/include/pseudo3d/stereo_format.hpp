#ifndef PSEUDO3D_STEREO_FORMAT_HPP
#define PSEUDO3D_STEREO_FORMAT_HPP

#include <string>

#include "pseudo3d/config.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

// Red-cyan anaglyph: red plane from the left eye, green and blue from the
// right. anaglyph(x, x) == x.
ImageRGB8 anaglyph(const ImageRGB8& left, const ImageRGB8& right, Executor& executor);

// half == false: plain left|right concatenation, 2W x H.
// half == true:  each eye is decimated 2:1 by box-averaging adjacent column
// pairs (round half-up) before concatenation, giving W x H. Requires an even
// width. Throws std::invalid_argument on mismatch or odd width.
ImageRGB8 side_by_side(const ImageRGB8& left, const ImageRGB8& right, bool half,
                       Executor& executor);

const char* format_name(StereoFormat format);

}  // namespace p3s

#endif

#ifndef PSEUDO3D_PNM_HPP
#define PSEUDO3D_PNM_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudo3d/image.hpp"

namespace p3s {

enum class PnmErrorKind {
    kBadMagic,
    kBadHeader,
    kBadDimension,
    kUnsupportedMaxval,
    kTruncated,
    kTrailingData,
};

class PnmError : public std::runtime_error {
public:
    PnmError(PnmErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    PnmErrorKind kind() const { return kind_; }

private:
    PnmErrorKind kind_;
};

// Binary P6, maxval 255. `#` comments are accepted anywhere in the header
// whitespace; exactly one whitespace byte separates the maxval from the
// pixel payload. The payload must be exactly 3*width*height bytes.
ImageRGB8 decode_ppm(std::span<const std::uint8_t> bytes);

// Emits "P6\n{w} {h}\n255\n" followed by interleaved RGB. Deterministic,
// so decode/encode are byte-exact inverses on minimal-header files.
std::vector<std::uint8_t> encode_ppm(const ImageRGB8& img);

// Binary P5 grayscale, same header rules.
GrayMap decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const GrayMap& map);

}  // namespace p3s

#endif

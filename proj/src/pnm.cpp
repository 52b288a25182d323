#include "pseudo3d/pnm.hpp"

#include <cstring>
#include <limits>

namespace p3s {
namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments (which run to end of line).
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_pnm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    long read_number(const char* field) {
        skip_separators();
        if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9')
            throw PnmError(PnmErrorKind::kBadHeader,
                           std::string("missing or malformed ") + field + " in header");
        long value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L)
                throw PnmError(PnmErrorKind::kBadDimension,
                               std::string(field) + " out of supported range");
            ++pos_;
        }
        return value;
    }

    // Exactly one whitespace byte separates the maxval from the payload.
    void consume_payload_separator() {
        if (pos_ >= bytes_.size() || !is_pnm_space(bytes_[pos_]))
            throw PnmError(PnmErrorKind::kBadHeader, "missing whitespace before pixel data");
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    void expect_magic(char digit) {
        if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] != digit)
            throw PnmError(PnmErrorKind::kBadMagic,
                           std::string("not a binary P") + digit + " file");
        pos_ = 2;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

struct ParsedHeader {
    int width;
    int height;
    std::span<const std::uint8_t> payload;
};

ParsedHeader parse_header(std::span<const std::uint8_t> bytes, char magic_digit) {
    HeaderReader reader(bytes);
    reader.expect_magic(magic_digit);
    const long w = reader.read_number("width");
    const long h = reader.read_number("height");
    const long maxval = reader.read_number("maxval");
    if (w < 1 || h < 1)
        throw PnmError(PnmErrorKind::kBadDimension, "image dimensions must be >= 1");
    if (maxval != 255)
        throw PnmError(PnmErrorKind::kUnsupportedMaxval,
                       "unsupported maxval " + std::to_string(maxval) + " (only 255)");
    if (static_cast<unsigned long>(w) * static_cast<unsigned long>(h) >
        std::numeric_limits<std::size_t>::max() / 3)
        throw PnmError(PnmErrorKind::kBadDimension, "image dimensions overflow");
    reader.consume_payload_separator();
    return {static_cast<int>(w), static_cast<int>(h), reader.rest()};
}

void check_payload_size(std::span<const std::uint8_t> payload, std::size_t expected) {
    if (payload.size() < expected)
        throw PnmError(PnmErrorKind::kTruncated,
                       "pixel data truncated: expected " + std::to_string(expected) +
                           " bytes, got " + std::to_string(payload.size()));
    if (payload.size() > expected)
        throw PnmError(PnmErrorKind::kTrailingData,
                       "trailing bytes after pixel data");
}

void append_header(std::vector<std::uint8_t>& out, const char* magic, int w, int h) {
    const std::string header =
        std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

ImageRGB8 decode_ppm(std::span<const std::uint8_t> bytes) {
    const ParsedHeader hdr = parse_header(bytes, '6');
    const std::size_t pixels = static_cast<std::size_t>(hdr.width) * hdr.height;
    check_payload_size(hdr.payload, pixels * 3);

    ImageRGB8 img(hdr.width, hdr.height);
    const std::uint8_t* p = hdr.payload.data();
    for (std::size_t i = 0; i < pixels; ++i) {
        img.r[i] = p[3 * i];
        img.g[i] = p[3 * i + 1];
        img.b[i] = p[3 * i + 2];
    }
    return img;
}

std::vector<std::uint8_t> encode_ppm(const ImageRGB8& img) {
    std::vector<std::uint8_t> out;
    const std::size_t pixels = img.size();
    out.reserve(pixels * 3 + 32);
    append_header(out, "P6", img.width, img.height);
    const std::size_t start = out.size();
    out.resize(start + pixels * 3);
    std::uint8_t* p = out.data() + start;
    for (std::size_t i = 0; i < pixels; ++i) {
        p[3 * i] = img.r[i];
        p[3 * i + 1] = img.g[i];
        p[3 * i + 2] = img.b[i];
    }
    return out;
}

GrayMap decode_pgm(std::span<const std::uint8_t> bytes) {
    const ParsedHeader hdr = parse_header(bytes, '5');
    const std::size_t pixels = static_cast<std::size_t>(hdr.width) * hdr.height;
    check_payload_size(hdr.payload, pixels);

    GrayMap map(hdr.width, hdr.height);
    std::memcpy(map.data.data(), hdr.payload.data(), pixels);
    return map;
}

std::vector<std::uint8_t> encode_pgm(const GrayMap& map) {
    std::vector<std::uint8_t> out;
    out.reserve(map.size() + 32);
    append_header(out, "P5", map.width, map.height);
    out.insert(out.end(), map.data.begin(), map.data.end());
    return out;
}

}  // namespace p3s

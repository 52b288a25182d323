#ifndef PSEUDO3D_IMAGE_HPP
#define PSEUDO3D_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace p3s {

// Planar 8-bit RGB raster. Planes are row-major, index = y * width + x.
struct ImageRGB8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> r;
    std::vector<std::uint8_t> g;
    std::vector<std::uint8_t> b;

    ImageRGB8() = default;
    ImageRGB8(int w, int h)
        : width(w), height(h),
          r(pixel_count(w, h), 0),
          g(pixel_count(w, h), 0),
          b(pixel_count(w, h), 0) {}

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }

    static std::size_t pixel_count(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("image dimensions must be >= 1");
        return static_cast<std::size_t>(w) * h;
    }
};

// Single-channel 8-bit raster, row-major. Used for luma guides, edge maps
// and depth maps.
struct GrayMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayMap() = default;
    GrayMap(int w, int h) : width(w), height(h), data(ImageRGB8::pixel_count(w, h), 0) {}

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    std::uint8_t at(int x, int y) const { return data[index(x, y)]; }
};

// Per-pixel mask of disoccluded ("damaged") pixels awaiting repair.
// Stored as bytes (0 = intact, 1 = damaged) so rows can be written
// concurrently without bit-packing hazards.
struct DamageMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> damaged;

    DamageMask() = default;
    DamageMask(int w, int h, bool all_damaged = false)
        : width(w), height(h), damaged(ImageRGB8::pixel_count(w, h), all_damaged ? 1 : 0) {}

    std::size_t size() const { return static_cast<std::size_t>(width) * height; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    bool is_damaged(int x, int y) const { return damaged[index(x, y)] != 0; }

    std::size_t damaged_count() const {
        std::size_t n = 0;
        for (std::uint8_t d : damaged) n += d;
        return n;
    }
    bool any_damaged() const {
        for (std::uint8_t d : damaged)
            if (d) return true;
        return false;
    }
};

bool same_dimensions(const ImageRGB8& a, const ImageRGB8& b);
bool same_dimensions(const GrayMap& a, const GrayMap& b);

// Integer BT.601-style luma: Y = (77 R + 150 G + 29 B + 128) >> 8.
// Weights sum to 256, so (v,v,v) maps to v exactly and Y never exceeds 255.
GrayMap luma(const ImageRGB8& img);

ImageRGB8 mirror_horizontal(const ImageRGB8& img);
GrayMap mirror_horizontal(const GrayMap& map);

}  // namespace p3s

#endif

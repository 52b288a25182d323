#include "pseudo3d/image.hpp"

namespace p3s {

bool same_dimensions(const ImageRGB8& a, const ImageRGB8& b) {
    return a.width == b.width && a.height == b.height;
}

bool same_dimensions(const GrayMap& a, const GrayMap& b) {
    return a.width == b.width && a.height == b.height;
}

GrayMap luma(const ImageRGB8& img) {
    GrayMap out(img.width, img.height);
    const std::size_t n = img.size();
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned y = 77u * img.r[i] + 150u * img.g[i] + 29u * img.b[i] + 128u;
        out.data[i] = static_cast<std::uint8_t>(y >> 8);
    }
    return out;
}

ImageRGB8 mirror_horizontal(const ImageRGB8& img) {
    ImageRGB8 out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const std::size_t src = img.index(img.width - 1 - x, y);
            const std::size_t dst = out.index(x, y);
            out.r[dst] = img.r[src];
            out.g[dst] = img.g[src];
            out.b[dst] = img.b[src];
        }
    }
    return out;
}

GrayMap mirror_horizontal(const GrayMap& map) {
    GrayMap out(map.width, map.height);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x)
            out.data[out.index(x, y)] = map.data[map.index(map.width - 1 - x, y)];
    return out;
}

}  // namespace p3s

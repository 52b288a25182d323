#include "pseudo3d/stereo_format.hpp"

#include <cstring>
#include <stdexcept>

namespace p3s {

ImageRGB8 anaglyph(const ImageRGB8& left, const ImageRGB8& right, Executor& executor) {
    if (!same_dimensions(left, right))
        throw std::invalid_argument("anaglyph: eye dimensions differ");
    ImageRGB8 out(left.width, left.height);
    const int w = left.width;
    executor.parallel_for(left.height, [&](std::int64_t y0, std::int64_t y1) {
        const std::size_t begin = static_cast<std::size_t>(y0) * w;
        const std::size_t count = static_cast<std::size_t>(y1 - y0) * w;
        std::memcpy(out.r.data() + begin, left.r.data() + begin, count);
        std::memcpy(out.g.data() + begin, right.g.data() + begin, count);
        std::memcpy(out.b.data() + begin, right.b.data() + begin, count);
    });
    return out;
}

ImageRGB8 side_by_side(const ImageRGB8& left, const ImageRGB8& right, bool half,
                       Executor& executor) {
    if (!same_dimensions(left, right))
        throw std::invalid_argument("side_by_side: eye dimensions differ");
    const int w = left.width;
    const int h = left.height;

    if (!half) {
        ImageRGB8 out(2 * w, h);
        executor.parallel_for(h, [&](std::int64_t y0, std::int64_t y1) {
            for (int y = static_cast<int>(y0); y < y1; ++y) {
                const std::size_t src = left.index(0, y);
                const std::size_t dst = out.index(0, y);
                std::memcpy(out.r.data() + dst, left.r.data() + src, w);
                std::memcpy(out.g.data() + dst, left.g.data() + src, w);
                std::memcpy(out.b.data() + dst, left.b.data() + src, w);
                std::memcpy(out.r.data() + dst + w, right.r.data() + src, w);
                std::memcpy(out.g.data() + dst + w, right.g.data() + src, w);
                std::memcpy(out.b.data() + dst + w, right.b.data() + src, w);
            }
        });
        return out;
    }

    if (w % 2 != 0)
        throw std::invalid_argument("side_by_side: half mode requires an even width");
    const int half_w = w / 2;
    ImageRGB8 out(w, h);
    // 2:1 decimation by box-averaging adjacent column pairs, round half-up.
    auto squeeze = [&](const std::vector<std::uint8_t>& eye, std::vector<std::uint8_t>& dst,
                       int y, int x_offset) {
        const std::size_t src_row = static_cast<std::size_t>(y) * w;
        const std::size_t dst_row = out.index(x_offset, y);
        for (int x = 0; x < half_w; ++x) {
            const unsigned a = eye[src_row + 2 * x];
            const unsigned b = eye[src_row + 2 * x + 1];
            dst[dst_row + x] = static_cast<std::uint8_t>((a + b + 1) / 2);
        }
    };
    executor.parallel_for(h, [&](std::int64_t y0, std::int64_t y1) {
        for (int y = static_cast<int>(y0); y < y1; ++y) {
            squeeze(left.r, out.r, y, 0);
            squeeze(left.g, out.g, y, 0);
            squeeze(left.b, out.b, y, 0);
            squeeze(right.r, out.r, y, half_w);
            squeeze(right.g, out.g, y, half_w);
            squeeze(right.b, out.b, y, half_w);
        }
    });
    return out;
}

const char* format_name(StereoFormat format) {
    switch (format) {
        case kFormatAnaglyph: return "anaglyph";
        case kFormatHsbs: return "hsbs";
        case kFormatFsbs: return "fsbs";
    }
    return "unknown";
}

}  // namespace p3s

#include "pseudo3d/pipeline.hpp"

#include <chrono>

#include "pseudo3d/bilateral.hpp"
#include "pseudo3d/depth.hpp"
#include "pseudo3d/dibr.hpp"
#include "pseudo3d/inpaint.hpp"
#include "pseudo3d/stereo_format.hpp"

namespace p3s {
namespace {

class StageClock {
public:
    StageClock() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ns() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

ConversionResult convert_image(const ImageRGB8& src, const ConversionConfig& cfg,
                               Executor& executor) {
    cfg.validate();
    ConversionResult result;

    // Depth generation stays on the serial path; the luma plane computed
    // here doubles as the filter guide.
    GrayMap guide;
    {
        StageClock clock;
        guide = luma(src);
        result.depth = generate_depth_from_luma(guide, cfg);
        result.timings.depth_gen_ns = clock.elapsed_ns();
    }
    {
        StageClock clock;
        result.filtered_depth = cross_bilateral(result.depth, guide, cfg, executor);
        result.timings.filter_ns = clock.elapsed_ns();
    }

    StereoFrames frames;
    {
        StageClock clock;
        frames = reconstruct(src, result.filtered_depth, cfg, executor);
        result.timings.dibr_ns = clock.elapsed_ns();
    }

    if (frames.left_mask.any_damaged()) {
        StageClock clock;
        frames.left = inpaint(frames.left, frames.left_mask, cfg, executor);
        result.timings.inpaint_left_ns = clock.elapsed_ns();
    }
    if (frames.right_mask.any_damaged()) {
        StageClock clock;
        frames.right = inpaint(frames.right, frames.right_mask, cfg, executor);
        result.timings.inpaint_right_ns = clock.elapsed_ns();
    }

    {
        StageClock clock;
        if (cfg.formats & kFormatAnaglyph)
            result.outputs[kFormatAnaglyph] = anaglyph(frames.left, frames.right, executor);
        if (cfg.formats & kFormatHsbs)
            result.outputs[kFormatHsbs] = side_by_side(frames.left, frames.right, true, executor);
        if (cfg.formats & kFormatFsbs)
            result.outputs[kFormatFsbs] = side_by_side(frames.left, frames.right, false, executor);
        result.timings.format_ns = clock.elapsed_ns();
    }
    return result;
}

}  // namespace p3s

#ifndef PSEUDO3D_PIPELINE_HPP
#define PSEUDO3D_PIPELINE_HPP

#include <cstdint>
#include <map>

#include "pseudo3d/config.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"

namespace p3s {

// Per-stage wall time. "Pure" compute time deliberately excludes depth-map
// generation (the serial stage) and everything outside the pipeline proper
// (decode, encode, disk), so speedups measure only the data-parallel stages.
struct StageTimings {
    std::int64_t depth_gen_ns = 0;
    std::int64_t filter_ns = 0;
    std::int64_t dibr_ns = 0;
    std::int64_t inpaint_left_ns = 0;
    std::int64_t inpaint_right_ns = 0;
    std::int64_t format_ns = 0;

    std::int64_t pure_ns() const {
        return filter_ns + dibr_ns + inpaint_left_ns + inpaint_right_ns + format_ns;
    }
};

struct ConversionResult {
    std::map<StereoFormat, ImageRGB8> outputs;  // exactly the requested formats
    GrayMap depth;
    GrayMap filtered_depth;
    StageTimings timings;
};

// Fixed stage order: depth generation (serial) -> cross-bilateral filter ->
// left/right reconstruction -> inpainting (skipped for intact masks, timing
// zero) -> one output per requested format. Output bytes are invariant over
// the executor's worker count.
ConversionResult convert_image(const ImageRGB8& src, const ConversionConfig& cfg,
                               Executor& executor);

}  // namespace p3s

#endif

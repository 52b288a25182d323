#ifndef PSEUDO3D_SEQUENCE_HPP
#define PSEUDO3D_SEQUENCE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pseudo3d/pipeline.hpp"

namespace p3s {

struct RawFrame {
    std::int64_t index = 0;
    std::vector<std::uint8_t> ppm_bytes;
};

class FrameSource {
public:
    virtual ~FrameSource() = default;
    // Frames must arrive in ascending index order; nullopt ends the stream.
    virtual std::optional<RawFrame> next() = 0;
};

class FrameSink {
public:
    virtual ~FrameSink() = default;
    virtual void write(std::int64_t index, StereoFormat format, const ImageRGB8& img) = 0;
};

struct FrameTiming {
    std::int64_t index = 0;
    int width = 0;
    int height = 0;
    StageTimings timings;
};

struct SequenceReport {
    std::vector<FrameTiming> frames;
    std::int64_t wall_ns = 0;  // includes decode/encode/disk, unlike pure time

    std::int64_t pure_sum_ns() const;
    std::int64_t pure_min_ns() const;
    std::int64_t pure_max_ns() const;
    double pure_mean_ns() const;

    // frame,width,height,threads,depth_ns,filter_ns,dibr_ns,inpaint_l_ns,
    // inpaint_r_ns,format_ns,pure_ns — one row per frame, LF endings.
    std::string to_csv(int threads) const;
};

// Raised when a frame fails to decode or read; earlier outputs are already
// in the sink and stay there.
class SequenceError : public std::runtime_error {
public:
    SequenceError(std::int64_t frame_index, std::int64_t frames_written, const std::string& what)
        : std::runtime_error(what), frame_index_(frame_index), frames_written_(frames_written) {}
    std::int64_t frame_index() const { return frame_index_; }
    std::int64_t frames_written() const { return frames_written_; }

private:
    std::int64_t frame_index_;
    std::int64_t frames_written_;
};

// Converts every frame with convert_image and writes each requested format
// through the sink, preserving indices. An empty source is a success.
SequenceReport convert_sequence(FrameSource& source, const ConversionConfig& cfg,
                                Executor& executor, FrameSink& sink);

// Printf-style numeric pattern, e.g. "frame_%06d.ppm": exactly one %[0][N]d
// field, no other conversions. Used for both reading and naming outputs.
class FramePattern {
public:
    static FramePattern parse(const std::string& pattern);  // throws std::invalid_argument
    std::string filename(std::int64_t index) const;
    std::string stem(std::int64_t index) const;  // filename without extension

private:
    std::string prefix_;
    std::string suffix_;
    int pad_ = 0;
};

// Enumerates dir/pattern files starting at index 0 (or 1 when no frame 0
// exists) and stopping at the first missing index.
class PatternFrameSource : public FrameSource {
public:
    PatternFrameSource(std::filesystem::path dir, const std::string& pattern);
    std::optional<RawFrame> next() override;

private:
    std::filesystem::path dir_;
    FramePattern pattern_;
    std::int64_t next_index_ = 0;
    bool probed_ = false;
};

// Writes outputs as <stem>_<format>.ppm under the output directory.
class PatternFrameSink : public FrameSink {
public:
    PatternFrameSink(std::filesystem::path dir, const std::string& pattern);
    void write(std::int64_t index, StereoFormat format, const ImageRGB8& img) override;

private:
    std::filesystem::path dir_;
    FramePattern pattern_;
};

}  // namespace p3s

#endif

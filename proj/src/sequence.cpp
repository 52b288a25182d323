#include "pseudo3d/sequence.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "pseudo3d/io.hpp"
#include "pseudo3d/pnm.hpp"
#include "pseudo3d/stereo_format.hpp"

namespace p3s {

std::int64_t SequenceReport::pure_sum_ns() const {
    std::int64_t sum = 0;
    for (const FrameTiming& f : frames) sum += f.timings.pure_ns();
    return sum;
}

std::int64_t SequenceReport::pure_min_ns() const {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const std::int64_t v = frames[i].timings.pure_ns();
        if (i == 0 || v < best) best = v;
    }
    return best;
}

std::int64_t SequenceReport::pure_max_ns() const {
    std::int64_t best = 0;
    for (const FrameTiming& f : frames) best = std::max(best, f.timings.pure_ns());
    return best;
}

double SequenceReport::pure_mean_ns() const {
    return frames.empty() ? 0.0 : static_cast<double>(pure_sum_ns()) / frames.size();
}

std::string SequenceReport::to_csv(int threads) const {
    std::ostringstream os;
    os << "frame,width,height,threads,depth_ns,filter_ns,dibr_ns,inpaint_l_ns,"
          "inpaint_r_ns,format_ns,pure_ns\n";
    for (const FrameTiming& f : frames) {
        const StageTimings& t = f.timings;
        os << f.index << ',' << f.width << ',' << f.height << ',' << threads << ','
           << t.depth_gen_ns << ',' << t.filter_ns << ',' << t.dibr_ns << ','
           << t.inpaint_left_ns << ',' << t.inpaint_right_ns << ',' << t.format_ns << ','
           << t.pure_ns() << '\n';
    }
    return os.str();
}

SequenceReport convert_sequence(FrameSource& source, const ConversionConfig& cfg,
                                Executor& executor, FrameSink& sink) {
    cfg.validate();
    SequenceReport report;
    const auto wall_start = std::chrono::steady_clock::now();
    std::int64_t outputs_written = 0;

    for (;;) {
        std::optional<RawFrame> raw = source.next();
        if (!raw) break;

        ImageRGB8 frame;
        try {
            frame = decode_ppm(raw->ppm_bytes);
        } catch (const PnmError& e) {
            throw SequenceError(raw->index, outputs_written,
                                "frame " + std::to_string(raw->index) + ": " + e.what());
        }

        ConversionResult result = convert_image(frame, cfg, executor);
        for (const auto& [format, img] : result.outputs) {
            sink.write(raw->index, format, img);
            ++outputs_written;
        }
        report.frames.push_back({raw->index, frame.width, frame.height, result.timings});
    }

    report.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - wall_start)
                         .count();
    return report;
}

FramePattern FramePattern::parse(const std::string& pattern) {
    const std::size_t pct = pattern.find('%');
    if (pct == std::string::npos)
        throw std::invalid_argument("frame pattern needs one %d or %0Nd field: " + pattern);
    std::size_t pos = pct + 1;
    int pad = 0;
    while (pos < pattern.size() && pattern[pos] >= '0' && pattern[pos] <= '9') {
        pad = pad * 10 + (pattern[pos] - '0');
        ++pos;
    }
    if (pos >= pattern.size() || pattern[pos] != 'd')
        throw std::invalid_argument("frame pattern needs one %d or %0Nd field: " + pattern);
    if (pattern.find('%', pos) != std::string::npos)
        throw std::invalid_argument("frame pattern must contain exactly one % field: " + pattern);

    FramePattern fp;
    fp.prefix_ = pattern.substr(0, pct);
    fp.suffix_ = pattern.substr(pos + 1);
    fp.pad_ = pad;
    return fp;
}

std::string FramePattern::filename(std::int64_t index) const {
    std::string digits = std::to_string(index);
    if (static_cast<int>(digits.size()) < pad_)
        digits.insert(0, pad_ - digits.size(), '0');
    return prefix_ + digits + suffix_;
}

std::string FramePattern::stem(std::int64_t index) const {
    const std::string name = filename(index);
    const std::size_t dot = name.rfind('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

PatternFrameSource::PatternFrameSource(std::filesystem::path dir, const std::string& pattern)
    : dir_(std::move(dir)), pattern_(FramePattern::parse(pattern)) {}

std::optional<RawFrame> PatternFrameSource::next() {
    if (!probed_) {
        probed_ = true;
        // Sequences conventionally start at 0 or 1; take whichever exists.
        if (!std::filesystem::exists(dir_ / pattern_.filename(0)) &&
            std::filesystem::exists(dir_ / pattern_.filename(1)))
            next_index_ = 1;
    }
    const std::filesystem::path path = dir_ / pattern_.filename(next_index_);
    if (!std::filesystem::exists(path)) return std::nullopt;
    RawFrame frame;
    frame.index = next_index_++;
    frame.ppm_bytes = read_file(path);
    return frame;
}

PatternFrameSink::PatternFrameSink(std::filesystem::path dir, const std::string& pattern)
    : dir_(std::move(dir)), pattern_(FramePattern::parse(pattern)) {}

void PatternFrameSink::write(std::int64_t index, StereoFormat format, const ImageRGB8& img) {
    const std::string name = pattern_.stem(index) + "_" + format_name(format) + ".ppm";
    write_file(dir_ / name, encode_ppm(img));
}

}  // namespace p3s

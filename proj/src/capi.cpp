#include "pseudo3d.h"

#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "pseudo3d/bench.hpp"
#include "pseudo3d/config.hpp"
#include "pseudo3d/depth.hpp"
#include "pseudo3d/executor.hpp"
#include "pseudo3d/image.hpp"
#include "pseudo3d/io.hpp"
#include "pseudo3d/pipeline.hpp"
#include "pseudo3d/pnm.hpp"
#include "pseudo3d/sequence.hpp"

struct p3s_image {
    p3s::ImageRGB8 img;
};

struct p3s_graymap {
    p3s::GrayMap map;
};

struct p3s_buffer {
    std::vector<std::uint8_t> bytes;
};

struct p3s_config {
    p3s::ConversionConfig cfg;
    int threads = 0;  // <= 0: hardware concurrency
};

struct p3s_result {
    std::map<unsigned, p3s_image> outputs;
    p3s_graymap depth;
    p3s_graymap filtered_depth;
    p3s_timings timings;
};

struct p3s_bench_report {
    p3s::BenchReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

p3s_status fail(p3s_status status, const std::string& message) {
    set_error(message);
    return status;
}

// Runs the body and maps the library's exception taxonomy onto status codes.
template <typename F>
p3s_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return P3S_OK;
    } catch (const p3s::PnmError& e) {
        return fail(P3S_ERR_DECODE, e.what());
    } catch (const p3s::SequenceError& e) {
        return fail(P3S_ERR_DECODE, e.what());
    } catch (const p3s::IoError& e) {
        return fail(P3S_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(P3S_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(P3S_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(P3S_ERR_INTERNAL, e.what());
    }
}

p3s_timings to_c_timings(const p3s::StageTimings& t) {
    p3s_timings out;
    out.depth_gen_ns = t.depth_gen_ns;
    out.filter_ns = t.filter_ns;
    out.dibr_ns = t.dibr_ns;
    out.inpaint_left_ns = t.inpaint_left_ns;
    out.inpaint_right_ns = t.inpaint_right_ns;
    out.format_ns = t.format_ns;
    out.pure_ns = t.pure_ns();
    return out;
}

// Applies a single mutation, rolling back if the combined config fails
// validation.
template <typename F>
p3s_status update_config(p3s_config* cfg, F&& mutate) {
    if (!cfg) return fail(P3S_ERR_INVALID, "null config");
    p3s::ConversionConfig candidate = cfg->cfg;
    mutate(candidate);
    return guarded([&] {
        candidate.validate();
        cfg->cfg = candidate;
    });
}

}  // namespace

extern "C" {

const char* p3s_version(void) { return "1.0.0"; }

const char* p3s_status_name(p3s_status status) {
    switch (status) {
        case P3S_OK: return "ok";
        case P3S_ERR_INVALID: return "invalid argument";
        case P3S_ERR_IO: return "io error";
        case P3S_ERR_DECODE: return "decode error";
        case P3S_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* p3s_last_error(void) { return g_last_error.c_str(); }

/* ---- buffers ---- */

const uint8_t* p3s_buffer_data(const p3s_buffer* buf) {
    return buf ? buf->bytes.data() : nullptr;
}

size_t p3s_buffer_size(const p3s_buffer* buf) { return buf ? buf->bytes.size() : 0; }

void p3s_buffer_free(p3s_buffer* buf) { delete buf; }

/* ---- images ---- */

p3s_status p3s_image_create(int width, int height, p3s_image** out) {
    if (!out) return fail(P3S_ERR_INVALID, "null output pointer");
    return guarded([&] { *out = new p3s_image{p3s::ImageRGB8(width, height)}; });
}

void p3s_image_free(p3s_image* img) { delete img; }

int p3s_image_width(const p3s_image* img) { return img ? img->img.width : 0; }
int p3s_image_height(const p3s_image* img) { return img ? img->img.height : 0; }

const uint8_t* p3s_image_plane(const p3s_image* img, int channel) {
    if (!img) return nullptr;
    switch (channel) {
        case 0: return img->img.r.data();
        case 1: return img->img.g.data();
        case 2: return img->img.b.data();
    }
    return nullptr;
}

uint8_t* p3s_image_plane_mut(p3s_image* img, int channel) {
    return const_cast<uint8_t*>(p3s_image_plane(img, channel));
}

p3s_status p3s_image_decode_ppm(const uint8_t* data, size_t size, p3s_image** out) {
    if (!data || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_image{p3s::decode_ppm({data, size})}; });
}

p3s_status p3s_image_encode_ppm(const p3s_image* img, p3s_buffer** out) {
    if (!img || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_buffer{p3s::encode_ppm(img->img)}; });
}

p3s_status p3s_image_load_ppm(const char* path, p3s_image** out) {
    if (!path || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_image{p3s::decode_ppm(p3s::read_file(path))}; });
}

p3s_status p3s_image_save_ppm(const char* path, const p3s_image* img) {
    if (!path || !img) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { p3s::write_file(path, p3s::encode_ppm(img->img)); });
}

/* ---- gray maps ---- */

void p3s_graymap_free(p3s_graymap* map) { delete map; }

int p3s_graymap_width(const p3s_graymap* map) { return map ? map->map.width : 0; }
int p3s_graymap_height(const p3s_graymap* map) { return map ? map->map.height : 0; }

const uint8_t* p3s_graymap_data(const p3s_graymap* map) {
    return map ? map->map.data.data() : nullptr;
}

p3s_status p3s_graymap_decode_pgm(const uint8_t* data, size_t size, p3s_graymap** out) {
    if (!data || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_graymap{p3s::decode_pgm({data, size})}; });
}

p3s_status p3s_graymap_encode_pgm(const p3s_graymap* map, p3s_buffer** out) {
    if (!map || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_buffer{p3s::encode_pgm(map->map)}; });
}

p3s_status p3s_graymap_load_pgm(const char* path, p3s_graymap** out) {
    if (!path || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { *out = new p3s_graymap{p3s::decode_pgm(p3s::read_file(path))}; });
}

p3s_status p3s_graymap_save_pgm(const char* path, const p3s_graymap* map) {
    if (!path || !map) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] { p3s::write_file(path, p3s::encode_pgm(map->map)); });
}

/* ---- configuration ---- */

p3s_config* p3s_config_create(void) { return new (std::nothrow) p3s_config; }

void p3s_config_free(p3s_config* cfg) { delete cfg; }

p3s_status p3s_config_set_base(p3s_config* cfg, int base) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.base = base; });
}

p3s_status p3s_config_set_auto_base(p3s_config* cfg) {
    return update_config(cfg,
                         [&](p3s::ConversionConfig& c) { c.base = p3s::ConversionConfig::kAutoBase; });
}

p3s_status p3s_config_set_pop_threshold(p3s_config* cfg, int threshold) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.pop_threshold = threshold; });
}

p3s_status p3s_config_set_sigma_spatial(p3s_config* cfg, double sigma) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.sigma_spatial = sigma; });
}

p3s_status p3s_config_set_sigma_range(p3s_config* cfg, double sigma) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.sigma_range = sigma; });
}

p3s_status p3s_config_set_depth_block(p3s_config* cfg, int block) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.depth_block = block; });
}

p3s_status p3s_config_set_inpaint_block(p3s_config* cfg, int block) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.inpaint_block = block; });
}

p3s_status p3s_config_set_depth_weights(p3s_config* cfg, double alpha, double beta) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) {
        c.alpha = alpha;
        c.beta = beta;
    });
}

p3s_status p3s_config_set_mode(p3s_config* cfg, p3s_dibr_mode mode) {
    if (mode != P3S_MODE_FORWARD_ZBUFFER && mode != P3S_MODE_BACKWARD_FALLBACK)
        return fail(P3S_ERR_INVALID, "unknown dibr mode");
    return update_config(cfg, [&](p3s::ConversionConfig& c) {
        c.dibr_mode = mode == P3S_MODE_FORWARD_ZBUFFER ? p3s::DibrMode::kForwardZBuffer
                                                       : p3s::DibrMode::kBackwardFallback;
    });
}

p3s_status p3s_config_set_formats(p3s_config* cfg, unsigned format_mask) {
    return update_config(cfg, [&](p3s::ConversionConfig& c) { c.formats = format_mask; });
}

p3s_status p3s_config_set_threads(p3s_config* cfg, int threads) {
    if (!cfg) return fail(P3S_ERR_INVALID, "null config");
    cfg->threads = threads;
    return P3S_OK;
}

/* ---- conversion ---- */

p3s_status p3s_convert(const p3s_image* src, const p3s_config* cfg, p3s_result** out) {
    if (!src || !cfg || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] {
        p3s::Executor executor(cfg->threads);
        p3s::ConversionResult core = p3s::convert_image(src->img, cfg->cfg, executor);
        auto result = std::make_unique<p3s_result>();
        for (auto& [format, image] : core.outputs)
            result->outputs.emplace(static_cast<unsigned>(format), p3s_image{std::move(image)});
        result->depth.map = std::move(core.depth);
        result->filtered_depth.map = std::move(core.filtered_depth);
        result->timings = to_c_timings(core.timings);
        *out = result.release();
    });
}

p3s_status p3s_result_output(const p3s_result* result, p3s_format format,
                             const p3s_image** out) {
    if (!result || !out) return fail(P3S_ERR_INVALID, "null argument");
    const auto it = result->outputs.find(static_cast<unsigned>(format));
    if (it == result->outputs.end())
        return fail(P3S_ERR_INVALID, "format was not requested in the configuration");
    *out = &it->second;
    return P3S_OK;
}

const p3s_graymap* p3s_result_depth(const p3s_result* result) {
    return result ? &result->depth : nullptr;
}

const p3s_graymap* p3s_result_filtered_depth(const p3s_result* result) {
    return result ? &result->filtered_depth : nullptr;
}

p3s_status p3s_result_timings(const p3s_result* result, p3s_timings* out) {
    if (!result || !out) return fail(P3S_ERR_INVALID, "null argument");
    *out = result->timings;
    return P3S_OK;
}

void p3s_result_free(p3s_result* result) { delete result; }

p3s_status p3s_depth_map(const p3s_image* src, const p3s_config* cfg, p3s_graymap** out) {
    if (!src || !cfg || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] {
        cfg->cfg.validate();
        *out = new p3s_graymap{p3s::generate_depth(src->img, cfg->cfg)};
    });
}

/* ---- sequences ---- */

p3s_status p3s_convert_sequence(const char* in_dir, const char* pattern, const char* out_dir,
                                const p3s_config* cfg, p3s_sequence_summary* summary,
                                p3s_buffer** timing_csv) {
    if (!in_dir || !pattern || !out_dir || !cfg)
        return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] {
        p3s::Executor executor(cfg->threads);
        p3s::PatternFrameSource source(in_dir, pattern);
        p3s::PatternFrameSink sink(out_dir, pattern);
        const p3s::SequenceReport report =
            p3s::convert_sequence(source, cfg->cfg, executor, sink);
        if (summary) {
            summary->frames = static_cast<int64_t>(report.frames.size());
            summary->pure_sum_ns = report.pure_sum_ns();
            summary->pure_min_ns = report.pure_min_ns();
            summary->pure_max_ns = report.pure_max_ns();
            summary->pure_mean_ns = report.pure_mean_ns();
            summary->wall_ns = report.wall_ns;
        }
        if (timing_csv) {
            const std::string csv = report.to_csv(executor.workers());
            *timing_csv = new p3s_buffer{{csv.begin(), csv.end()}};
        }
    });
}

/* ---- benchmarking ---- */

p3s_status p3s_bench(const int* widths, const int* heights, size_t nsizes,
                     const int* thread_counts, size_t nthreads, int reps, uint64_t seed,
                     const p3s_config* cfg, p3s_bench_report** out) {
    if (!widths || !heights || !thread_counts || !cfg || !out)
        return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] {
        p3s::BenchOptions options;
        options.sizes.reserve(nsizes);
        for (size_t i = 0; i < nsizes; ++i) options.sizes.emplace_back(widths[i], heights[i]);
        options.thread_counts.assign(thread_counts, thread_counts + nthreads);
        options.reps = reps;
        options.seed = seed;
        *out = new p3s_bench_report{p3s::run_bench(options, cfg->cfg)};
    });
}

p3s_status p3s_bench_report_csv(const p3s_bench_report* report, p3s_buffer** out) {
    if (!report || !out) return fail(P3S_ERR_INVALID, "null argument");
    return guarded([&] {
        const std::string csv = report->report.to_csv();
        *out = new p3s_buffer{{csv.begin(), csv.end()}};
    });
}

double p3s_bench_report_speedup(const p3s_bench_report* report, int width, int height,
                                int threads) {
    return report ? report->report.speedup(width, height, threads) : 0.0;
}

void p3s_bench_report_free(p3s_bench_report* report) { delete report; }

} /* extern "C" */

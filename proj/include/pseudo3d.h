/* C interface to the pseudo3d conversion library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return p3s_status; on any non-OK status, p3s_last_error()
 * returns a thread-local description of what went wrong. Handles returned
 * through out-parameters are owned by the caller unless documented as
 * borrowed.
 */
#ifndef PSEUDO3D_H
#define PSEUDO3D_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PSEUDO3D_BUILD)
#    define P3S_API __declspec(dllexport)
#  else
#    define P3S_API __declspec(dllimport)
#  endif
#else
#  define P3S_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum p3s_status {
    P3S_OK = 0,
    P3S_ERR_INVALID = 1, /* bad argument or configuration */
    P3S_ERR_IO = 2,      /* file read/write failure */
    P3S_ERR_DECODE = 3,  /* malformed PPM/PGM payload */
    P3S_ERR_INTERNAL = 4
} p3s_status;

typedef enum p3s_dibr_mode {
    P3S_MODE_FORWARD_ZBUFFER = 0,
    P3S_MODE_BACKWARD_FALLBACK = 1
} p3s_dibr_mode;

/* Bit flags; combine for p3s_config_set_formats. */
typedef enum p3s_format {
    P3S_FORMAT_ANAGLYPH = 1,
    P3S_FORMAT_HSBS = 2,
    P3S_FORMAT_FSBS = 4
} p3s_format;

typedef struct p3s_image p3s_image;
typedef struct p3s_graymap p3s_graymap;
typedef struct p3s_buffer p3s_buffer;
typedef struct p3s_config p3s_config;
typedef struct p3s_result p3s_result;
typedef struct p3s_bench_report p3s_bench_report;

typedef struct p3s_timings {
    int64_t depth_gen_ns;
    int64_t filter_ns;
    int64_t dibr_ns;
    int64_t inpaint_left_ns;
    int64_t inpaint_right_ns;
    int64_t format_ns;
    int64_t pure_ns; /* filter + dibr + inpaint L/R + format */
} p3s_timings;

typedef struct p3s_sequence_summary {
    int64_t frames;
    int64_t pure_sum_ns;
    int64_t pure_min_ns;
    int64_t pure_max_ns;
    double pure_mean_ns;
    int64_t wall_ns; /* includes decode/encode/disk */
} p3s_sequence_summary;

P3S_API const char* p3s_version(void);
P3S_API const char* p3s_status_name(p3s_status status);
/* Thread-local message for the most recent failure; empty string if none. */
P3S_API const char* p3s_last_error(void);

/* ---- byte buffers ---- */
P3S_API const uint8_t* p3s_buffer_data(const p3s_buffer* buf);
P3S_API size_t p3s_buffer_size(const p3s_buffer* buf);
P3S_API void p3s_buffer_free(p3s_buffer* buf);

/* ---- images (planar 8-bit RGB) ---- */
P3S_API p3s_status p3s_image_create(int width, int height, p3s_image** out);
P3S_API void p3s_image_free(p3s_image* img);
P3S_API int p3s_image_width(const p3s_image* img);
P3S_API int p3s_image_height(const p3s_image* img);
/* channel: 0 = red, 1 = green, 2 = blue; row-major width*height bytes. */
P3S_API const uint8_t* p3s_image_plane(const p3s_image* img, int channel);
P3S_API uint8_t* p3s_image_plane_mut(p3s_image* img, int channel);
P3S_API p3s_status p3s_image_decode_ppm(const uint8_t* data, size_t size, p3s_image** out);
P3S_API p3s_status p3s_image_encode_ppm(const p3s_image* img, p3s_buffer** out);
P3S_API p3s_status p3s_image_load_ppm(const char* path, p3s_image** out);
P3S_API p3s_status p3s_image_save_ppm(const char* path, const p3s_image* img);

/* ---- gray maps (8-bit single channel) ---- */
P3S_API void p3s_graymap_free(p3s_graymap* map);
P3S_API int p3s_graymap_width(const p3s_graymap* map);
P3S_API int p3s_graymap_height(const p3s_graymap* map);
P3S_API const uint8_t* p3s_graymap_data(const p3s_graymap* map);
P3S_API p3s_status p3s_graymap_decode_pgm(const uint8_t* data, size_t size, p3s_graymap** out);
P3S_API p3s_status p3s_graymap_encode_pgm(const p3s_graymap* map, p3s_buffer** out);
P3S_API p3s_status p3s_graymap_load_pgm(const char* path, p3s_graymap** out);
P3S_API p3s_status p3s_graymap_save_pgm(const char* path, const p3s_graymap* map);

/* ---- configuration ---- */
P3S_API p3s_config* p3s_config_create(void); /* defaults; never fails */
P3S_API void p3s_config_free(p3s_config* cfg);
/* base must be even and >= 0. */
P3S_API p3s_status p3s_config_set_base(p3s_config* cfg, int base);
/* base = 2 * round(width / 256), resolved per frame. The default. */
P3S_API p3s_status p3s_config_set_auto_base(p3s_config* cfg);
P3S_API p3s_status p3s_config_set_pop_threshold(p3s_config* cfg, int threshold);
P3S_API p3s_status p3s_config_set_sigma_spatial(p3s_config* cfg, double sigma);
P3S_API p3s_status p3s_config_set_sigma_range(p3s_config* cfg, double sigma);
P3S_API p3s_status p3s_config_set_depth_block(p3s_config* cfg, int block);
P3S_API p3s_status p3s_config_set_inpaint_block(p3s_config* cfg, int block);
P3S_API p3s_status p3s_config_set_depth_weights(p3s_config* cfg, double alpha, double beta);
P3S_API p3s_status p3s_config_set_mode(p3s_config* cfg, p3s_dibr_mode mode);
P3S_API p3s_status p3s_config_set_formats(p3s_config* cfg, unsigned format_mask);
/* threads <= 0 selects the hardware concurrency. */
P3S_API p3s_status p3s_config_set_threads(p3s_config* cfg, int threads);

/* ---- single-image conversion ---- */
P3S_API p3s_status p3s_convert(const p3s_image* src, const p3s_config* cfg, p3s_result** out);
/* Borrowed views; valid until p3s_result_free. */
P3S_API p3s_status p3s_result_output(const p3s_result* result, p3s_format format,
                                     const p3s_image** out);
P3S_API const p3s_graymap* p3s_result_depth(const p3s_result* result);
P3S_API const p3s_graymap* p3s_result_filtered_depth(const p3s_result* result);
P3S_API p3s_status p3s_result_timings(const p3s_result* result, p3s_timings* out);
P3S_API void p3s_result_free(p3s_result* result);

/* Depth map only (the serial generation stage). */
P3S_API p3s_status p3s_depth_map(const p3s_image* src, const p3s_config* cfg, p3s_graymap** out);

/* ---- frame sequences ----
 * pattern is a printf-style name with one %0Nd field, e.g. "frame_%06d.ppm".
 * Frames are consumed from index 0 (or 1 if no frame 0 exists) until the
 * first missing index; outputs land in out_dir as <stem>_<format>.ppm.
 * timing_csv (optional, may be NULL) receives one CSV row per frame. On
 * failure the already-written outputs stay in place and the error message
 * names the failing frame index. */
P3S_API p3s_status p3s_convert_sequence(const char* in_dir, const char* pattern,
                                        const char* out_dir, const p3s_config* cfg,
                                        p3s_sequence_summary* summary, p3s_buffer** timing_csv);

/* ---- benchmarking ----
 * Runs reps conversions of a seeded synthetic frame per size and thread
 * count; reps must be >= 3. Thread counts and sizes are parallel arrays of
 * length nthreads/nsizes. */
P3S_API p3s_status p3s_bench(const int* widths, const int* heights, size_t nsizes,
                             const int* thread_counts, size_t nthreads, int reps,
                             uint64_t seed, const p3s_config* cfg, p3s_bench_report** out);
P3S_API p3s_status p3s_bench_report_csv(const p3s_bench_report* report, p3s_buffer** out);
/* median pure time at threads=1 divided by median pure time at `threads`. */
P3S_API double p3s_bench_report_speedup(const p3s_bench_report* report, int width, int height,
                                        int threads);
P3S_API void p3s_bench_report_free(p3s_bench_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PSEUDO3D_H */

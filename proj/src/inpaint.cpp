#include "pseudo3d/inpaint.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace p3s {
namespace {

struct Repair {
    std::size_t idx;
    std::uint8_t r, g, b;
};

// Damaged pixels of one scheduling tile, plus per-pass scratch. Tiles only
// partition the work; neighbor lookups ignore tile boundaries.
struct Tile {
    std::vector<std::size_t> pixels;
    std::vector<std::size_t> still_damaged;
    std::vector<Repair> repairs;
};

inline std::uint8_t mean_half_up(unsigned sum, unsigned count) {
    return static_cast<std::uint8_t>((2 * sum + count) / (2 * count));
}

}  // namespace

ImageRGB8 inpaint(const ImageRGB8& frame, const DamageMask& mask,
                  const ConversionConfig& cfg, Executor& executor, InpaintStats* stats) {
    if (frame.width != mask.width || frame.height != mask.height)
        throw std::invalid_argument("inpaint: frame and mask dimensions differ");

    InpaintStats local_stats;
    InpaintStats& st = stats ? *stats : local_stats;
    st = InpaintStats{};

    ImageRGB8 out = frame;
    if (!mask.any_damaged()) return out;

    const int w = frame.width;
    const int h = frame.height;
    std::vector<std::uint8_t> damaged = mask.damaged;

    const int block = cfg.inpaint_block;
    const int tiles_x = (w + block - 1) / block;
    const int tiles_y = (h + block - 1) / block;
    std::vector<Tile> tiles(static_cast<std::size_t>(tiles_x) * tiles_y);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (damaged[frame.index(x, y)])
                tiles[static_cast<std::size_t>(y / block) * tiles_x + x / block]
                    .pixels.push_back(frame.index(x, y));

    std::size_t remaining = 0;
    for (const Tile& t : tiles) remaining += t.pixels.size();

    static const int kNeighborDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static const int kNeighborDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

    while (remaining > 0) {
        // Decide repairs against the pass-start state: `damaged` and the
        // intact pixels of `out` are read-only until the apply phase, which
        // makes the pass independent of visit order and thread count.
        executor.parallel_for(static_cast<std::int64_t>(tiles.size()),
                              [&](std::int64_t t0, std::int64_t t1) {
            for (std::int64_t ti = t0; ti < t1; ++ti) {
                Tile& tile = tiles[ti];
                tile.repairs.clear();
                tile.still_damaged.clear();
                for (std::size_t idx : tile.pixels) {
                    const int x = static_cast<int>(idx % w);
                    const int y = static_cast<int>(idx / w);
                    unsigned count = 0, sum_r = 0, sum_g = 0, sum_b = 0;
                    for (int n = 0; n < 8; ++n) {
                        const int nx = x + kNeighborDx[n];
                        const int ny = y + kNeighborDy[n];
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                        const std::size_t nidx = frame.index(nx, ny);
                        if (damaged[nidx]) continue;
                        ++count;
                        sum_r += out.r[nidx];
                        sum_g += out.g[nidx];
                        sum_b += out.b[nidx];
                    }
                    if (count >= 2) {
                        tile.repairs.push_back({idx, mean_half_up(sum_r, count),
                                                mean_half_up(sum_g, count),
                                                mean_half_up(sum_b, count)});
                    } else {
                        tile.still_damaged.push_back(idx);
                    }
                }
            }
        });

        std::size_t repaired_this_pass = 0;
        for (Tile& tile : tiles) {
            for (const Repair& rep : tile.repairs) {
                out.r[rep.idx] = rep.r;
                out.g[rep.idx] = rep.g;
                out.b[rep.idx] = rep.b;
                damaged[rep.idx] = 0;
            }
            repaired_this_pass += tile.repairs.size();
            tile.pixels.swap(tile.still_damaged);
        }
        ++st.passes;
        st.repaired += repaired_this_pass;
        remaining -= repaired_this_pass;

        if (repaired_this_pass == 0 && remaining > 0) {
            // Stalled: fewer than two intact neighbors anywhere along the
            // damage front (a frame-wide pass would stall identically, since
            // tiles never limited neighbor visibility). Fill with mid-gray.
            for (Tile& tile : tiles) {
                for (std::size_t idx : tile.pixels) {
                    out.r[idx] = 128;
                    out.g[idx] = 128;
                    out.b[idx] = 128;
                    damaged[idx] = 0;
                }
                st.fallback_filled += tile.pixels.size();
                tile.pixels.clear();
            }
            remaining = 0;
        }
    }
    return out;
}

}  // namespace p3s

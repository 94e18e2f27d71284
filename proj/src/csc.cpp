#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "vectorforge/segmentation.hpp"

// Color structure coding.
//
// Pixels are placed on a hexagonal lattice by shifting every second row half
// a pixel to the left. In axial hex coordinates pixel (x, y) sits at
// (x - ceil(y/2), y) and its six neighbors are the axial unit steps.
//
// Islands: seven hexes (a center and its six neighbors) form a level-0
// island; the centers lie on the index-7 sublattice spanned by (2,1) and
// (-1,3), so the islands tile the plane. The island centers, expressed in
// sublattice coordinates, form a hex lattice again, and grouping seven of
// them yields the next level, until a single island covers the image.
//
// Segmentation: every hex edge between two pixels is handled at the lowest
// level whose island contains both pixels. At level 0 similar pixels in an
// island become code elements; at each higher level, code elements of the
// seven child islands that touch and have similar mean colors are linked
// and merged, carrying area-weighted mean colors upward.

namespace vectorforge {

namespace {

struct Axial {
    std::int64_t q;
    std::int64_t r;
    friend bool operator==(const Axial&, const Axial&) = default;
};

constexpr std::array<Axial, 7> kIslandOffsets = {
    Axial{0, 0}, Axial{1, 0}, Axial{-1, 0}, Axial{0, 1}, Axial{0, -1}, Axial{1, -1}, Axial{-1, 1}};

// Island (in sublattice coordinates) containing hex c.
Axial parent_island(Axial c) {
    for (const Axial& o : kIslandOffsets) {
        const std::int64_t u = c.q - o.q;
        const std::int64_t v = c.r - o.r;
        // Solve (u, v) = i * (2, 1) + j * (-1, 3).
        const std::int64_t ni = 3 * u + v;
        const std::int64_t nj = 2 * v - u;
        if (ni % 7 == 0 && nj % 7 == 0) return Axial{ni / 7, nj / 7};
    }
    // The seven offsets are a complete residue system of the sublattice.
    return Axial{0, 0};
}

std::uint64_t pack(Axial a) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.q)) << 32) |
           static_cast<std::uint32_t>(a.r);
}

struct HexEdge {
    std::uint32_t a;
    std::uint32_t b;
};

}  // namespace

LabelImage segment_csc(const RasterImage& img, const CscParams& params) {
    const int w = img.width();
    const int h = img.height();
    const std::size_t n = img.size();
    const double limit_sq = params.threshold * params.threshold;

    std::vector<Axial> island(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            island[img.index(x, y)] = Axial{x - (y + 1) / 2, y};
        }
    }

    // Each undirected hex edge once: east, and the two neighbors in the next row.
    std::vector<HexEdge> pending;
    pending.reserve(3 * n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto i = static_cast<std::uint32_t>(img.index(x, y));
            if (x + 1 < w) pending.push_back({i, i + 1});
            if (y + 1 < h) {
                const int left = (y % 2 == 0) ? x : x - 1;
                for (int nx = left; nx <= left + 1; ++nx) {
                    if (nx >= 0 && nx < w) {
                        pending.push_back({i, static_cast<std::uint32_t>(img.index(nx, y + 1))});
                    }
                }
            }
        }
    }

    DisjointSet sets(n);
    std::vector<std::array<double, 3>> sums(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rgb p = img.pixels()[i];
        sums[i] = {double(p.r), double(p.g), double(p.b)};
    }
    auto similar = [&](std::uint32_t ra, std::uint32_t rb) {
        const double na = double(sets.size(ra));
        const double nb = double(sets.size(rb));
        double d = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double diff = sums[ra][c] / na - sums[rb][c] / nb;
            d += diff * diff;
        }
        return d <= limit_sq;
    };

    // Links are decided on the code elements as they stand at the start of a
    // level, then merged together.
    auto process_level = [&](const std::vector<HexEdge>& edges) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
        for (const HexEdge& e : edges) {
            const std::uint32_t ra = sets.find(e.a);
            const std::uint32_t rb = sets.find(e.b);
            if (ra != rb && similar(ra, rb)) links.emplace_back(ra, rb);
        }
        for (auto [a, b] : links) {
            const std::uint32_t ra = sets.find(a);
            const std::uint32_t rb = sets.find(b);
            if (ra == rb) continue;
            const auto [root, child] =
                sets.size(ra) >= sets.size(rb) ? std::pair{ra, rb} : std::pair{rb, ra};
            for (int c = 0; c < 3; ++c) sums[root][c] += sums[child][c];
            sets.attach(child, root);
        }
    };

    std::size_t previous_islands = n + 1;
    int stalled_levels = 0;
    while (!pending.empty()) {
        for (Axial& a : island) a = parent_island(a);

        std::vector<std::uint64_t> ids(island.size());
        std::transform(island.begin(), island.end(), ids.begin(), pack);
        std::sort(ids.begin(), ids.end());
        const auto islands =
            static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());

        // Lattice coordinates can cycle between a few adjacent islands
        // instead of collapsing; close the hierarchy with one root island.
        stalled_levels = islands < previous_islands ? 0 : stalled_levels + 1;
        previous_islands = islands;
        const bool root_level = islands == 1 || stalled_levels >= 3;

        std::vector<HexEdge> level_edges;
        std::vector<HexEdge> rest;
        for (const HexEdge& e : pending) {
            if (root_level || island[e.a] == island[e.b]) {
                level_edges.push_back(e);
            } else {
                rest.push_back(e);
            }
        }
        process_level(level_edges);
        pending = std::move(rest);
    }

    std::vector<std::int32_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<std::int32_t>(sets.find(std::uint32_t(i)));
    const LabelImage labels = normalize_labels(w, h, raw);
    return merge_small_regions(img, labels, params.min_region_frac);
}

}  // namespace vectorforge

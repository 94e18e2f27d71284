#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vectorforge/raster.hpp"

namespace vectorforge {

/// Per-pixel region identifiers. After normalize_labels the identifiers are
/// exactly {0, ..., region_count-1}, assigned in row-major order of first
/// occurrence, and every region is one 4-connected component.
struct LabelImage {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    int region_count = 0;

    std::int32_t at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
};

struct SrmParams {
    double q = 32.0;
    double min_region_frac = 0.0005;
};

struct GraphParams {
    double k = 500.0;
    double min_region_frac = 0.0005;
};

struct CscParams {
    double threshold = 30.0;
    double min_region_frac = 0.0;
};

LabelImage normalize_labels(int width, int height, std::span<const std::int32_t> raw);

/// Statistical region merging over 4-neighbor edges sorted by channel_abs_diff.
LabelImage segment_srm(const RasterImage& img, const SrmParams& params);

/// Kruskal-style graph segmentation: components merge unless the connecting
/// weight exceeds min(Int(C1) + k/|C1|, Int(C2) + k/|C2|).
LabelImage segment_graph(const RasterImage& img, const GraphParams& params);

/// Color structure coding on a hexagonal island hierarchy laid over the
/// pixel grid (odd rows shifted half a pixel left).
LabelImage segment_csc(const RasterImage& img, const CscParams& params);

/// Repeatedly merges the smallest region below min_region_frac × area into
/// its 4-adjacent neighbor with the closest mean color.
LabelImage merge_small_regions(const RasterImage& img, const LabelImage& labels,
                               double min_region_frac);

/// SRM merge bound b(R) for a region of `region_size` pixels.
double srm_bound(double q, std::size_t image_size, std::size_t region_size);

/// 4-neighbor edge in the canonical processing order: ascending weight, then
/// source pixel index, then south before east.
struct PixelEdge {
    std::uint32_t a;
    std::uint32_t b;
    int weight;
};

std::vector<PixelEdge> sorted_pixel_edges(const RasterImage& img);

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);

    std::uint32_t find(std::uint32_t x);
    /// Attaches `child` root under `root` root. Both must be roots.
    void attach(std::uint32_t child, std::uint32_t root);
    std::size_t size(std::uint32_t root) const { return size_[root]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace vectorforge

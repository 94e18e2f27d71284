#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vectorforge/raster.hpp"
#include "vectorforge/svg_writer.hpp"

namespace vectorforge {

struct Rasterization {
    RasterImage image;
    std::vector<std::uint8_t> covered;  // 1 where some path painted the pixel center
};

/// Paints paths in document order on a canvas initialized to the first
/// path's fill (black when empty). Cubics are flattened until the control
/// polygon deviates < 0.1 px; scanlines sample pixel centers with the
/// nonzero rule, no anti-aliasing.
Rasterization rasterize_with_coverage(const SvgDocument& doc, int width, int height,
                                      unsigned workers = 1);
RasterImage rasterize(const SvgDocument& doc, int width, int height, unsigned workers = 1);

/// Polyline approximation of one closed path, first point repeated at the end.
std::vector<Point2> flatten_path(const BezierPath& path);

inline constexpr double kPsnrCap = 99.0;

/// 10·log10(255² / MSE) over all pixels and channels, capped at kPsnrCap.
/// Throws DimensionError when sizes differ.
double psnr(const RasterImage& a, const RasterImage& b);
/// Same over pixels whose mask entry is nonzero; kPsnrCap when none differ.
double psnr_masked(const RasterImage& a, const RasterImage& b, const std::vector<std::uint8_t>& mask);

/// 1 for pixels whose center is more than `band` px (Chebyshev) from every
/// pixel of a different label.
std::vector<std::uint8_t> interior_mask(const LabelImage& labels, int band = 1);

/// bytes·8 / (w·h).
double bpp(std::size_t svg_bytes, int width, int height);

struct Metrics {
    double psnr_db = 0.0;
    double psnr_interior_db = 0.0;
    double bpp = 0.0;
    double wall_ms = 0.0;
    std::size_t path_count = 0;
    std::size_t segment_count = 0;
    std::size_t svg_bytes = 0;
};

std::size_t segment_count(const SvgDocument& doc);

std::string metrics_json(const Metrics& m);
std::string metrics_text(const Metrics& m);
std::string metrics_csv_header();
std::string metrics_csv_row(const Metrics& m);

}  // namespace vectorforge

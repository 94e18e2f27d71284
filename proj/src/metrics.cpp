#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "vectorforge/eval.hpp"

namespace vectorforge {

namespace {

double psnr_from_sums(double squared_error, std::size_t samples) {
    if (samples == 0 || squared_error == 0.0) return kPsnrCap;
    const double mse = squared_error / static_cast<double>(samples);
    return std::min(kPsnrCap, 10.0 * std::log10(255.0 * 255.0 / mse));
}

double squared_diff(Rgb a, Rgb b) {
    const double dr = double(a.r) - double(b.r);
    const double dg = double(a.g) - double(b.g);
    const double db = double(a.b) - double(b.b);
    return dr * dr + dg * dg + db * db;
}

void require_same_size(const RasterImage& a, const RasterImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw DimensionError("image sizes differ: " + std::to_string(a.width()) + "x" +
                             std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                             std::to_string(b.height()));
    }
}

}  // namespace

double psnr(const RasterImage& a, const RasterImage& b) {
    require_same_size(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += squared_diff(a.pixels()[i], b.pixels()[i]);
    return psnr_from_sums(sum, 3 * a.size());
}

double psnr_masked(const RasterImage& a, const RasterImage& b, const std::vector<std::uint8_t>& mask) {
    require_same_size(a, b);
    if (mask.size() != a.size()) throw DimensionError("mask size differs from image size");
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask[i]) continue;
        sum += squared_diff(a.pixels()[i], b.pixels()[i]);
        ++count;
    }
    return psnr_from_sums(sum, 3 * count);
}

std::vector<std::uint8_t> interior_mask(const LabelImage& labels, int band) {
    const int w = labels.width;
    const int h = labels.height;
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int own = labels.at(x, y);
            bool interior = true;
            for (int dy = -band; dy <= band && interior; ++dy) {
                for (int dx = -band; dx <= band; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    if (labels.at(nx, ny) != own) {
                        interior = false;
                        break;
                    }
                }
            }
            mask[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] =
                interior ? 1 : 0;
        }
    }
    return mask;
}

double bpp(std::size_t svg_bytes, int width, int height) {
    return static_cast<double>(svg_bytes) * 8.0 / (static_cast<double>(width) * static_cast<double>(height));
}

std::size_t segment_count(const SvgDocument& doc) {
    std::size_t n = 0;
    for (const BezierPath& p : doc.paths) n += p.elements.size();
    return n;
}

std::string metrics_json(const Metrics& m) {
    const nlohmann::ordered_json j = {
        {"psnr_db", m.psnr_db},          {"psnr_interior_db", m.psnr_interior_db},
        {"bpp", m.bpp},                  {"wall_ms", m.wall_ms},
        {"path_count", m.path_count},    {"segment_count", m.segment_count},
        {"svg_bytes", m.svg_bytes},
    };
    return j.dump();
}

std::string metrics_text(const Metrics& m) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "psnr_db           %10.3f\n"
                  "psnr_interior_db  %10.3f\n"
                  "bpp               %10.4f\n"
                  "wall_ms           %10.2f\n"
                  "path_count        %10zu\n"
                  "segment_count     %10zu\n"
                  "svg_bytes         %10zu\n",
                  m.psnr_db, m.psnr_interior_db, m.bpp, m.wall_ms, m.path_count, m.segment_count,
                  m.svg_bytes);
    return buf;
}

std::string metrics_csv_header() {
    return "psnr_db,psnr_interior_db,bpp,wall_ms,path_count,segment_count,svg_bytes";
}

std::string metrics_csv_row(const Metrics& m) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.4f,%.4f,%.6f,%.3f,%zu,%zu,%zu", m.psnr_db, m.psnr_interior_db, m.bpp,
                  m.wall_ms, m.path_count, m.segment_count, m.svg_bytes);
    return buf;
}

}  // namespace vectorforge

#include <array>
#include <cmath>

#include "vectorforge/segmentation.hpp"

namespace vectorforge {

namespace {

constexpr double kGrayLevels = 256.0;

}  // namespace

double srm_bound(double q, std::size_t image_size, std::size_t region_size) {
    const double n = static_cast<double>(image_size);
    // delta = 1 / (6 |I|^2), so ln(1/delta) = ln(6 |I|^2).
    const double log_inv_delta = std::log(6.0 * n * n);
    return kGrayLevels * std::sqrt(log_inv_delta / (2.0 * q * static_cast<double>(region_size)));
}

LabelImage segment_srm(const RasterImage& img, const SrmParams& params) {
    const std::size_t n = img.size();
    DisjointSet sets(n);
    std::vector<std::array<double, 3>> means(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rgb p = img.pixels()[i];
        means[i] = {double(p.r), double(p.g), double(p.b)};
    }

    const double log_inv_delta = std::log(6.0 * double(n) * double(n));
    const double scale = kGrayLevels * kGrayLevels * log_inv_delta / (2.0 * params.q);
    auto bound_sq = [&](std::uint32_t root) { return scale / double(sets.size(root)); };

    for (const PixelEdge& e : sorted_pixel_edges(img)) {
        const std::uint32_t ra = sets.find(e.a);
        const std::uint32_t rb = sets.find(e.b);
        if (ra == rb) continue;
        const double limit = std::sqrt(bound_sq(ra) + bound_sq(rb));
        bool similar = true;
        for (int c = 0; c < 3 && similar; ++c) {
            similar = std::abs(means[ra][c] - means[rb][c]) <= limit;
        }
        if (!similar) continue;

        const auto [root, child] =
            sets.size(ra) >= sets.size(rb) ? std::pair{ra, rb} : std::pair{rb, ra};
        const double wr = double(sets.size(root));
        const double wc = double(sets.size(child));
        for (int c = 0; c < 3; ++c) {
            means[root][c] = (means[root][c] * wr + means[child][c] * wc) / (wr + wc);
        }
        sets.attach(child, root);
    }

    std::vector<std::int32_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<std::int32_t>(sets.find(std::uint32_t(i)));
    const LabelImage labels = normalize_labels(img.width(), img.height(), raw);
    return merge_small_regions(img, labels, params.min_region_frac);
}

}  // namespace vectorforge

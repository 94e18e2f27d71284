#include "vectorforge/segmentation.hpp"

namespace vectorforge {

LabelImage segment_graph(const RasterImage& img, const GraphParams& params) {
    const std::size_t n = img.size();
    DisjointSet sets(n);
    // Int(C): largest MST edge inside the component; 0 for singletons.
    std::vector<double> internal(n, 0.0);

    for (const PixelEdge& e : sorted_pixel_edges(img)) {
        const std::uint32_t ra = sets.find(e.a);
        const std::uint32_t rb = sets.find(e.b);
        if (ra == rb) continue;
        const double mint = std::min(internal[ra] + params.k / double(sets.size(ra)),
                                     internal[rb] + params.k / double(sets.size(rb)));
        // Boundary between the components holds iff Dif > MInt.
        if (double(e.weight) > mint) continue;
        const auto [root, child] =
            sets.size(ra) >= sets.size(rb) ? std::pair{ra, rb} : std::pair{rb, ra};
        sets.attach(child, root);
        // Edges arrive in ascending weight, so the joining edge is the new MST maximum.
        internal[root] = double(e.weight);
    }

    std::vector<std::int32_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<std::int32_t>(sets.find(std::uint32_t(i)));
    const LabelImage labels = normalize_labels(img.width(), img.height(), raw);
    return merge_small_regions(img, labels, params.min_region_frac);
}

}  // namespace vectorforge

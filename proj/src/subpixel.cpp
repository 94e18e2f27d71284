#include "vectorforge/boundary.hpp"
#include "vectorforge/parallel.hpp"

namespace vectorforge {

SubpixelBoundaryImage build_subpixel_edges(const LabelImage& labels, unsigned workers) {
    SubpixelBoundaryImage s;
    s.width_s = 2 * labels.width - 1;
    s.height_s = 2 * labels.height - 1;
    const std::size_t size = static_cast<std::size_t>(s.width_s) * static_cast<std::size_t>(s.height_s);
    s.edges.assign(size, 0);
    s.junctions.assign(size, 0);

    parallel_for(static_cast<std::size_t>(s.height_s), workers, [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < s.width_s; ++x) {
            bool edge = false;
            if (x % 2 == 1 && y % 2 == 0) {
                edge = labels.at((x + 1) / 2, y / 2) != labels.at((x - 1) / 2, y / 2);
            } else if (x % 2 == 0 && y % 2 == 1) {
                edge = labels.at(x / 2, (y + 1) / 2) != labels.at(x / 2, (y - 1) / 2);
            }
            s.edges[s.index(x, y)] = edge ? 1 : 0;
        }
    });
    return s;
}

SubpixelBoundaryImage fill_gaps(SubpixelBoundaryImage s, unsigned workers) {
    // Odd/odd positions only read odd/even and even/odd neighbors, so the
    // update is order independent.
    const std::size_t rows = s.height_s > 2 ? static_cast<std::size_t>((s.height_s - 1) / 2) : 0;
    parallel_for(rows, workers, [&](std::size_t k) {
        const int y = 2 * static_cast<int>(k) + 1;
        for (int x = 1; x <= s.width_s - 2; x += 2) {
            if ((s.edge(x + 1, y) && s.edge(x - 1, y)) || (s.edge(x, y + 1) && s.edge(x, y - 1))) {
                s.edges[s.index(x, y)] = 1;
            }
        }
    });
    return s;
}

SubpixelBoundaryImage mark_junctions(SubpixelBoundaryImage s, unsigned workers) {
    const std::size_t rows = s.height_s > 2 ? static_cast<std::size_t>((s.height_s - 1) / 2) : 0;
    parallel_for(rows, workers, [&](std::size_t k) {
        const int y = 2 * static_cast<int>(k) + 1;
        for (int x = 1; x <= s.width_s - 2; x += 2) {
            const int sum = int(s.edge(x + 1, y)) + int(s.edge(x - 1, y)) + int(s.edge(x, y + 1)) +
                            int(s.edge(x, y - 1));
            s.junctions[s.index(x, y)] = sum > 2 ? 1 : 0;
        }
    });
    return s;
}

SubpixelBoundaryImage extract_junctions(const LabelImage& labels, unsigned workers) {
    return mark_junctions(fill_gaps(build_subpixel_edges(labels, workers), workers), workers);
}

PixelPair pixels_across(SubPoint m) {
    if (m.x % 2 != 0) {
        return {(m.x - 1) / 2, m.y / 2, (m.x + 1) / 2, m.y / 2};
    }
    return {m.x / 2, (m.y - 1) / 2, m.x / 2, (m.y + 1) / 2};
}

}  // namespace vectorforge

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numeric>
#include <queue>
#include <tuple>

#include "vectorforge/segmentation.hpp"

namespace vectorforge {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSet::find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        const std::uint32_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

void DisjointSet::attach(std::uint32_t child, std::uint32_t root) {
    parent_[child] = root;
    size_[root] += size_[child];
}

LabelImage normalize_labels(int width, int height, std::span<const std::int32_t> raw) {
    LabelImage out;
    out.width = width;
    out.height = height;
    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    out.labels.assign(n, -1);

    std::vector<std::size_t> stack;
    std::int32_t next_id = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (out.labels[start] >= 0) continue;
        const std::int32_t raw_label = raw[start];
        out.labels[start] = next_id;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            const int x = static_cast<int>(i % width);
            const int y = static_cast<int>(i / width);
            auto visit = [&](std::size_t j) {
                if (out.labels[j] < 0 && raw[j] == raw_label) {
                    out.labels[j] = next_id;
                    stack.push_back(j);
                }
            };
            if (x > 0) visit(i - 1);
            if (x + 1 < width) visit(i + 1);
            if (y > 0) visit(i - width);
            if (y + 1 < height) visit(i + width);
        }
        ++next_id;
    }
    out.region_count = next_id;
    return out;
}

std::vector<PixelEdge> sorted_pixel_edges(const RasterImage& img) {
    const int w = img.width();
    const int h = img.height();
    // Counting sort on weight keeps generation order (index, south, east) within a bucket.
    std::vector<std::uint32_t> counts(257, 0);
    auto for_each_edge = [&](auto&& emit) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const auto i = static_cast<std::uint32_t>(img.index(x, y));
                if (y + 1 < h) {
                    emit(i, static_cast<std::uint32_t>(i + w),
                         channel_abs_diff(img.at(x, y), img.at(x, y + 1)));
                }
                if (x + 1 < w) {
                    emit(i, i + 1, channel_abs_diff(img.at(x, y), img.at(x + 1, y)));
                }
            }
        }
    };
    for_each_edge([&](std::uint32_t, std::uint32_t, int wgt) { ++counts[wgt + 1]; });
    for (std::size_t k = 1; k < counts.size(); ++k) counts[k] += counts[k - 1];
    std::vector<PixelEdge> edges(counts.back());
    for_each_edge([&](std::uint32_t a, std::uint32_t b, int wgt) {
        edges[counts[wgt]++] = PixelEdge{a, b, wgt};
    });
    return edges;
}

LabelImage merge_small_regions(const RasterImage& img, const LabelImage& labels,
                               double min_region_frac) {
    const double min_pixels = min_region_frac * static_cast<double>(labels.labels.size());
    if (labels.region_count <= 1 || min_pixels <= 1.0) return labels;

    const auto regions = static_cast<std::size_t>(labels.region_count);
    std::vector<std::array<double, 3>> sums(regions, {0.0, 0.0, 0.0});
    std::vector<std::size_t> counts(regions, 0);
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        const auto r = static_cast<std::size_t>(labels.labels[i]);
        const Rgb p = img.pixels()[i];
        sums[r][0] += p.r;
        sums[r][1] += p.g;
        sums[r][2] += p.b;
        ++counts[r];
    }

    std::vector<std::vector<std::uint32_t>> adjacency(regions);
    const int w = labels.width;
    const int h = labels.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto a = static_cast<std::uint32_t>(labels.at(x, y));
            if (x + 1 < w) {
                const auto b = static_cast<std::uint32_t>(labels.at(x + 1, y));
                if (a != b) {
                    adjacency[a].push_back(b);
                    adjacency[b].push_back(a);
                }
            }
            if (y + 1 < h) {
                const auto b = static_cast<std::uint32_t>(labels.at(x, y + 1));
                if (a != b) {
                    adjacency[a].push_back(b);
                    adjacency[b].push_back(a);
                }
            }
        }
    }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    DisjointSet sets(regions);
    using Entry = std::tuple<std::size_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (std::uint32_t r = 0; r < regions; ++r) queue.emplace(counts[r], r);

    while (!queue.empty()) {
        const auto [count, r] = queue.top();
        queue.pop();
        if (sets.find(r) != r || counts[r] != count) continue;
        if (static_cast<double>(count) >= min_pixels) break;

        // Resolve and deduplicate current neighbors.
        std::vector<std::uint32_t> neighbors;
        neighbors.reserve(adjacency[r].size());
        for (std::uint32_t n : adjacency[r]) {
            const std::uint32_t root = sets.find(n);
            if (root != r) neighbors.push_back(root);
        }
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
        adjacency[r] = neighbors;
        if (neighbors.empty()) continue;

        std::uint32_t best = neighbors.front();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::uint32_t n : neighbors) {
            double d = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double diff = sums[r][c] / static_cast<double>(counts[r]) -
                                    sums[n][c] / static_cast<double>(counts[n]);
                d += diff * diff;
            }
            if (d < best_dist) {
                best_dist = d;
                best = n;
            }
        }

        // Keep the root with the longer adjacency list to bound copying.
        std::uint32_t root = best;
        std::uint32_t child = r;
        if (adjacency[child].size() > adjacency[root].size()) std::swap(root, child);
        sets.attach(child, root);
        for (int c = 0; c < 3; ++c) sums[root][c] += sums[child][c];
        counts[root] += counts[child];
        adjacency[root].insert(adjacency[root].end(), adjacency[child].begin(),
                               adjacency[child].end());
        adjacency[child].clear();
        adjacency[child].shrink_to_fit();
        queue.emplace(counts[root], root);
    }

    std::vector<std::int32_t> merged(labels.labels.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        merged[i] = static_cast<std::int32_t>(sets.find(static_cast<std::uint32_t>(labels.labels[i])));
    }
    return normalize_labels(labels.width, labels.height, merged);
}

}  // namespace vectorforge

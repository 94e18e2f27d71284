#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// library's boundary or segmentation code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vectorforge/pipeline.hpp"
#include "vectorforge/raster.hpp"
#include "vectorforge/segmentation.hpp"

namespace vftest {

using vectorforge::LabelImage;
using vectorforge::RasterImage;
using vectorforge::Rgb;

inline Rgb gray(int v) { return Rgb{std::uint8_t(v), std::uint8_t(v), std::uint8_t(v)}; }

/// Row-major image from a list of rows of gray levels.
inline RasterImage gray_image(const std::vector<std::vector<int>>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    RasterImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = gray(rows[y][x]);
    return img;
}

/// Raw label grid; not normalized.
inline std::vector<std::int32_t> flatten(const std::vector<std::vector<int>>& rows) {
    std::vector<std::int32_t> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

inline LabelImage labels_of(const std::vector<std::vector<int>>& rows) {
    const auto raw = flatten(rows);
    return vectorforge::normalize_labels(static_cast<int>(rows.front().size()),
                                         static_cast<int>(rows.size()), raw);
}

/// 4-connected components by explicit-stack flood fill, ids in row-major
/// order of first pixel.
inline std::vector<int> components4(int w, int h, const std::vector<std::int32_t>& raw, int* count = nullptr) {
    std::vector<int> comp(raw.size(), -1);
    int next = 0;
    for (int start = 0; start < w * h; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int x = p % w, y = p / w;
            const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
            for (const auto& n : nb) {
                if (n[0] < 0 || n[1] < 0 || n[0] >= w || n[1] >= h) continue;
                const int q = n[1] * w + n[0];
                if (comp[q] < 0 && raw[q] == raw[p]) {
                    comp[q] = next;
                    stack.push_back(q);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

/// Brute-force boundary image: edge, gap-fill and junction rules evaluated
/// position by position from their definitions.
struct BruteS {
    int ws = 0, hs = 0;
    std::vector<int> raw, edge, junction;  // raw: before gap filling
    int e(int x, int y) const { return (x < 0 || y < 0 || x >= ws || y >= hs) ? 0 : edge[y * ws + x]; }
};

inline BruteS brute_force_s(const LabelImage& L) {
    BruteS s;
    s.ws = 2 * L.width - 1;
    s.hs = 2 * L.height - 1;
    s.edge.assign(s.ws * s.hs, 0);
    s.junction.assign(s.ws * s.hs, 0);
    for (int y = 0; y < s.hs; ++y) {
        for (int x = 0; x < s.ws; ++x) {
            int v = 0;
            if (x % 2 == 1 && y % 2 == 0) v = L.at((x - 1) / 2, y / 2) != L.at((x + 1) / 2, y / 2);
            if (x % 2 == 0 && y % 2 == 1) v = L.at(x / 2, (y - 1) / 2) != L.at(x / 2, (y + 1) / 2);
            s.edge[y * s.ws + x] = v;
        }
    }
    s.raw = s.edge;
    std::vector<int> filled = s.edge;
    for (int y = 1; y < s.hs; y += 2)
        for (int x = 1; x < s.ws; x += 2)
            if ((s.e(x - 1, y) && s.e(x + 1, y)) || (s.e(x, y - 1) && s.e(x, y + 1))) filled[y * s.ws + x] = 1;
    s.edge = filled;
    for (int y = 1; y < s.hs; y += 2)
        for (int x = 1; x < s.ws; x += 2)
            if (s.e(x - 1, y) + s.e(x + 1, y) + s.e(x, y - 1) + s.e(x, y + 1) > 2) s.junction[y * s.ws + x] = 1;
    return s;
}

/// Boundary loops of region r: the outer one plus one per 8-connected
/// component of the complement that does not reach the image border.
inline int region_loop_count(const LabelImage& L, int r) {
    const int w = L.width, h = L.height;
    std::vector<int> seen(static_cast<std::size_t>(w * h), 0);
    int holes = 0;
    for (int start = 0; start < w * h; ++start) {
        if (seen[start] || L.labels[start] == r) continue;
        bool border = false;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int x = p % w, y = p / w;
            if (x == 0 || y == 0 || x == w - 1 || y == h - 1) border = true;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    const int q = ny * w + nx;
                    if (!seen[q] && L.labels[q] != r) {
                        seen[q] = 1;
                        stack.push_back(q);
                    }
                }
        }
        if (!border) ++holes;
    }
    return 1 + holes;
}

/// Closed boundary curves: 8-connected components of the brute-force edge
/// set that contain no junction and never reach the outer rows or columns.
inline int closed_curve_count(const BruteS& s) {
    std::vector<int> seen(s.edge.size(), 0);
    int count = 0;
    for (int start = 0; start < s.ws * s.hs; ++start) {
        if (seen[start] || !s.edge[start]) continue;
        bool open = false;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int x = p % s.ws, y = p / s.ws;
            if (s.junction[p] || x == 0 || y == 0 || x == s.ws - 1 || y == s.hs - 1) open = true;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = x + dx, ny = y + dy;
                    if (nx < 0 || ny < 0 || nx >= s.ws || ny >= s.hs) continue;
                    const int q = ny * s.ws + nx;
                    if (!seen[q] && s.edge[q]) {
                        seen[q] = 1;
                        stack.push_back(q);
                    }
                }
        }
        if (!open) ++count;
    }
    return count;
}

/// Random label grid with `colors` values; `blocky` grows patches so the
/// result has holes and junctions rather than pure noise.
inline LabelImage random_labels(std::mt19937& rng, int w, int h, int colors, bool blocky) {
    std::uniform_int_distribution<int> pick(0, colors - 1);
    std::vector<std::int32_t> raw(static_cast<std::size_t>(w * h));
    for (auto& v : raw) v = pick(rng);
    if (blocky) {
        std::uniform_int_distribution<int> coin(0, 2);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const int c = coin(rng);
                if (c == 0 && x > 0) raw[y * w + x] = raw[y * w + x - 1];
                if (c == 1 && y > 0) raw[y * w + x] = raw[(y - 1) * w + x];
            }
    }
    return vectorforge::normalize_labels(w, h, raw);
}

/// Image painting each label with a distinct deterministic color.
inline RasterImage image_from_labels(const LabelImage& L) {
    RasterImage img(L.width, L.height);
    for (int y = 0; y < L.height; ++y)
        for (int x = 0; x < L.width; ++x) {
            const unsigned v = static_cast<unsigned>(L.at(x, y)) * 2654435761u;
            img.at(x, y) = Rgb{std::uint8_t(v >> 24), std::uint8_t(v >> 16), std::uint8_t(v >> 8)};
        }
    return img;
}

/// Smooth color field with a few solid shapes; deterministic in (w, h, seed).
inline RasterImage synthetic_scene(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    struct Blob {
        double cx, cy, r;
        Rgb c;
    };
    std::vector<Blob> blobs;
    for (int i = 0; i < 6; ++i)
        blobs.push_back({U(rng) * w, U(rng) * h, (0.08 + 0.15 * U(rng)) * std::min(w, h),
                         Rgb{std::uint8_t(U(rng) * 255), std::uint8_t(U(rng) * 255), std::uint8_t(U(rng) * 255)}});
    RasterImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            Rgb c{std::uint8_t(40 + 150 * x / w), std::uint8_t(60 + 120 * y / h), std::uint8_t(110)};
            for (const Blob& b : blobs) {
                const double dx = x - b.cx, dy = y - b.cy;
                if (dx * dx + dy * dy < b.r * b.r) c = b.c;
            }
            // Mild texture so segmenters see non-constant regions.
            const int n = static_cast<int>((x * 37 + y * 91 + (x * y) % 13) % 9) - 4;
            auto clamp = [](int v) { return std::uint8_t(std::min(255, std::max(0, v))); };
            img.at(x, y) = Rgb{clamp(c.r + n), clamp(c.g + n), clamp(c.b + n)};
        }
    return img;
}

}  // namespace vftest

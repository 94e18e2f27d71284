#include <algorithm>
#include <cmath>
#include <limits>

#include "vectorforge/eval.hpp"
#include "vectorforge/parallel.hpp"

namespace vectorforge {

namespace {

constexpr double kFlatness = 0.1;
constexpr int kMaxDepth = 16;

Point2 midpoint(Point2 a, Point2 b) { return 0.5 * (a + b); }

double norm(Point2 p) { return std::hypot(p.x, p.y); }

// Symmetric in the control points, so a reversed curve yields the same
// vertices in reverse order and shared boundaries rasterize identically.
void flatten_cubic(Point2 a, Point2 b, Point2 c, Point2 d, int depth, std::vector<Point2>& out) {
    const Point2 dd1 = (a + c) - 2.0 * b;
    const Point2 dd2 = (b + d) - 2.0 * c;
    if (depth >= kMaxDepth || 0.75 * std::max(norm(dd1), norm(dd2)) <= kFlatness) {
        out.push_back(d);
        return;
    }
    const Point2 ab = midpoint(a, b);
    const Point2 bc = midpoint(b, c);
    const Point2 cd = midpoint(c, d);
    const Point2 abc = midpoint(ab, bc);
    const Point2 bcd = midpoint(bc, cd);
    const Point2 mid = midpoint(abc, bcd);
    flatten_cubic(a, ab, abc, mid, depth + 1, out);
    flatten_cubic(mid, bcd, cd, d, depth + 1, out);
}

// Lower endpoint first; `winding` is +1 when the path runs downward.
struct Edge {
    Point2 lo;
    Point2 hi;
    int winding;
};

struct PreparedPath {
    std::vector<Edge> edges;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    Rgb fill;
};

PreparedPath prepare(const BezierPath& path) {
    PreparedPath out;
    out.fill = path.fill;
    const std::vector<Point2> poly = flatten_path(path);
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        Point2 a = poly[i];
        Point2 b = poly[i + 1];
        if (a.y == b.y) continue;
        int winding = 1;
        if (b.y < a.y) {
            std::swap(a, b);
            winding = -1;
        }
        out.edges.push_back({a, b, winding});
        out.y_min = std::min(out.y_min, a.y);
        out.y_max = std::max(out.y_max, b.y);
    }
    return out;
}

struct Crossing {
    double x;
    int winding;
};

}  // namespace

std::vector<Point2> flatten_path(const BezierPath& path) {
    std::vector<Point2> out;
    if (path.elements.empty()) return out;
    out.push_back(path.elements.front().start());
    for (const PathElement& e : path.elements) {
        if (e.kind == PathElement::Kind::line) {
            out.push_back(e.end());
        } else {
            flatten_cubic(e.curve.p_start, e.curve.c1, e.curve.c2, e.curve.p_end, 0, out);
        }
    }
    if (!(out.back() == out.front())) out.push_back(out.front());
    return out;
}

Rasterization rasterize_with_coverage(const SvgDocument& doc, int width, int height, unsigned workers) {
    const Rgb background = doc.paths.empty() ? Rgb{} : doc.paths.front().fill;
    Rasterization out{RasterImage(width, height, background),
                      std::vector<std::uint8_t>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0)};

    std::vector<PreparedPath> paths(doc.paths.size());
    parallel_for(paths.size(), workers, [&](std::size_t i) { paths[i] = prepare(doc.paths[i]); });

    parallel_for(static_cast<std::size_t>(height), workers, [&](std::size_t row) {
        const double yc = static_cast<double>(row) + 0.5;
        std::vector<Crossing> crossings;
        for (const PreparedPath& path : paths) {
            if (yc < path.y_min || yc >= path.y_max) continue;
            crossings.clear();
            for (const Edge& e : path.edges) {
                if (yc < e.lo.y || yc >= e.hi.y) continue;
                const double x = e.lo.x + (yc - e.lo.y) * (e.hi.x - e.lo.x) / (e.hi.y - e.lo.y);
                crossings.push_back({x, e.winding});
            }
            std::sort(crossings.begin(), crossings.end(),
                      [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
            int winding = 0;
            for (std::size_t k = 0; k + 1 < crossings.size(); ++k) {
                winding += crossings[k].winding;
                if (winding == 0) continue;
                // Pixel i is inside when its center i + 0.5 lies in [x0, x1).
                const double x0 = crossings[k].x;
                const double x1 = crossings[k + 1].x;
                const int first = std::max(0, static_cast<int>(std::ceil(x0 - 0.5)));
                const int last = std::min(width, static_cast<int>(std::ceil(x1 - 0.5)));
                for (int i = first; i < last; ++i) {
                    out.image.at(i, static_cast<int>(row)) = path.fill;
                    out.covered[row * static_cast<std::size_t>(width) + static_cast<std::size_t>(i)] = 1;
                }
            }
        }
    });
    return out;
}

RasterImage rasterize(const SvgDocument& doc, int width, int height, unsigned workers) {
    return rasterize_with_coverage(doc, width, height, workers).image;
}

}  // namespace vectorforge

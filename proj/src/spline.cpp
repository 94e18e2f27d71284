#include "vectorforge/spline.hpp"

#include <algorithm>
#include <cmath>

namespace vectorforge {

BezierSegment reversed(const BezierSegment& s) { return {s.p_end, s.c2, s.c1, s.p_start}; }

Point2 eval_spline(double u, const Mat4& m, const std::array<Point2, 4>& p) {
    const std::array<double, 4> basis = {u * u * u, u * u, u, 1.0};
    Point2 out;
    for (std::size_t col = 0; col < 4; ++col) {
        double weight = 0.0;
        for (std::size_t row = 0; row < 4; ++row) weight += basis[row] * m[row][col];
        out.x += weight * p[col].x;
        out.y += weight * p[col].y;
    }
    return out;
}

BezierSegment catmull_segment_to_bezier(const std::array<Point2, 4>& pc) {
    return {pc[1],
            -1.0 / 6.0 * pc[0] + pc[1] + 1.0 / 6.0 * pc[2],
            1.0 / 6.0 * pc[1] + pc[2] - 1.0 / 6.0 * pc[3],
            pc[2]};
}

Point2 enforce_c1(Point2 prev_c2, Point2 joint) { return 2.0 * joint - prev_c2; }

ControlPolyline sample_control_points(const BoundaryPiece& piece, double resolution) {
    return sample_control_points(piece.points, piece.kind == PieceKind::closed, resolution);
}

ControlPolyline sample_control_points(std::span<const SubPoint> points, bool closed,
                                      double resolution) {
    const std::size_t n = points.size();
    std::size_t stride = static_cast<std::size_t>(std::max(1.0, std::round(1.0 / resolution)));
    ControlPolyline out;
    out.closed = closed;
    if (closed) {
        if (n >= 3) stride = std::min(stride, n / 3);
        stride = std::max<std::size_t>(stride, 1);
        for (std::size_t i = 0; i < n; i += stride) out.points.push_back(to_point(points[i]));
        out.points.push_back(to_point(points[0]));
        return out;
    }
    for (std::size_t i = 0; i + 1 < n; i += stride) out.points.push_back(to_point(points[i]));
    out.points.push_back(to_point(points[n - 1]));
    return out;
}

namespace {

// Handle offsets live on a 2^-30 grid. With integer joints of magnitude
// below 2^22, joint ± offset and the differences back to the joint are then
// exact, so mirrored handles cancel bit for bit.
Point2 snap_offset(Point2 d) {
    auto snap = [](double v) { return std::ldexp(std::nearbyint(std::ldexp(v, 30)), -30); };
    return {snap(d.x), snap(d.y)};
}

// Bezier handles in offset form: c1 = p0 + (p1 - p_prev)/6, c2 = p1 + (p0 - p_next)/6.
Point2 first_handle(Point2 prev, Point2 p0, Point2 p1) { return p0 + snap_offset((p1 - prev) / 6.0); }
Point2 second_handle(Point2 p0, Point2 p1, Point2 next) { return p1 + snap_offset((p0 - next) / 6.0); }

}  // namespace

std::vector<BezierSegment> fit_path(const ControlPolyline& polyline) {
    const auto& pts = polyline.points;
    std::vector<BezierSegment> out;
    if (pts.size() < 2) return out;
    if (pts.size() == 2) {
        const Point2 a = pts[0];
        const Point2 b = pts[1];
        out.push_back({a, a + (b - a) / 3.0, a + 2.0 * (b - a) / 3.0, b});
        return out;
    }

    const std::size_t n = polyline.closed ? pts.size() - 1 : pts.size();  // distinct points
    const std::size_t segments = polyline.closed ? n : n - 1;
    auto at = [&](std::ptrdiff_t i) -> Point2 {
        if (polyline.closed) {
            const auto m = static_cast<std::ptrdiff_t>(n);
            return pts[static_cast<std::size_t>(((i % m) + m) % m)];
        }
        i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 1);
        return pts[static_cast<std::size_t>(i)];
    };

    out.reserve(segments);
    for (std::size_t s = 0; s < segments; ++s) {
        const auto i = static_cast<std::ptrdiff_t>(s);
        const Point2 p0 = at(i);
        const Point2 p1 = at(i + 1);
        const Point2 c1 = s == 0 ? first_handle(at(i - 1), p0, p1) : enforce_c1(out.back().c2, p0);
        out.push_back({p0, c1, second_handle(p0, p1, at(i + 2)), p1});
    }
    return out;
}

}  // namespace vectorforge

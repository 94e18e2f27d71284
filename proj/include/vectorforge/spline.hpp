#pragma once

#include <array>
#include <span>
#include <vector>

#include "vectorforge/boundary.hpp"

namespace vectorforge {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
};

inline Point2 to_point(SubPoint p) { return {double(p.x), double(p.y)}; }

/// Cubic Bézier piece [p_start, c1, c2, p_end].
struct BezierSegment {
    Point2 p_start;
    Point2 c1;
    Point2 c2;
    Point2 p_end;

    friend bool operator==(const BezierSegment&, const BezierSegment&) = default;
};

BezierSegment reversed(const BezierSegment& s);

using Mat4 = std::array<std::array<double, 4>, 4>;

// Characteristic matrices for C(u) = U M P^T with U = [u^3 u^2 u 1].
inline constexpr Mat4 kCatmullRom = {{{-0.5, 1.5, -1.5, 0.5},
                                      {1.0, -2.5, 2.0, -0.5},
                                      {-0.5, 0.0, 0.5, 0.0},
                                      {0.0, 1.0, 0.0, 0.0}}};
inline constexpr Mat4 kBezier = {{{-1.0, 3.0, -3.0, 1.0},
                                  {3.0, -6.0, 3.0, 0.0},
                                  {-3.0, 3.0, 0.0, 0.0},
                                  {1.0, 0.0, 0.0, 0.0}}};

/// Evaluates U·M·P^T.
Point2 eval_spline(double u, const Mat4& m, const std::array<Point2, 4>& p);

/// Bézier piece tracing the Catmull-Rom segment between pc[1] and pc[2].
BezierSegment catmull_segment_to_bezier(const std::array<Point2, 4>& pc);

/// First handle of the next segment, mirrored through the shared joint.
Point2 enforce_c1(Point2 prev_c2, Point2 joint);

struct ControlPolyline {
    std::vector<Point2> points;  // closed: first point repeated at the end
    bool closed = false;
};

/// Endpoints plus every stride-th point, stride = max(1, round(1/resolution)).
/// Closed pieces keep at least three distinct control points.
ControlPolyline sample_control_points(const BoundaryPiece& piece, double resolution);
ControlPolyline sample_control_points(std::span<const SubPoint> points, bool closed,
                                      double resolution);

/// Catmull-Rom fit converted to Bézier pieces. Open ends duplicate the
/// terminal points as phantom neighbors; closed polylines wrap around.
/// The first segment takes its first handle from the conversion, every
/// later one from enforce_c1. A 2-point polyline yields one straight
/// segment with handles at the thirds.
std::vector<BezierSegment> fit_path(const ControlPolyline& polyline);

}  // namespace vectorforge

#include "vectorforge/svg_writer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "vectorforge/parallel.hpp"

namespace vectorforge {

Point2 scale_to_document(Point2 p) { return 0.5 * p; }

Point2 subpixel_to_document(Point2 s) { return scale_to_document({s.x + 1.0, s.y + 1.0}); }

namespace {

std::vector<std::vector<std::size_t>> pixels_by_region(const LabelImage& labels) {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(labels.region_count));
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        out[static_cast<std::size_t>(labels.labels[i])].push_back(i);
    }
    return out;
}

Rgb color_of(const RasterImage& img, const std::vector<std::size_t>& pixels, FillMode mode) {
    if (pixels.empty()) return {};
    const auto px = img.pixels();
    if (mode == FillMode::mean) {
        std::array<std::uint64_t, 3> sum{};
        for (std::size_t i : pixels) {
            sum[0] += px[i].r;
            sum[1] += px[i].g;
            sum[2] += px[i].b;
        }
        const std::uint64_t n = pixels.size();
        // floor(sum / n + 0.5) in integers.
        auto mean = [n](std::uint64_t s) { return static_cast<std::uint8_t>((2 * s + n) / (2 * n)); };
        return {mean(sum[0]), mean(sum[1]), mean(sum[2])};
    }
    // Channel-wise median; even counts take the lower middle element.
    std::array<std::array<std::size_t, 256>, 3> hist{};
    for (std::size_t i : pixels) {
        ++hist[0][px[i].r];
        ++hist[1][px[i].g];
        ++hist[2][px[i].b];
    }
    const std::size_t rank = (pixels.size() - 1) / 2;
    auto median = [rank](const std::array<std::size_t, 256>& h) {
        std::size_t seen = 0;
        for (std::size_t v = 0; v < 256; ++v) {
            seen += h[v];
            if (seen > rank) return static_cast<std::uint8_t>(v);
        }
        return std::uint8_t{255};
    };
    return {median(hist[0]), median(hist[1]), median(hist[2])};
}

}  // namespace

Rgb region_fill_color(const RasterImage& img, const LabelImage& labels, int region, FillMode mode) {
    std::vector<std::size_t> pixels;
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        if (labels.labels[i] == region) pixels.push_back(i);
    }
    return color_of(img, pixels, mode);
}

std::vector<Rgb> region_fill_colors(const RasterImage& img, const LabelImage& labels, FillMode mode) {
    const auto groups = pixels_by_region(labels);
    std::vector<Rgb> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(color_of(img, g, mode));
    return out;
}

std::vector<PathElement> piece_elements(const BoundaryPiece& piece, double resolution) {
    std::vector<PathElement> out;
    auto line = [&](Point2 a, Point2 b) {
        PathElement e;
        e.kind = PathElement::Kind::line;
        e.curve = {a, a, b, b};
        e.piece = piece.id;
        out.push_back(e);
    };

    if (piece.kind == PieceKind::frame) {
        for (std::size_t i = 0; i + 1 < piece.points.size(); ++i) {
            if (piece.points[i] == piece.points[i + 1]) continue;
            line(subpixel_to_document(to_point(piece.points[i])),
                 subpixel_to_document(to_point(piece.points[i + 1])));
        }
        return out;
    }
    if (piece.points.size() < 2) return out;

    ControlPolyline poly = sample_control_points(piece, resolution);
    for (Point2& p : poly.points) p = subpixel_to_document(p);
    if (poly.points.size() == 2) {
        line(poly.points[0], poly.points[1]);
        return out;
    }
    for (const BezierSegment& seg : fit_path(poly)) {
        PathElement e;
        e.kind = PathElement::Kind::cubic;
        e.curve = seg;
        e.piece = piece.id;
        out.push_back(e);
    }
    return out;
}

int inner_region(const BoundaryPiece& closed_piece) {
    // Shoelace sign: positive is clockwise on screen (y down).
    long long twice_area = 0;
    const auto& pts = closed_piece.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const SubPoint a = pts[i];
        const SubPoint b = pts[(i + 1) % pts.size()];
        twice_area += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
    }
    const int orientation = twice_area > 0 ? 1 : -1;
    return closed_piece.left_side == orientation ? closed_piece.left_region : closed_piece.right_region;
}

namespace {

void append_oriented(std::vector<PathElement>& dst, const std::vector<PathElement>& src, bool reverse) {
    if (!reverse) {
        dst.insert(dst.end(), src.begin(), src.end());
        return;
    }
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
        PathElement e = *it;
        e.curve = reversed(e.curve);
        dst.push_back(e);
    }
}

}  // namespace

SvgDocument build_document(const RasterImage& img, const LabelImage& labels,
                           const SubpixelBoundaryImage& s, const TraceResult& trace,
                           const DocumentOptions& options) {
    const std::size_t piece_count = trace.pieces.size();
    std::vector<std::vector<PathElement>> elements(piece_count);
    parallel_for(piece_count, options.workers, [&](std::size_t i) {
        elements[i] = piece_elements(trace.pieces[i], options.sampling_resolution);
    });

    const BoundaryChainer chainer(trace, s, labels);
    const auto regions = static_cast<std::size_t>(labels.region_count);
    std::vector<std::vector<PieceLoop>> loops(regions);
    parallel_for(regions, options.workers, [&](std::size_t r) { loops[r] = chainer.chain(static_cast<int>(r)); });

    const std::vector<Rgb> colors = region_fill_colors(img, labels, options.fill);

    SvgDocument doc;
    doc.width = img.width();
    doc.height = img.height();
    doc.stroke_width = options.stroke_width;

    for (std::size_t r = 0; r < regions; ++r) {
        for (const PieceLoop& loop : loops[r]) {
            BezierPath path;
            path.region = static_cast<int>(r);
            path.fill = colors[r];
            for (const OrientedPiece& op : loop) {
                append_oriented(path.elements, elements[static_cast<std::size_t>(op.id)], op.reversed);
            }
            doc.paths.push_back(std::move(path));
        }
    }

    std::vector<int> closed = trace.closed_ids;
    std::sort(closed.begin(), closed.end());
    for (int id : closed) {
        const BoundaryPiece& piece = trace.pieces[static_cast<std::size_t>(id)];
        BezierPath path;
        path.region = inner_region(piece);
        path.fill = colors[static_cast<std::size_t>(path.region)];
        path.is_hole = true;
        path.elements = elements[static_cast<std::size_t>(id)];
        doc.paths.push_back(std::move(path));
    }

    if (options.order == PaintOrder::by_region) {
        std::stable_sort(doc.paths.begin(), doc.paths.end(),
                         [](const BezierPath& a, const BezierPath& b) { return a.region < b.region; });
    }
    for (std::size_t i = 0; i < doc.paths.size(); ++i) doc.paths[i].z_rank = static_cast<int>(i);
    return doc;
}

std::string format_coordinate(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 3);
    std::string out(buf, res.ptr);
    while (!out.empty() && out.back() == '0') out.pop_back();
    if (!out.empty() && out.back() == '.') out.pop_back();
    if (out == "-0") out = "0";
    return out;
}

namespace {

void append_point(std::string& out, Point2 p) {
    out += format_coordinate(p.x);
    out += ',';
    out += format_coordinate(p.y);
}

std::string hex_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

}  // namespace

std::string path_data(const BezierPath& path) {
    std::string d;
    if (path.elements.empty()) return d;
    const Point2 start = path.elements.front().start();
    d += "M ";
    append_point(d, start);
    for (std::size_t i = 0; i < path.elements.size(); ++i) {
        const PathElement& e = path.elements[i];
        if (e.kind == PathElement::Kind::line) {
            // Z draws the closing line.
            if (i + 1 == path.elements.size() && e.end() == start) break;
            d += " L ";
            append_point(d, e.end());
        } else {
            d += " C ";
            append_point(d, e.curve.c1);
            d += ' ';
            append_point(d, e.curve.c2);
            d += ' ';
            append_point(d, e.curve.p_end);
        }
    }
    d += " Z";
    return d;
}

std::string serialize_svg(const SvgDocument& doc) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    const std::string w = std::to_string(doc.width);
    const std::string h = std::to_string(doc.height);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    for (const BezierPath& path : doc.paths) {
        const std::string d = path_data(path);
        if (d.empty()) continue;
        const std::string fill = hex_color(path.fill);
        out += "<path d=\"" + d + "\" fill=\"" + fill + "\"";
        if (doc.stroke_width) {
            out += " stroke=\"" + fill + "\" stroke-width=\"" + format_coordinate(*doc.stroke_width) + "\"";
        }
        out += "/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace vectorforge

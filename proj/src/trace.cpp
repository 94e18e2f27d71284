#include <algorithm>
#include <array>
#include <string>

#include "vectorforge/boundary.hpp"

// Structure of S after gap filling: every midpoint (one odd coordinate) lies
// on a unit edge between two pixels and has two ends, the pixel corners
// (odd/odd) at either side. At an end the boundary either leaves the grid
// (image border), passes through a filled corner, or turns at an unfilled
// corner to the one other midpoint touching it diagonally. Junction corners
// terminate pieces.

namespace vectorforge {

namespace {

constexpr std::array<SubPoint, 4> kJunctionOrder = {
    SubPoint{1, 0}, SubPoint{0, 1}, SubPoint{-1, 0}, SubPoint{0, -1}};  // E, S, W, N

bool is_corner(SubPoint p) { return (p.x & 1) && (p.y & 1); }

std::array<SubPoint, 2> ends_of(SubPoint m) {
    if (m.x & 1) return {SubPoint{m.x, m.y - 1}, SubPoint{m.x, m.y + 1}};
    return {SubPoint{m.x - 1, m.y}, SubPoint{m.x + 1, m.y}};
}

SubPoint other_end(SubPoint m, SubPoint end) {
    const auto e = ends_of(m);
    return e[0] == end ? e[1] : e[0];
}

[[noreturn]] void topology_failure(const std::string& what, SubPoint p) {
    throw TopologyError(what + " at (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
}

class Tracer {
public:
    Tracer(const SubpixelBoundaryImage& s, const LabelImage& labels)
        : s_(s), labels_(labels), visited_(s.edges.size(), 0) {
        out_.neighbors.assign(static_cast<std::size_t>(labels.region_count), {});
    }

    TraceResult run() {
        trace_from_junctions();
        trace_from_border();
        trace_closed();
        for (int y = 0; y < s_.height_s; ++y) {
            for (int x = 0; x < s_.width_s; ++x) {
                if (s_.edge(x, y) && !s_.junction(x, y) && !visited_[s_.index(x, y)]) {
                    topology_failure("unassigned edge point", {x, y});
                }
            }
        }
        return std::move(out_);
    }

private:
    struct WalkEnd {
        std::optional<SubPoint> frame;  // set when the walk left the grid
        bool closed = false;
    };

    void mark(SubPoint p) { visited_[s_.index(p.x, p.y)] = 1; }
    bool visited(SubPoint p) const { return visited_[s_.index(p.x, p.y)] != 0; }

    // Continues `points` from midpoint m leaving through corner `exit` until a
    // junction, the border, or (when closing) the start point is reached.
    WalkEnd walk(std::vector<SubPoint>& points, SubPoint m, SubPoint exit,
                 std::optional<SubPoint> close_at) {
        const std::size_t limit = s_.edges.size() + 4;
        for (std::size_t steps = 0; steps < limit; ++steps) {
            if (!s_.in_bounds(exit.x, exit.y)) return WalkEnd{exit, false};
            const bool filled = s_.edge(exit);
            if (filled && s_.junction(exit)) {
                points.push_back(exit);
                return WalkEnd{};
            }
            std::optional<SubPoint> next;
            for (const SubPoint d : kJunctionOrder) {
                const SubPoint c = exit + d;
                if (c != m && s_.edge(c)) {
                    if (next) topology_failure("ambiguous continuation", exit);
                    next = c;
                }
            }
            if (!next) topology_failure("dead end", exit);
            if (filled) {
                if (close_at && exit == *close_at) return WalkEnd{std::nullopt, true};
                points.push_back(exit);
                mark(exit);
            }
            if (close_at && *next == *close_at) return WalkEnd{std::nullopt, true};
            if (visited(*next)) topology_failure("revisited point", *next);
            points.push_back(*next);
            mark(*next);
            m = *next;
            exit = other_end(m, exit);
        }
        topology_failure("unterminated walk", m);
    }

    void trace_from_junctions() {
        for (int y = 1; y < s_.height_s; y += 2) {
            for (int x = 1; x < s_.width_s; x += 2) {
                const SubPoint j{x, y};
                if (!s_.junction(j)) continue;
                for (const SubPoint d : kJunctionOrder) {
                    const SubPoint m = j + d;
                    if (!s_.edge(m) || visited(m)) continue;
                    BoundaryPiece piece;
                    piece.points = {j, m};
                    mark(m);
                    const WalkEnd end = walk(piece.points, m, other_end(m, j), std::nullopt);
                    piece.start_port = Port{j, m};
                    if (end.frame) {
                        piece.kind = PieceKind::border;
                        piece.end_port = Port{piece.points.back(), *end.frame};
                    } else {
                        piece.kind = PieceKind::open;
                        piece.end_port = Port{piece.points.back(), piece.points[piece.points.size() - 2]};
                    }
                    finish(std::move(piece));
                }
            }
        }
    }

    void trace_from_border() {
        for (int y = 0; y < s_.height_s; ++y) {
            for (int x = 0; x < s_.width_s; ++x) {
                const SubPoint m{x, y};
                if (!s_.edge(m) || is_corner(m) || visited(m)) continue;
                const auto ends = ends_of(m);
                const bool out0 = !s_.in_bounds(ends[0].x, ends[0].y);
                const bool out1 = !s_.in_bounds(ends[1].x, ends[1].y);
                if (!out0 && !out1) continue;
                const SubPoint frame_start = out0 ? ends[0] : ends[1];
                BoundaryPiece piece;
                piece.kind = PieceKind::border;
                piece.points = {m};
                mark(m);
                const WalkEnd end = walk(piece.points, m, other_end(m, frame_start), std::nullopt);
                piece.start_port = Port{m, frame_start};
                if (end.frame) {
                    piece.end_port = Port{piece.points.back(), *end.frame};
                } else {
                    piece.end_port = Port{piece.points.back(), piece.points[piece.points.size() - 2]};
                }
                finish(std::move(piece));
            }
        }
    }

    void trace_closed() {
        for (int y = 0; y < s_.height_s; ++y) {
            for (int x = 0; x < s_.width_s; ++x) {
                const SubPoint m{x, y};
                if (!s_.edge(m) || s_.junction(m) || visited(m)) continue;
                if (is_corner(m)) topology_failure("closed loop starts at a corner", m);
                BoundaryPiece piece;
                piece.kind = PieceKind::closed;
                piece.points = {m};
                mark(m);
                const WalkEnd end = walk(piece.points, m, ends_of(m)[1], m);
                if (!end.closed) topology_failure("loop did not close", m);
                out_.closed_ids.push_back(static_cast<int>(out_.pieces.size()));
                finish(std::move(piece));
            }
        }
    }

    void finish(BoundaryPiece piece) {
        const auto& pts = piece.points;
        const std::size_t n = pts.size();
        std::size_t k = 0;
        while (k < n && is_corner(pts[k])) ++k;
        if (k == n) topology_failure("piece without midpoint", pts.front());

        const PixelPair pair = pixels_across(pts[k]);
        piece.left_region = labels_.at(pair.x0, pair.y0);
        piece.right_region = labels_.at(pair.x1, pair.y1);
        if (piece.left_region == piece.right_region) {
            topology_failure("piece does not separate two regions", pts[k]);
        }

        SubPoint dir;
        if (piece.kind == PieceKind::closed) {
            dir = pts[(k + 1) % n] - pts[k];
        } else if (k + 1 < n) {
            dir = pts[k + 1] - pts[k];
        } else if (k > 0) {
            dir = pts[k] - pts[k - 1];
        } else {
            dir = pts[0] - piece.start_port->via;
        }
        const SubPoint to_left{2 * pair.x0 - pts[k].x, 2 * pair.y0 - pts[k].y};
        const int cross = dir.x * to_left.y - dir.y * to_left.x;
        piece.left_side = cross > 0 ? 1 : -1;

        piece.id = static_cast<int>(out_.pieces.size());
        if (piece.kind != PieceKind::closed) {
            out_.neighbors[static_cast<std::size_t>(piece.left_region)].push_back(piece.id);
            out_.neighbors[static_cast<std::size_t>(piece.right_region)].push_back(piece.id);
        }
        out_.pieces.push_back(std::move(piece));
    }

    const SubpixelBoundaryImage& s_;
    const LabelImage& labels_;
    std::vector<std::uint8_t> visited_;
    TraceResult out_;
};

// Clockwise perimeter parameter of a frame point, starting at (-1,-1).
class Frame {
public:
    Frame(int width_s, int height_s) : ws_(width_s), hs_(height_s) {}

    int perimeter() const { return 2 * (ws_ + 1) + 2 * (hs_ + 1); }

    int param(SubPoint f) const {
        if (f.y == -1) return f.x + 1;
        if (f.x == ws_) return (ws_ + 1) + (f.y + 1);
        if (f.y == hs_) return (ws_ + 1) + (hs_ + 1) + (ws_ - f.x);
        return 2 * (ws_ + 1) + (hs_ + 1) + (hs_ - f.y);
    }

    SubPoint point(int t) const {
        t = ((t % perimeter()) + perimeter()) % perimeter();
        if (t <= ws_ + 1) return {t - 1, -1};
        t -= ws_ + 1;
        if (t <= hs_ + 1) return {ws_, t - 1};
        t -= hs_ + 1;
        if (t <= ws_ + 1) return {ws_ - t, hs_};
        t -= ws_ + 1;
        return {-1, hs_ - t};
    }

    std::array<int, 4> corner_params() const {
        return {0, ws_ + 1, (ws_ + 1) + (hs_ + 1), 2 * (ws_ + 1) + (hs_ + 1)};
    }

    // Grid position just inside the frame next to frame parameter t.
    SubPoint inside(int t) const {
        const SubPoint f = point(t);
        return {std::clamp(f.x, 0, ws_ - 1), std::clamp(f.y, 0, hs_ - 1)};
    }

private:
    int ws_;
    int hs_;
};

}  // namespace

TraceResult trace_pieces(const SubpixelBoundaryImage& s, const LabelImage& labels) {
    return Tracer(s, labels).run();
}

void add_border_pieces(const LabelImage& labels, TraceResult& trace) {
    const int ws = 2 * labels.width - 1;
    const int hs = 2 * labels.height - 1;
    const Frame frame(ws, hs);
    auto outside = [&](SubPoint p) { return p.x < 0 || p.y < 0 || p.x >= ws || p.y >= hs; };

    struct Hit {
        int t;
        Port port;
    };
    std::vector<Hit> hits;
    for (const BoundaryPiece& piece : trace.pieces) {
        for (const auto& port : {piece.start_port, piece.end_port}) {
            if (port && outside(port->via)) hits.push_back({frame.param(port->via), *port});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });

    auto push_piece = [&](BoundaryPiece piece, int region) {
        piece.id = static_cast<int>(trace.pieces.size());
        piece.kind = PieceKind::frame;
        piece.left_region = region;
        piece.right_region = -1;
        piece.left_side = 1;  // clockwise walk keeps the image interior on the +1 side
        trace.neighbors[static_cast<std::size_t>(region)].push_back(piece.id);
        trace.pieces.push_back(std::move(piece));
    };

    if (hits.empty()) {
        BoundaryPiece piece;
        for (int t : frame.corner_params()) piece.points.push_back(frame.point(t));
        piece.points.push_back(piece.points.front());
        push_piece(std::move(piece), labels.at(0, 0));
        return;
    }

    const int perimeter = frame.perimeter();
    for (std::size_t k = 0; k < hits.size(); ++k) {
        const Hit& from = hits[k];
        const Hit& to = hits[(k + 1) % hits.size()];
        int span = to.t - from.t;
        if (span <= 0) span += perimeter;

        BoundaryPiece piece;
        piece.points = {from.port.at, from.port.via};
        std::vector<std::pair<int, SubPoint>> corners;
        for (int c : frame.corner_params()) {
            int offset = c - from.t;
            if (offset <= 0) offset += perimeter;
            if (offset < span) corners.emplace_back(offset, frame.point(c));
        }
        std::sort(corners.begin(), corners.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [offset, p] : corners) piece.points.push_back(p);
        piece.points.push_back(to.port.via);
        piece.points.push_back(to.port.at);
        piece.start_port = from.port;
        piece.end_port = to.port;

        const SubPoint inner = frame.inside(from.t + 1);
        push_piece(std::move(piece), labels.at(inner.x / 2, inner.y / 2));
    }
}

}  // namespace vectorforge

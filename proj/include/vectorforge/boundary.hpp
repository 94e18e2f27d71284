#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vectorforge/segmentation.hpp"

namespace vectorforge {

/// Integer coordinate in subpixel (S) space. Pixel (i, j) sits at (2i, 2j);
/// odd coordinates lie between pixels. Frame points of synthetic border
/// pieces use -1 and width_s / height_s, one step outside the grid.
struct SubPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const SubPoint&, const SubPoint&) = default;
    friend SubPoint operator+(SubPoint a, SubPoint b) { return {a.x + b.x, a.y + b.y}; }
    friend SubPoint operator-(SubPoint a, SubPoint b) { return {a.x - b.x, a.y - b.y}; }
};

/// Subpixel boundary image of size (2W-1)×(2H-1) with its junction mask.
struct SubpixelBoundaryImage {
    int width_s = 0;
    int height_s = 0;
    std::vector<std::uint8_t> edges;
    std::vector<std::uint8_t> junctions;

    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_s && y < height_s; }
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_s) +
               static_cast<std::size_t>(x);
    }
    bool edge(int x, int y) const { return in_bounds(x, y) && edges[index(x, y)] != 0; }
    bool junction(int x, int y) const { return in_bounds(x, y) && junctions[index(x, y)] != 0; }
    bool edge(SubPoint p) const { return edge(p.x, p.y); }
    bool junction(SubPoint p) const { return junction(p.x, p.y); }
};

/// Marks positions between differently labeled 4-neighbors.
SubpixelBoundaryImage build_subpixel_edges(const LabelImage& labels, unsigned workers = 1);
/// Sets odd/odd positions whose left+right or top+bottom neighbors are edges.
SubpixelBoundaryImage fill_gaps(SubpixelBoundaryImage s, unsigned workers = 1);
/// Flags odd/odd positions whose 4-neighbor edge count exceeds 2.
SubpixelBoundaryImage mark_junctions(SubpixelBoundaryImage s, unsigned workers = 1);

/// All three steps.
SubpixelBoundaryImage extract_junctions(const LabelImage& labels, unsigned workers = 1);

enum class PieceKind {
    open,    // junction to junction
    closed,  // cycle without junctions; points hold the cycle once
    border,  // traced piece with at least one end on the image border
    frame,   // synthetic piece along the image frame
};

/// Where a piece end attaches: the end point and the point it is reached
/// through (the adjacent piece point for junction ends, the frame point for
/// ends on the image border).
struct Port {
    SubPoint at;
    SubPoint via;
    friend bool operator==(const Port&, const Port&) = default;
};

struct BoundaryPiece {
    int id = 0;
    PieceKind kind = PieceKind::open;
    std::vector<SubPoint> points;
    int left_region = -1;
    int right_region = -1;
    /// Side (+1 / -1) on which left_region lies when walking the points in
    /// order: sign of cross(direction, pixel - point).
    int left_side = 1;
    std::optional<Port> start_port;
    std::optional<Port> end_port;

    bool separates(int region) const { return left_region == region || right_region == region; }
};

/// Per region, ids of the open, border and frame pieces enclosing it.
using RegionNeighborList = std::vector<std::vector<int>>;

struct TraceResult {
    std::vector<BoundaryPiece> pieces;  // indexed by id
    std::vector<int> closed_ids;
    RegionNeighborList neighbors;
};

/// Traces junction-to-junction pieces, then border pieces, then closed loops.
/// Throws TopologyError if an edge point is left unassigned.
TraceResult trace_pieces(const SubpixelBoundaryImage& s, const LabelImage& labels);

/// Appends one frame piece per frame arc between consecutive border hits
/// (or one piece for the whole frame) to the regions touching the border.
void add_border_pieces(const LabelImage& labels, TraceResult& trace);

/// The pixel (in label coordinates) on the given side of a midpoint.
struct PixelPair {
    int x0, y0, x1, y1;
};
PixelPair pixels_across(SubPoint midpoint);

}  // namespace vectorforge

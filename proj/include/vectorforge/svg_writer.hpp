#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vectorforge/boundary.hpp"
#include "vectorforge/raster.hpp"
#include "vectorforge/spline.hpp"

namespace vectorforge {

enum class FillMode { mean, median };

/// holes_last: non-hole paths by region id, then hole paths by piece id.
/// by_region: every path ordered by the id of the region it fills, which
/// keeps regions nested inside a hole visible.
enum class PaintOrder { holes_last, by_region };

struct PathElement {
    enum class Kind { line, cubic };
    Kind kind = Kind::line;
    BezierSegment curve;  // a line uses p_start / p_end only
    int piece = -1;       // boundary piece the element was fitted on

    Point2 start() const { return curve.p_start; }
    Point2 end() const { return curve.p_end; }
};

/// One closed region boundary, drawn as one SVG path.
struct BezierPath {
    int region = 0;
    std::vector<PathElement> elements;
    Rgb fill;
    bool is_hole = false;
    int z_rank = 0;
};

struct SvgDocument {
    int width = 0;
    int height = 0;
    std::vector<BezierPath> paths;
    std::optional<double> stroke_width;
};

struct OrientedPiece {
    int id = 0;
    bool reversed = false;
    friend bool operator==(const OrientedPiece&, const OrientedPiece&) = default;
};
using PieceLoop = std::vector<OrientedPiece>;

/// Chains the pieces of each region's neighbor list into closed loops by
/// matching piece end ports. At a junction the walk turns to the next edge
/// around the region, so loops follow the region's boundary components and
/// always keep the region on the same side.
class BoundaryChainer {
public:
    BoundaryChainer(const TraceResult& trace, const SubpixelBoundaryImage& s,
                    const LabelImage& labels);

    /// Throws ChainError when a piece cannot be placed.
    std::vector<PieceLoop> chain(int region) const;

private:
    struct PortRef {
        int piece;
        bool at_end;
    };
    static std::uint64_t key(const Port& p);
    std::optional<OrientedPiece> continuation(int region, const Port& tail, PortRef arrived) const;
    Port tail_of(OrientedPiece p) const;
    Port head_of(OrientedPiece p) const;
    int side_of(int region, OrientedPiece p) const;

    const TraceResult& trace_;
    const SubpixelBoundaryImage& s_;
    const LabelImage& labels_;
    std::unordered_map<std::uint64_t, std::vector<PortRef>> ports_;
};

std::vector<PieceLoop> chain_pieces(int region, const TraceResult& trace,
                                    const SubpixelBoundaryImage& s, const LabelImage& labels);

/// Subpixel coordinates are halved.
Point2 scale_to_document(Point2 p);

/// Document position of an S-space point: S index s sits at document 0.5·(s+1),
/// so pixel centers land on half-integers and the frame (s = -1 and s = 2W-1)
/// on the canvas edges 0 and W.
Point2 subpixel_to_document(Point2 s);

Rgb region_fill_color(const RasterImage& img, const LabelImage& labels, int region, FillMode mode);
std::vector<Rgb> region_fill_colors(const RasterImage& img, const LabelImage& labels, FillMode mode);

/// Document-space elements for one piece in its stored orientation.
/// Frame pieces and 2-control-point pieces become lines, others cubic runs.
std::vector<PathElement> piece_elements(const BoundaryPiece& piece, double resolution);

struct DocumentOptions {
    double sampling_resolution = 1.0 / 20.0;
    FillMode fill = FillMode::mean;
    PaintOrder order = PaintOrder::holes_last;
    std::optional<double> stroke_width;
    unsigned workers = 1;
};

/// The region lying inside a closed piece.
int inner_region(const BoundaryPiece& closed_piece);

/// `trace` must already contain the frame pieces (add_border_pieces).
SvgDocument build_document(const RasterImage& img, const LabelImage& labels,
                           const SubpixelBoundaryImage& s, const TraceResult& trace,
                           const DocumentOptions& options);

/// Up to three decimals, trailing zeros trimmed.
std::string format_coordinate(double v);
std::string path_data(const BezierPath& path);
std::string serialize_svg(const SvgDocument& doc);

}  // namespace vectorforge

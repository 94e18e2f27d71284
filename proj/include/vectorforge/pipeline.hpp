#pragma once

#include <optional>
#include <string>

#include "vectorforge/boundary.hpp"
#include "vectorforge/eval.hpp"
#include "vectorforge/segmentation.hpp"
#include "vectorforge/svg_writer.hpp"

namespace vectorforge {

enum class Segmenter { srm, graph, csc };

struct PipelineConfig {
    Segmenter segmenter = Segmenter::graph;
    double q = 32.0;
    double k = 500.0;
    double threshold = 30.0;
    double min_region_frac = 0.0005;
    double sampling_resolution = 1.0 / 20.0;
    FillMode fill = FillMode::mean;
    PaintOrder order = PaintOrder::holes_last;
    std::optional<double> stroke;
    unsigned workers = 1;
    bool eval = false;
};

/// Throws std::invalid_argument naming the first out-of-range field.
void validate(const PipelineConfig& cfg);

struct StageTimings {
    double segment_ms = 0.0;
    double junctions_ms = 0.0;
    double trace_ms = 0.0;
    double document_ms = 0.0;
    double serialize_ms = 0.0;
};

struct PipelineStats {
    int regions = 0;
    std::size_t junctions = 0;
    std::size_t pieces = 0;
    std::size_t closed_pieces = 0;
    StageTimings timings;
};

struct PipelineResult {
    LabelImage labels;
    SubpixelBoundaryImage s;
    TraceResult trace;
    SvgDocument document;
    std::string svg;
    std::optional<Metrics> metrics;
    PipelineStats stats;
};

LabelImage segment(const RasterImage& img, const PipelineConfig& cfg);

/// segment → boundary image → trace → chain/fit → serialize. The SVG bytes
/// do not depend on cfg.workers.
PipelineResult run_pipeline(const RasterImage& img, const PipelineConfig& cfg);

/// Vectorizes an existing label image; `img` supplies the fill colors.
PipelineResult vectorize_labels(const RasterImage& img, LabelImage labels, const PipelineConfig& cfg);

std::string to_string(Segmenter s);
std::optional<Segmenter> parse_segmenter(const std::string& name);

}  // namespace vectorforge

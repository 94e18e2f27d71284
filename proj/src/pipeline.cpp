#include "vectorforge/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace vectorforge {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void validate(const PipelineConfig& cfg) {
    require(std::isfinite(cfg.q) && cfg.q > 0.0, "q must be > 0");
    require(std::isfinite(cfg.k) && cfg.k >= 0.0, "k must be >= 0");
    require(std::isfinite(cfg.threshold) && cfg.threshold >= 0.0, "threshold must be >= 0");
    require(cfg.min_region_frac >= 0.0 && cfg.min_region_frac < 1.0, "min-region-frac must be in [0, 1)");
    require(cfg.sampling_resolution > 0.0 && cfg.sampling_resolution <= 1.0, "sampling must be in (0, 1]");
    require(!cfg.stroke || (std::isfinite(*cfg.stroke) && *cfg.stroke > 0.0), "stroke width must be > 0");
    require(cfg.workers >= 1, "workers must be >= 1");
}

std::string to_string(Segmenter s) {
    switch (s) {
        case Segmenter::srm: return "srm";
        case Segmenter::graph: return "graph";
        case Segmenter::csc: return "csc";
    }
    return "graph";
}

std::optional<Segmenter> parse_segmenter(const std::string& name) {
    if (name == "srm") return Segmenter::srm;
    if (name == "graph") return Segmenter::graph;
    if (name == "csc") return Segmenter::csc;
    return std::nullopt;
}

LabelImage segment(const RasterImage& img, const PipelineConfig& cfg) {
    switch (cfg.segmenter) {
        case Segmenter::srm: return segment_srm(img, {cfg.q, cfg.min_region_frac});
        case Segmenter::csc: return segment_csc(img, {cfg.threshold, cfg.min_region_frac});
        case Segmenter::graph: break;
    }
    return segment_graph(img, {cfg.k, cfg.min_region_frac});
}

PipelineResult vectorize_labels(const RasterImage& img, LabelImage labels, const PipelineConfig& cfg) {
    validate(cfg);
    PipelineResult out;
    out.labels = std::move(labels);
    out.stats.regions = out.labels.region_count;

    auto t = Clock::now();
    out.s = extract_junctions(out.labels, cfg.workers);
    out.stats.timings.junctions_ms = elapsed_ms(t);
    for (std::uint8_t j : out.s.junctions) out.stats.junctions += j;

    t = Clock::now();
    out.trace = trace_pieces(out.s, out.labels);
    out.stats.closed_pieces = out.trace.closed_ids.size();
    add_border_pieces(out.labels, out.trace);
    out.stats.pieces = out.trace.pieces.size();
    out.stats.timings.trace_ms = elapsed_ms(t);

    t = Clock::now();
    DocumentOptions options;
    options.sampling_resolution = cfg.sampling_resolution;
    options.fill = cfg.fill;
    options.order = cfg.order;
    options.stroke_width = cfg.stroke;
    options.workers = cfg.workers;
    out.document = build_document(img, out.labels, out.s, out.trace, options);
    out.stats.timings.document_ms = elapsed_ms(t);

    t = Clock::now();
    out.svg = serialize_svg(out.document);
    out.stats.timings.serialize_ms = elapsed_ms(t);
    return out;
}

PipelineResult run_pipeline(const RasterImage& img, const PipelineConfig& cfg) {
    validate(cfg);
    const auto start = Clock::now();
    auto t = Clock::now();
    LabelImage labels = segment(img, cfg);
    const double segment_ms = elapsed_ms(t);

    PipelineResult out = vectorize_labels(img, std::move(labels), cfg);
    out.stats.timings.segment_ms = segment_ms;
    const double wall_ms = elapsed_ms(start);

    if (cfg.eval) {
        Metrics m;
        const RasterImage rendered = rasterize(out.document, img.width(), img.height(), cfg.workers);
        m.psnr_db = psnr(img, rendered);
        m.psnr_interior_db = psnr_masked(img, rendered, interior_mask(out.labels));
        m.svg_bytes = out.svg.size();
        m.bpp = bpp(out.svg.size(), img.width(), img.height());
        m.wall_ms = wall_ms;
        m.path_count = out.document.paths.size();
        m.segment_count = segment_count(out.document);
        out.metrics = m;
    }
    return out;
}

}  // namespace vectorforge

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "vectorforge/pipeline.hpp"

namespace vectorforge::cli {

namespace {

std::optional<double> parse_real(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

void write_debug_dumps(const std::filesystem::path& svg_path, const PipelineResult& r) {
    const LabelImage& labels = r.labels;
    std::vector<std::uint8_t> gray(labels.labels.size());
    for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = static_cast<std::uint8_t>(labels.labels[i] % 256);
    std::filesystem::path base = svg_path;
    base.replace_extension();
    write_pgm(base.string() + ".labels.pgm", labels.width, labels.height, gray);
    write_pbm(base.string() + ".edges.pbm", r.s.width_s, r.s.height_s, r.s.edges);
    write_pbm(base.string() + ".junctions.pbm", r.s.width_s, r.s.height_s, r.s.junctions);
}

void append_csv(const std::filesystem::path& path, const std::string& input, const PipelineConfig& cfg,
                const Metrics& m) {
    const bool fresh = !std::filesystem::exists(path);
    std::ofstream f(path, std::ios::app);
    if (!f) throw IoError("cannot open " + path.string());
    if (fresh) f << "input,segmenter,sampling," << metrics_csv_header() << '\n';
    f << input << ',' << to_string(cfg.segmenter) << ',' << cfg.sampling_resolution << ','
      << metrics_csv_row(m) << '\n';
    if (!f) throw IoError("cannot write " + path.string());
}

}  // namespace

std::optional<double> parse_sampling(const std::string& text) {
    std::optional<double> value;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const auto num = parse_real(std::string_view(text).substr(0, slash));
        const auto den = parse_real(std::string_view(text).substr(slash + 1));
        if (!num || !den || *den == 0.0) return std::nullopt;
        value = *num / *den;
    } else {
        value = parse_real(text);
    }
    if (!value || !std::isfinite(*value) || *value <= 0.0 || *value > 1.0) return std::nullopt;
    return value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convert a raster image to an SVG of filled Bezier region paths.", "vectorforge"};

    PipelineConfig cfg;
    std::string input;
    std::string output;
    std::string segmenter = "graph";
    std::string sampling = "1/20";
    std::string fill = "mean";
    std::string order = "holes-last";
    std::optional<double> stroke;
    std::string csv;
    bool debug_dumps = false;

    app.add_option("input", input, "Input PNG or binary PPM")->required();
    app.add_option("-o,--output", output, "Output SVG path (default: input with .svg extension)");
    app.add_option("--segmenter", segmenter, "Segmentation algorithm")
        ->check(CLI::IsMember({"srm", "graph", "csc"}));
    app.add_option("--q", cfg.q, "SRM complexity parameter Q");
    app.add_option("--k", cfg.k, "Graph segmentation scale k");
    app.add_option("--threshold", cfg.threshold, "CSC color distance threshold");
    app.add_option("--min-region-frac", cfg.min_region_frac, "Merge regions smaller than this fraction of the image");
    app.add_option("--sampling", sampling, "Sampling resolution in (0, 1], decimal or 1/N");
    app.add_option("--fill", fill, "Region fill color")->check(CLI::IsMember({"mean", "median"}));
    app.add_option("--paint-order", order, "Path paint order")
        ->check(CLI::IsMember({"holes-last", "by-region"}));
    app.add_option("--stroke", stroke, "Stroke each path with its fill color at this width");
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--eval", cfg.eval, "Print quality metrics as JSON on standard output");
    app.add_option("--csv", csv, "Append metrics to this CSV file (implies --eval)");
    app.add_flag("--debug-dumps", debug_dumps, "Write label and boundary images next to the output");
    app.set_config("--config", "", "Read options from a key = value file; flags override it");

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    if (!reversed_args.empty()) reversed_args.pop_back();  // program name
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return ok;
        }
        err << "vectorforge: " << e.what() << '\n';
        return usage;
    }

    const auto resolution = parse_sampling(sampling);
    if (!resolution) {
        err << "vectorforge: --sampling must be a number or 1/N fraction in (0, 1], got '" << sampling << "'\n";
        return usage;
    }
    cfg.sampling_resolution = *resolution;
    cfg.segmenter = *parse_segmenter(segmenter);
    cfg.fill = fill == "median" ? FillMode::median : FillMode::mean;
    cfg.order = order == "by-region" ? PaintOrder::by_region : PaintOrder::holes_last;
    cfg.stroke = stroke;
    if (!csv.empty()) cfg.eval = true;
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        err << "vectorforge: " << e.what() << '\n';
        return usage;
    }

    std::filesystem::path out_path = output;
    if (output.empty()) {
        out_path = input;
        out_path.replace_extension(".svg");
    }

    try {
        const RasterImage img = load_image(input);
        const PipelineResult result = run_pipeline(img, cfg);
        write_file_bytes(out_path, std::span(reinterpret_cast<const std::uint8_t*>(result.svg.data()),
                                             result.svg.size()));
        if (debug_dumps) write_debug_dumps(out_path, result);
        if (result.metrics) {
            out << metrics_json(*result.metrics) << '\n';
            if (!csv.empty()) append_csv(csv, input, cfg, *result.metrics);
        }
    } catch (const IoError& e) {
        err << "vectorforge: " << e.what() << '\n';
        return io;
    } catch (const FormatError& e) {
        err << "vectorforge: " << e.what() << '\n';
        return io;
    } catch (const TopologyError& e) {
        err << "vectorforge: topology error: " << e.what() << '\n';
        return topology;
    } catch (const ChainError& e) {
        err << "vectorforge: chaining error: " << e.what() << '\n';
        return topology;
    }
    return ok;
}

}  // namespace vectorforge::cli

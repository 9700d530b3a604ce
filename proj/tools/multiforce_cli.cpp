// Command-line front end: layout, grid, compare and scaling runs.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "multiforce/errors.hpp"
#include "multiforce/generators.hpp"
#include "multiforce/harness.hpp"
#include "multiforce/io.hpp"
#include "multiforce/render.hpp"

namespace fs = std::filesystem;
using namespace multiforce;

namespace {

struct CommonOptions {
    std::string input;
    std::string generate;
    std::string manifest;
    std::string dataset;
    std::uint64_t seed = 1;
    std::size_t seeds = 10;
    int iterations = 100;
    double width = 10.0;
    double height = 10.0;
    bool rescale = false;
    bool clamp = false;
    bool shared_init = false;
    bool weight_repulsion = false;
    std::string cooling = "linear";
    double cooling_ratio = 0.9;
    std::string out = ".";
    std::string svg;
};

void add_common(CLI::App& cmd, CommonOptions& o, bool needs_network) {
    if (needs_network) {
        auto* input = cmd.add_option("--input", o.input, "Edge-list file");
        auto* gen = cmd.add_option("--generate", o.generate, "Built-in generator")
                        ->check(CLI::IsMember({"synthetic2"}));
        auto* manifest = cmd.add_option("--manifest", o.manifest, "Dataset manifest (JSON)");
        cmd.add_option("--dataset", o.dataset, "Dataset name in the manifest")->needs(manifest);
        input->excludes(gen);
        manifest->excludes(input)->excludes(gen);
    }
    cmd.add_option("--seed", o.seed, "Seed (first seed of a sweep)");
    cmd.add_option("--iterations", o.iterations, "Iterations per layout")->check(CLI::PositiveNumber);
    cmd.add_option("--width", o.width, "Frame width")->check(CLI::PositiveNumber);
    cmd.add_option("--height", o.height, "Frame height")->check(CLI::PositiveNumber);
    auto* rescale = cmd.add_flag("--rescale", o.rescale, "Rescale the final drawing into the frame");
    auto* clamp = cmd.add_flag("--clamp", o.clamp, "Clamp vertices to the frame every iteration (default)");
    rescale->excludes(clamp);
    cmd.add_flag("--shared-init", o.shared_init, "Start all replicas of an actor at one point");
    cmd.add_flag("--weight-repulsion", o.weight_repulsion, "Scale repulsion by the in-layer weight");
    cmd.add_option("--cooling", o.cooling, "Cooling schedule")->check(CLI::IsMember({"linear", "geometric"}));
    cmd.add_option("--cooling-ratio", o.cooling_ratio, "Ratio of geometric cooling");
    cmd.add_option("--out", o.out, "Output directory");
}

LayoutConfig base_config(const CommonOptions& o) {
    LayoutConfig config;
    config.frame = {o.width, o.height};
    config.iterations = o.iterations;
    config.seed = o.seed;
    config.shared_init = o.shared_init;
    config.weight_repulsion = o.weight_repulsion;
    config.clamp_to_frame = !o.rescale;
    config.rescale_to_frame = o.rescale;
    config.cooling.kind = o.cooling == "geometric" ? CoolingSchedule::Kind::geometric : CoolingSchedule::Kind::linear;
    config.cooling.ratio = o.cooling_ratio;
    for (const auto& warning : config.validate()) {
        std::cerr << "warning: " << warning << '\n';
    }
    return config;
}

struct LoadedNetwork {
    std::string name;
    MultiplexNetwork network;
};

LoadedNetwork load_network(const CommonOptions& o) {
    if (!o.generate.empty()) {
        return {o.generate, generate_synthetic_two_layer(o.seed)};
    }
    if (!o.manifest.empty()) {
        const fs::path path(o.manifest);
        for (const auto& entry : parse_manifest(read_file(path), path.parent_path())) {
            if (entry.name == o.dataset) {
                return {entry.name, load_dataset(entry)};
            }
        }
        throw ValidationError("dataset '" + o.dataset + "' not in " + o.manifest);
    }
    if (o.input.empty()) {
        throw ValidationError("one of --input, --generate or --manifest is required");
    }
    ParseReport report;
    MultiplexNetwork network = parse_edge_list(read_file(o.input), report);
    if (report.duplicate_edges > 0) {
        std::cerr << "warning: " << report.duplicate_edges << " duplicate edge record(s) collapsed\n";
    }
    return {fs::path(o.input).stem().string(), std::move(network)};
}

std::vector<double> parse_reals(const std::string& csv, const char* flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', start), csv.size());
        const std::string token = csv.substr(start, comma - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ValidationError(std::string(flag) + ": '" + token + "' is not a number");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError(std::string(flag) + ": weight " + token + " outside [0, 1]");
        }
        values.push_back(value);
        start = comma + 1;
    }
    return values;
}

std::optional<RenderSpec> render_spec(const std::string& svg) {
    if (svg.empty()) {
        return std::nullopt;
    }
    RenderSpec spec;
    spec.arrangement = svg == "stacked" ? Arrangement::stacked_oblique : Arrangement::side_by_side;
    return spec;
}

void print_fit(const std::string& setting, const FitReport& fit) {
    std::printf("%-28s internal_fit %12.6g  external_fit %12.6g\n", setting.c_str(), fit.internal_fit,
                fit.external_fit);
}

void print_medians(const SweepResult& result, const std::vector<std::string>& settings) {
    std::printf("%-28s %16s %16s\n", "setting", "median internal", "median external");
    for (const auto& s : settings) {
        std::printf("%-28s %16.6g %16.6g\n", s.c_str(), result.median_internal(s), result.median_external(s));
    }
}

std::string file_safe(std::string name) {
    for (char& ch : name) {
        if (ch == '/' || ch == ':' || ch == '=') {
            ch = '_';
        }
    }
    return name;
}

int run_layout(const CommonOptions& o, const std::string& setting_name) {
    const auto [name, network] = load_network(o);
    const LayoutConfig base = base_config(o);
    const RunSetting setting = resolve_setting(setting_name, network, base);
    const RunRecord run = run_setting(network, name, setting, o.seed);

    const fs::path out(o.out);
    fs::create_directories(out);
    write_file(out / "positions.json", write_positions_json(run.positions, network));
    write_file(out / "metrics.csv", write_metrics_csv({{name, setting.name, run.fit.internal_fit, run.fit.external_fit}}));
    if (const auto spec = render_spec(o.svg)) {
        write_file(out / "layout.svg", render_svg(network, run.positions, *spec, base.frame));
    }
    std::printf("%s: %zu actors, %zu layers, %zu vertices, %zu edges\n", name.c_str(), network.actor_count(),
                network.layer_count(), network.vertex_count(), network.edge_count());
    print_fit(setting.name, run.fit);
    for (std::size_t l = 0; l < network.layer_count(); ++l) {
        std::printf("  layer %-20s internal %12.6g\n", network.layer_label(LayerId{static_cast<std::uint32_t>(l)}).c_str(),
                    run.fit.per_layer_internal[l]);
    }
    return 0;
}

void write_sweep(const fs::path& out, const SweepResult& result, bool timings) {
    fs::create_directories(out);
    write_file(out / "metrics.csv", write_metrics_csv(result.metrics_rows()));
    write_file(out / "sweep.csv", sweep_csv(result));
    if (timings) {
        write_file(out / "timings.csv", sweep_timing_csv(result));
    }
}

int run_grid(const CommonOptions& o, const std::string& inla_csv, const std::string& interla_csv, bool timings) {
    const auto inla = parse_reals(inla_csv, "--inla");
    const auto interla = parse_reals(interla_csv, "--interla");
    const auto [name, network] = load_network(o);
    const LayoutConfig base = base_config(o);
    const SweepResult result = grid_sweep(network, name, base, inla, interla, o.seed, o.seeds);

    const fs::path out(o.out);
    write_sweep(out, result, timings);
    RenderSpec spec = render_spec(o.svg).value_or(RenderSpec{});
    for (const RunRecord& run : result.rows) {
        if (run.seed == o.seed) {
            write_file(out / ("cell_" + file_safe(run.setting) + ".svg"),
                       render_svg(network, run.positions, spec, base.frame));
        }
    }
    std::vector<std::string> names;
    for (double a : inla) {
        for (double b : interla) {
            names.push_back(grid_setting_name(a, b));
        }
    }
    std::printf("%s: %zu runs\n", name.c_str(), result.rows.size());
    print_medians(result, names);
    return 0;
}

int run_compare(const CommonOptions& o, std::optional<std::size_t> max_anchors, bool timings) {
    const auto [name, network] = load_network(o);
    const LayoutConfig base = base_config(o);
    const SweepResult result = compare_sweep(network, name, base, o.seed, o.seeds, max_anchors);
    write_sweep(fs::path(o.out), result, timings);
    std::printf("%s: %zu runs\n", name.c_str(), result.rows.size());
    print_medians(result, comparison_settings(network, max_anchors));
    return 0;
}

int run_scaling(const CommonOptions& o, std::size_t layers, const std::vector<std::size_t>& actors, double degree) {
    const LayoutConfig base = base_config(o);
    const auto rows = scaling_sweep(layers, actors, degree, base, o.seed, o.seeds);
    const fs::path out(o.out);
    fs::create_directories(out);
    write_file(out / "scaling.csv", scaling_csv(rows));

    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t n : actors) {
        std::vector<double> times;
        for (const auto& r : rows) {
            if (r.actors == n) {
                times.push_back(r.seconds);
            }
        }
        x.push_back(static_cast<double>(n));
        y.push_back(median(times));
        std::printf("actors %6zu  layers %3zu  median seconds %.6f\n", n, layers, y.back());
    }
    if (x.size() >= 2) {
        std::printf("log-log slope %.3f\n", loglog_slope(x, y));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplex network layout with balanced in-layer and inter-layer forces"};
    app.require_subcommand(1);

    CommonOptions layout_opts;
    std::string setting = "balanced";
    auto* layout_cmd = app.add_subcommand("layout", "Lay out one network under one setting");
    add_common(*layout_cmd, layout_opts, true);
    layout_cmd->add_option("--setting", setting, "balanced | independent | anchored:<layer>");
    layout_cmd->add_option("--svg", layout_opts.svg, "Also write layout.svg")->check(CLI::IsMember({"side", "stacked"}));

    CommonOptions grid_opts;
    std::string inla = "0,0.5,1";
    std::string interla = "0,0.5,1";
    bool grid_timings = false;
    auto* grid_cmd = app.add_subcommand("grid", "Sweep uniform in-layer x inter-layer weights");
    add_common(*grid_cmd, grid_opts, true);
    grid_cmd->add_option("--seeds", grid_opts.seeds, "Number of seeds")->check(CLI::PositiveNumber);
    grid_cmd->add_option("--inla", inla, "Comma-separated in-layer weights");
    grid_cmd->add_option("--interla", interla, "Comma-separated inter-layer weights");
    grid_cmd->add_option("--svg", grid_opts.svg, "Panel arrangement of the cell drawings")
        ->check(CLI::IsMember({"side", "stacked"}));
    grid_cmd->add_flag("--timings", grid_timings, "Also write timings.csv");

    CommonOptions compare_opts;
    std::optional<std::size_t> max_anchors;
    bool compare_timings = false;
    auto* compare_cmd = app.add_subcommand("compare", "Balanced vs independent vs anchored settings");
    add_common(*compare_cmd, compare_opts, true);
    compare_cmd->add_option("--seeds", compare_opts.seeds, "Number of seeds")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--max-anchors", max_anchors, "Anchor at most this many layers");
    compare_cmd->add_flag("--timings", compare_timings, "Also write timings.csv");

    CommonOptions scaling_opts;
    scaling_opts.seeds = 1;
    std::size_t layers = 2;
    std::vector<std::size_t> actors{100, 200, 400, 800};
    double degree = 6.0;
    auto* scaling_cmd = app.add_subcommand("scaling", "Time layouts of growing random networks");
    add_common(*scaling_cmd, scaling_opts, false);
    scaling_cmd->add_option("--seeds", scaling_opts.seeds, "Number of seeds")->check(CLI::PositiveNumber);
    scaling_cmd->add_option("--layers", layers, "Layer count")->check(CLI::PositiveNumber);
    scaling_cmd->add_option("--actors", actors, "Ascending actor counts")->delimiter(',');
    scaling_cmd->add_option("--degree", degree, "Mean degree per layer")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*layout_cmd) {
            return run_layout(layout_opts, setting);
        }
        if (*grid_cmd) {
            return run_grid(grid_opts, inla, interla, grid_timings);
        }
        if (*compare_cmd) {
            return run_compare(compare_opts, max_anchors, compare_timings);
        }
        if (*scaling_cmd) {
            return run_scaling(scaling_opts, layers, actors, degree);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

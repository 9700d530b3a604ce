#include "multiforce/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "multiforce/errors.hpp"
#include "multiforce/generators.hpp"

namespace multiforce {

namespace {

constexpr std::string_view anchored_prefix = "anchored:";

}  // namespace

RunSetting resolve_setting(std::string_view name, const MultiplexNetwork& network, const LayoutConfig& base) {
    RunSetting setting{std::string(name), base};
    LayoutConfig& config = setting.config;
    if (name == "balanced") {
        config.weights = LayerWeights(1.0, 1.0);
    } else if (name == "independent") {
        config.weights = LayerWeights(1.0, 0.0);
        config.shared_init = false;
    } else if (name.starts_with(anchored_prefix)) {
        const std::string_view label = name.substr(anchored_prefix.size());
        const auto anchor = network.find_layer(label);
        if (!anchor) {
            throw ValidationError("anchor layer '" + std::string(label) + "' not in network");
        }
        config.weights = LayerWeights(0.0, 1.0);
        config.weights.set_inla(*anchor, 1.0);
        config.shared_init = true;
    } else {
        throw ValidationError("unknown setting '" + std::string(name) +
                              "' (expected balanced, independent or anchored:<layer>)");
    }
    return setting;
}

std::vector<std::string> comparison_settings(const MultiplexNetwork& network, std::optional<std::size_t> max_anchors) {
    std::vector<std::string> names{"balanced", "independent"};
    const std::size_t anchors = std::min(network.layer_count(), max_anchors.value_or(network.layer_count()));
    for (std::uint32_t l = 0; l < anchors; ++l) {
        names.push_back(std::string(anchored_prefix) + network.layer_label(LayerId{l}));
    }
    return names;
}

RunRecord run_setting(const MultiplexNetwork& network, std::string_view dataset, const RunSetting& setting,
                      std::uint64_t seed) {
    LayoutConfig config = setting.config;
    config.seed = seed;

    RunRecord record;
    record.dataset = std::string(dataset);
    record.setting = setting.name;
    record.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    record.positions = layout(network, config);
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record.fit = fit_report(network, record.positions, ideal_distance(config.frame, network.actor_count()));
    return record;
}

std::vector<MetricsRow> SweepResult::metrics_rows() const {
    std::vector<MetricsRow> out;
    out.reserve(rows.size());
    for (const RunRecord& r : rows) {
        out.push_back({r.dataset, r.setting, r.fit.internal_fit, r.fit.external_fit});
    }
    return out;
}

double SweepResult::median_internal(std::string_view setting) const {
    std::vector<double> values;
    for (const RunRecord& r : rows) {
        if (r.setting == setting) {
            values.push_back(r.fit.internal_fit);
        }
    }
    return median(std::move(values));
}

double SweepResult::median_external(std::string_view setting) const {
    std::vector<double> values;
    for (const RunRecord& r : rows) {
        if (r.setting == setting) {
            values.push_back(r.fit.external_fit);
        }
    }
    return median(std::move(values));
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "dataset,setting,seed,internal_fit,external_fit\n";
    for (const RunRecord& r : result.rows) {
        out += r.dataset + ',' + r.setting + ',' + std::to_string(r.seed) + ',' + format_double(r.fit.internal_fit) +
               ',' + format_double(r.fit.external_fit) + '\n';
    }
    return out;
}

std::string sweep_timing_csv(const SweepResult& result) {
    std::string out = "dataset,setting,seed,seconds\n";
    for (const RunRecord& r : result.rows) {
        out += r.dataset + ',' + r.setting + ',' + std::to_string(r.seed) + ',' + format_double(r.seconds) + '\n';
    }
    return out;
}

SweepResult compare_sweep(const MultiplexNetwork& network, std::string_view dataset, const LayoutConfig& base,
                          std::uint64_t first_seed, std::size_t seed_count, std::optional<std::size_t> max_anchors) {
    if (network.layer_count() < 2) {
        throw ValidationError("comparison needs at least 2 layers: with one layer there is nothing to align");
    }
    SweepResult result;
    for (const std::string& name : comparison_settings(network, max_anchors)) {
        const RunSetting setting = resolve_setting(name, network, base);
        for (std::size_t s = 0; s < seed_count; ++s) {
            result.rows.push_back(run_setting(network, dataset, setting, first_seed + s));
        }
    }
    return result;
}

std::string grid_setting_name(double inla, double interla) {
    return "inla=" + format_double(inla) + "/interla=" + format_double(interla);
}

RunSetting grid_setting(double inla, double interla, const LayoutConfig& base) {
    RunSetting setting{grid_setting_name(inla, interla), base};
    setting.config.weights = LayerWeights(inla, interla);
    setting.config.validate();
    return setting;
}

SweepResult grid_sweep(const MultiplexNetwork& network, std::string_view dataset, const LayoutConfig& base,
                       std::span<const double> inla_values, std::span<const double> interla_values,
                       std::uint64_t first_seed, std::size_t seed_count) {
    std::vector<RunSetting> cells;
    for (double inla : inla_values) {
        for (double interla : interla_values) {
            cells.push_back(grid_setting(inla, interla, base));
        }
    }
    SweepResult result;
    for (const RunSetting& cell : cells) {
        for (std::size_t s = 0; s < seed_count; ++s) {
            result.rows.push_back(run_setting(network, dataset, cell, first_seed + s));
        }
    }
    return result;
}

std::vector<ScalingRow> scaling_sweep(std::size_t layers, std::span<const std::size_t> actor_counts,
                                      double mean_degree, const LayoutConfig& base, std::uint64_t first_seed,
                                      std::size_t seed_count) {
    if (!std::is_sorted(actor_counts.begin(), actor_counts.end()) ||
        (!actor_counts.empty() && actor_counts.front() == 0)) {
        throw ValidationError("actor counts must be positive and ascending");
    }
    std::vector<ScalingRow> rows;
    for (std::size_t s = 0; s < seed_count; ++s) {
        const std::uint64_t seed = first_seed + s;
        for (std::size_t n : actor_counts) {
            const auto edges = static_cast<std::size_t>(std::llround(static_cast<double>(n) * mean_degree / 2.0));
            const MultiplexNetwork network = generate_random_multiplex(n, layers, edges, seed);
            LayoutConfig config = base;
            config.seed = seed;
            // Constant vertex density: in a fixed frame large layouts pile up on
            // the border, and coincident pairs cost more than ordinary ones.
            const double grow = std::sqrt(static_cast<double>(n) / static_cast<double>(actor_counts.front()));
            config.frame = {base.frame.width * grow, base.frame.height * grow};
            const auto start = std::chrono::steady_clock::now();
            const PositionMap positions = layout(network, config);
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rows.push_back({n, layers, seed, seconds});
        }
    }
    return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::string out = "actors,layers,seed,seconds\n";
    for (const ScalingRow& r : rows) {
        out += std::to_string(r.actors) + ',' + std::to_string(r.layers) + ',' + std::to_string(r.seed) + ',' +
               format_double(r.seconds) + '\n';
    }
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        return std::nan("");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("slope needs at least two paired samples");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace multiforce

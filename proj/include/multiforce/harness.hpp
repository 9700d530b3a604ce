#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiforce/io.hpp"
#include "multiforce/layout.hpp"
#include "multiforce/metrics.hpp"
#include "multiforce/network.hpp"

namespace multiforce {

/// A named layout configuration.
///
/// Built-in names:
///   balanced          every in-layer and inter-layer weight 1
///   independent       inter-layer weights 0, separate random starts per layer
///   anchored:<layer>  in-layer weight 1 on <layer> and 0 elsewhere, inter-layer
///                     weights 1, shared random start
struct RunSetting {
    std::string name;
    LayoutConfig config;
};

/// Applies the named weights to `base` (frame, iterations, seed, clamping and
/// cooling are kept). Throws ValidationError for unknown names or layers.
RunSetting resolve_setting(std::string_view name, const MultiplexNetwork& network, const LayoutConfig& base);

/// "balanced", "independent", then "anchored:<label>" for the first
/// max_anchors layers (all layers when unset).
std::vector<std::string> comparison_settings(const MultiplexNetwork& network,
                                             std::optional<std::size_t> max_anchors = std::nullopt);

struct RunRecord {
    std::string dataset;
    std::string setting;
    std::uint64_t seed = 0;
    FitReport fit;
    double seconds = 0.0;
    PositionMap positions;
};

/// Lays out with config.seed = seed and measures the result with k taken
/// from the config's frame.
RunRecord run_setting(const MultiplexNetwork& network, std::string_view dataset, const RunSetting& setting,
                      std::uint64_t seed);

struct SweepResult {
    std::vector<RunRecord> rows;

    std::vector<MetricsRow> metrics_rows() const;
    /// Medians over seeds for one setting.
    double median_internal(std::string_view setting) const;
    double median_external(std::string_view setting) const;
};

/// Header "dataset,setting,seed,internal_fit,external_fit".
std::string sweep_csv(const SweepResult& result);
/// Adds a seconds column; the only non-reproducible output.
std::string sweep_timing_csv(const SweepResult& result);

/// Every comparison setting for seeds first_seed .. first_seed+seed_count-1.
SweepResult compare_sweep(const MultiplexNetwork& network, std::string_view dataset, const LayoutConfig& base,
                          std::uint64_t first_seed, std::size_t seed_count,
                          std::optional<std::size_t> max_anchors = std::nullopt);

/// Name of a uniform-weight grid cell, e.g. "inla=0.5/interla=1".
std::string grid_setting_name(double inla, double interla);

RunSetting grid_setting(double inla, double interla, const LayoutConfig& base);

/// One run per (inla, interla, seed) with uniform weights, inla-major.
SweepResult grid_sweep(const MultiplexNetwork& network, std::string_view dataset, const LayoutConfig& base,
                       std::span<const double> inla_values, std::span<const double> interla_values,
                       std::uint64_t first_seed, std::size_t seed_count);

struct ScalingRow {
    std::size_t actors = 0;
    std::size_t layers = 0;
    std::uint64_t seed = 0;
    double seconds = 0.0;
};

/// Times layouts of random networks (every actor on every layer, the given
/// mean degree per layer) for each actor count and seed. The frame grows with
/// sqrt(n / first count), so base.frame applies to the first count and the
/// ideal distance k stays the same for all of them.
std::vector<ScalingRow> scaling_sweep(std::size_t layers, std::span<const std::size_t> actor_counts,
                                      double mean_degree, const LayoutConfig& base, std::uint64_t first_seed,
                                      std::size_t seed_count);

/// Header "actors,layers,seed,seconds".
std::string scaling_csv(const std::vector<ScalingRow>& rows);

double median(std::vector<double> values);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace multiforce

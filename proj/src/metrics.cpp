#include "multiforce/metrics.hpp"

#include <string>

#include "multiforce/errors.hpp"

namespace multiforce {

namespace {

// The metric forces are the engine's own force passes run once, with unit
// weights, on a scratch copy of the positions.
LayoutState residual_state(const MultiplexNetwork& network, const PositionMap& positions, double k) {
    if (positions.size() != network.vertex_count()) {
        throw ValidationError("positions cover " + std::to_string(positions.size()) + " vertices, network has " +
                              std::to_string(network.vertex_count()));
    }
    if (!(k > 0.0)) {
        throw ValidationError("k must be positive");
    }
    LayoutState state;
    state.positions = positions;
    state.displacement.assign(network.vertex_count(), Vec2{});
    state.k = k;
    return state;
}

LayoutConfig unit_weights() {
    LayoutConfig config;
    config.weights = LayerWeights(1.0, 1.0);
    return config;
}

std::vector<double> per_layer_internal(const MultiplexNetwork& network, const PositionMap& positions, double k) {
    LayoutState state = residual_state(network, positions, k);
    const LayoutConfig config = unit_weights();
    accumulate_repulsion(state, network, config);
    accumulate_in_layer_attraction(state, network, config);

    std::vector<double> out(network.layer_count(), 0.0);
    const auto vertices = network.vertices();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        out[vertices[v].layer.value] += norm(state.displacement[v]);
    }
    return out;
}

std::vector<double> per_actor_external(const MultiplexNetwork& network, const PositionMap& positions, double k) {
    LayoutState state = residual_state(network, positions, k);
    accumulate_inter_layer_attraction(state, network, unit_weights());

    std::vector<double> out(network.actor_count(), 0.0);
    const auto vertices = network.vertices();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        out[vertices[v].actor.value] += norm(state.displacement[v]);
    }
    return out;
}

double sum(const std::vector<double>& values) {
    double total = 0.0;
    for (double x : values) {
        total += x;
    }
    return total;
}

}  // namespace

double internal_fit(const MultiplexNetwork& network, const PositionMap& positions, double k) {
    return sum(per_layer_internal(network, positions, k));
}

double external_fit(const MultiplexNetwork& network, const PositionMap& positions, double k) {
    return sum(per_actor_external(network, positions, k));
}

FitReport fit_report(const MultiplexNetwork& network, const PositionMap& positions, double k, FitOptions options) {
    FitReport report;
    report.per_layer_internal = per_layer_internal(network, positions, k);
    report.per_actor_external = per_actor_external(network, positions, k);
    if (options.normalize && network.vertex_count() > 0) {
        const double n = static_cast<double>(network.vertex_count());
        for (double& x : report.per_layer_internal) {
            x /= n;
        }
        for (double& x : report.per_actor_external) {
            x /= n;
        }
    }
    report.internal_fit = sum(report.per_layer_internal);
    report.external_fit = sum(report.per_actor_external);
    return report;
}

}  // namespace multiforce

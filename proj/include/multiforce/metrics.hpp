#pragma once

#include <vector>

#include "multiforce/layout.hpp"
#include "multiforce/network.hpp"

namespace multiforce {

/// Residual forces on a finished drawing, evaluated with every weight at 1.
///
/// internal_fit sums, over vertices, the magnitude of the net in-layer force
/// (same-layer repulsion plus attraction along incident edges). external_fit
/// sums the magnitude of the net attraction towards the vertex's replicas on
/// other layers. Both are 0 only at exact equilibria.
struct FitReport {
    double internal_fit = 0.0;
    double external_fit = 0.0;
    std::vector<double> per_layer_internal;
    std::vector<double> per_actor_external;
};

struct FitOptions {
    /// Divide every value by the vertex count.
    bool normalize = false;
};

double internal_fit(const MultiplexNetwork& network, const PositionMap& positions, double k);
double external_fit(const MultiplexNetwork& network, const PositionMap& positions, double k);
FitReport fit_report(const MultiplexNetwork& network, const PositionMap& positions, double k,
                     FitOptions options = {});

}  // namespace multiforce

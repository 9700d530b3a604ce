#include "multiforce/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "multiforce/errors.hpp"
#include "multiforce/random.hpp"

namespace multiforce {

double cool(double t, double t0, int completed, int total, const CoolingSchedule& schedule) {
    switch (schedule.kind) {
    case CoolingSchedule::Kind::geometric:
        return t * schedule.ratio;
    case CoolingSchedule::Kind::linear:
        break;
    }
    const double linear = t0 * (1.0 - static_cast<double>(completed) / static_cast<double>(total));
    return std::max(linear, t0 * CoolingSchedule::floor_fraction);
}

double LayerWeights::inla(LayerId layer) const {
    if (auto it = inla_.find(layer.value); it != inla_.end()) {
        return it->second;
    }
    return default_inla_;
}

double LayerWeights::interla(LayerId a, LayerId b) const {
    const auto key = std::minmax(a.value, b.value);
    if (auto it = interla_.find({key.first, key.second}); it != interla_.end()) {
        return it->second;
    }
    return default_interla_;
}

LayerWeights& LayerWeights::set_inla(LayerId layer, double w) {
    inla_[layer.value] = w;
    return *this;
}

LayerWeights& LayerWeights::set_interla(LayerId a, LayerId b, double w) {
    const auto key = std::minmax(a.value, b.value);
    interla_[{key.first, key.second}] = w;
    return *this;
}

std::vector<double> LayerWeights::all_values() const {
    std::vector<double> out{default_inla_, default_interla_};
    for (const auto& [layer, w] : inla_) {
        out.push_back(w);
    }
    for (const auto& [pair, w] : interla_) {
        out.push_back(w);
    }
    return out;
}

std::vector<std::string> LayoutConfig::validate() const {
    if (!(frame.width > 0.0) || !(frame.height > 0.0) || !std::isfinite(frame.area())) {
        throw ValidationError("frame width and height must be positive and finite");
    }
    if (iterations < 1) {
        throw ValidationError("iterations must be at least 1");
    }
    for (double w : weights.all_values()) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw ValidationError("weight " + std::to_string(w) + " outside [0, 1]");
        }
    }
    if (cooling.kind == CoolingSchedule::Kind::geometric && !(cooling.ratio > 0.0 && cooling.ratio < 1.0)) {
        throw ValidationError("geometric cooling ratio must lie in (0, 1)");
    }
    std::vector<std::string> warnings;
    if (!clamp_to_frame && !rescale_to_frame) {
        warnings.emplace_back("neither clamping nor rescaling: nodes may leave the frame");
    }
    return warnings;
}

double ideal_distance(const Frame& frame, std::size_t actor_count) {
    return std::sqrt(frame.area() / static_cast<double>(std::max<std::size_t>(actor_count, 1)));
}

Vec2 jitter_direction(std::uint64_t seed, int iteration, ActorId first, ActorId second) {
    const std::uint64_t pair = (std::uint64_t{first.value} << 32) | second.value;
    const std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(iteration) ^ mix64(pair)));
    const double angle = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
    return {std::cos(angle), std::sin(angle)};
}

PositionMap initialize_positions(const MultiplexNetwork& network, const LayoutConfig& config) {
    Rng rng(config.seed);
    const double hw = config.frame.width / 2;
    const double hh = config.frame.height / 2;
    auto draw = [&] {
        const double x = rng.uniform(-hw, hw);
        const double y = rng.uniform(-hh, hh);
        return Vec2{x, y};
    };

    PositionMap positions(network.vertex_count());
    for (std::uint32_t a = 0; a < network.actor_count(); ++a) {
        const auto reps = network.replica_indices(ActorId{a});
        if (reps.empty()) {
            continue;
        }
        if (config.shared_init) {
            const Vec2 p = draw();
            for (VertexIndex v : reps) {
                positions[v] = p;
            }
        } else {
            for (VertexIndex v : reps) {
                positions[v] = draw();
            }
        }
    }
    return positions;
}

LayoutState make_state(const MultiplexNetwork& network, const LayoutConfig& config) {
    return make_state(network, config, initialize_positions(network, config));
}

LayoutState make_state(const MultiplexNetwork& network, const LayoutConfig& config, PositionMap initial) {
    if (initial.size() != network.vertex_count()) {
        throw ValidationError("initial positions cover " + std::to_string(initial.size()) + " vertices, network has " +
                              std::to_string(network.vertex_count()));
    }
    LayoutState state;
    state.positions = std::move(initial);
    state.displacement.assign(network.vertex_count(), Vec2{});
    state.k = ideal_distance(config.frame, network.actor_count());
    state.initial_temperature = std::sqrt(static_cast<double>(network.actor_count()));
    state.temperature = state.initial_temperature;
    return state;
}

void zero_displacements(LayoutState& state) {
    std::fill(state.displacement.begin(), state.displacement.end(), Vec2{});
}

void accumulate_repulsion(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config) {
    const double k = state.k;
    const double floor = coincidence_floor_fraction * k;
    auto& pos = state.positions;
    auto& disp = state.displacement;
    const auto vertices = network.vertices();

    // Visiting unordered pairs (a < b) adds to each vertex's displacement in the
    // same order, and with the same exactly-negated terms, as the full ordered
    // double loop over (v, u).
    for (std::uint32_t l = 0; l < network.layer_count(); ++l) {
        const LayerId layer{l};
        const auto members = network.layer_members(layer);
        const double w = config.weight_repulsion ? config.weights.inla(layer) : 1.0;
        if (w == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            const VertexIndex a = members[i];
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const VertexIndex b = members[j];
                const Vec2 delta = pos[a] - pos[b];
                const double d = norm(delta);
                Vec2 push;
                if (d > 0.0) {
                    push = delta / d * repulsive_force(std::max(d, floor), k);
                } else {
                    push = jitter_direction(config.seed, state.iteration, vertices[a].actor, vertices[b].actor) *
                           repulsive_force(floor, k);
                }
                if (config.weight_repulsion) {
                    push = push * w;
                }
                disp[a] += push;
                disp[b] -= push;
            }
        }
    }
}

void accumulate_in_layer_attraction(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config) {
    const double k = state.k;
    auto& pos = state.positions;
    auto& disp = state.displacement;
    const auto vertices = network.vertices();

    for (const IndexedEdge& e : network.indexed_edges()) {
        const double w = config.weights.inla(vertices[e.u].layer);
        if (w == 0.0) {
            continue;
        }
        const Vec2 delta = pos[e.v] - pos[e.u];
        const double d = norm(delta);
        if (d == 0.0) {
            continue;
        }
        const Vec2 pull = delta / d * attractive_force(d, k) * w;
        disp[e.v] -= pull;
        disp[e.u] += pull;
    }
}

void accumulate_inter_layer_attraction(LayoutState& state, const MultiplexNetwork& network,
                                       const LayoutConfig& config) {
    const double k = state.k;
    auto& pos = state.positions;
    auto& disp = state.displacement;
    const auto vertices = network.vertices();

    for (std::uint32_t a = 0; a < network.actor_count(); ++a) {
        const auto reps = network.replica_indices(ActorId{a});
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const VertexIndex u = reps[i];
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                const VertexIndex v = reps[j];
                const double w = config.weights.interla(vertices[u].layer, vertices[v].layer);
                if (w == 0.0) {
                    continue;
                }
                const Vec2 delta = pos[v] - pos[u];
                const double d = norm(delta);
                if (d == 0.0) {
                    continue;
                }
                const Vec2 pull = delta / d * attractive_force(d, k) * w;
                disp[v] -= pull;
                disp[u] += pull;
            }
        }
    }
}

namespace {

Vec2 clamp_to(const Frame& frame, Vec2 p) {
    return {std::clamp(p.x, -frame.width / 2, frame.width / 2), std::clamp(p.y, -frame.height / 2, frame.height / 2)};
}

}  // namespace

void apply_displacements(LayoutState& state, const LayoutConfig& config) {
    for (std::size_t v = 0; v < state.displacement.size(); ++v) {
        const Vec2 d = state.displacement[v];
        const double len = norm(d);
        if (len == 0.0) {
            continue;
        }
        Vec2& p = state.positions[static_cast<VertexIndex>(v)];
        p += d / len * std::min(len, state.temperature);
        if (config.clamp_to_frame) {
            p = clamp_to(config.frame, p);
        }
    }
}

void cool(LayoutState& state, const LayoutConfig& config) {
    ++state.iteration;
    state.temperature =
        cool(state.temperature, state.initial_temperature, state.iteration, config.iterations, config.cooling);
}

void step(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config) {
    zero_displacements(state);
    accumulate_repulsion(state, network, config);
    accumulate_in_layer_attraction(state, network, config);
    accumulate_inter_layer_attraction(state, network, config);
    apply_displacements(state, config);
    cool(state, config);
}

void rescale_to_frame(PositionMap& positions, const Frame& frame) {
    if (positions.size() == 0) {
        return;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    Vec2 lo{inf, inf};
    Vec2 hi{-inf, -inf};
    for (const Vec2& p : positions.coords()) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    const Vec2 center = (lo + hi) / 2.0;
    const double bw = hi.x - lo.x;
    const double bh = hi.y - lo.y;
    double scale = std::min(bw > 0.0 ? frame.width / bw : inf, bh > 0.0 ? frame.height / bh : inf);
    if (scale == inf) {
        scale = 1.0;
    }
    for (Vec2& p : positions.coords()) {
        // Clamp absorbs rounding at the bounding-box edges.
        p = clamp_to(frame, (p - center) * scale);
    }
}

PositionMap layout(const MultiplexNetwork& network, const LayoutConfig& config, const IterationObserver& observer) {
    config.validate();
    return layout(network, config, initialize_positions(network, config), observer);
}

PositionMap layout(const MultiplexNetwork& network, const LayoutConfig& config, PositionMap initial,
                   const IterationObserver& observer) {
    config.validate();
    LayoutState state = make_state(network, config, std::move(initial));
    for (int i = 0; i < config.iterations; ++i) {
        step(state, network, config);
        if (observer) {
            observer(state);
        }
    }
    if (config.rescale_to_frame) {
        rescale_to_frame(state.positions, config.frame);
    }
    return std::move(state.positions);
}

}  // namespace multiforce

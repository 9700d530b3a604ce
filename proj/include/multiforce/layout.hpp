#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiforce/geometry.hpp"
#include "multiforce/network.hpp"

namespace multiforce {

/// Drawing area of every layer: [-width/2, width/2] x [-height/2, height/2].
struct Frame {
    double width = 10.0;
    double height = 10.0;

    double area() const { return width * height; }
    bool contains(Vec2 p) const {
        return p.x >= -width / 2 && p.x <= width / 2 && p.y >= -height / 2 && p.y <= height / 2;
    }
};

struct CoolingSchedule {
    enum class Kind { linear, geometric };

    Kind kind = Kind::linear;
    /// Per-iteration multiplier for geometric decay, in (0, 1).
    double ratio = 0.9;

    static constexpr double floor_fraction = 1e-3;
};

/// Temperature after `completed` of `total` iterations.
///
/// Linear: t0 * (1 - completed/total), never below t0/1000.
/// Geometric: t * ratio.
double cool(double t, double t0, int completed, int total, const CoolingSchedule& schedule);

/// In-layer weights keyed by layer and inter-layer weights keyed by unordered
/// layer pair. Layers without an override use the defaults.
class LayerWeights {
public:
    LayerWeights() = default;
    LayerWeights(double inla, double interla) : default_inla_(inla), default_interla_(interla) {}

    double inla(LayerId layer) const;
    double interla(LayerId a, LayerId b) const;

    LayerWeights& set_inla(LayerId layer, double w);
    LayerWeights& set_interla(LayerId a, LayerId b, double w);

    double default_inla() const { return default_inla_; }
    double default_interla() const { return default_interla_; }

    /// Every weight, defaults and overrides, for validation.
    std::vector<double> all_values() const;

private:
    double default_inla_ = 1.0;
    double default_interla_ = 1.0;
    std::map<std::uint32_t, double> inla_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> interla_;
};

struct LayoutConfig {
    Frame frame;
    int iterations = 100;
    std::uint64_t seed = 0;
    LayerWeights weights;
    /// All replicas of an actor start from one shared random point.
    bool shared_init = false;
    /// Scale repulsion on a vertex by the in-layer weight of its layer.
    bool weight_repulsion = false;
    bool clamp_to_frame = true;
    /// Fit the final drawing into the frame with one global affine transform.
    bool rescale_to_frame = false;
    CoolingSchedule cooling;

    /// Throws ValidationError on bad values. Returns warnings (currently only
    /// the case where neither clamping nor rescaling keeps nodes in the frame).
    std::vector<std::string> validate() const;
};

/// Coordinates per vertex, indexed by VertexIndex. z is the layer id.
class PositionMap {
public:
    PositionMap() = default;
    explicit PositionMap(std::size_t vertex_count) : coords_(vertex_count) {}
    explicit PositionMap(std::vector<Vec2> coords) : coords_(std::move(coords)) {}

    std::size_t size() const noexcept { return coords_.size(); }
    Vec2& operator[](VertexIndex i) { return coords_[i]; }
    const Vec2& operator[](VertexIndex i) const { return coords_[i]; }
    std::span<const Vec2> coords() const noexcept { return coords_; }
    std::span<Vec2> coords() noexcept { return coords_; }

    friend bool operator==(const PositionMap&, const PositionMap&) = default;

private:
    std::vector<Vec2> coords_;
};

/// k^2 / distance.
constexpr double repulsive_force(double distance, double k) { return k * k / distance; }
/// distance^2 / k.
constexpr double attractive_force(double distance, double k) { return distance * distance / k; }

/// Ideal edge length sqrt(area / actor count).
double ideal_distance(const Frame& frame, std::size_t actor_count);

/// Distance at which coincident same-layer vertices are treated as separated.
constexpr double coincidence_floor_fraction = 1e-4;

/// Unit direction separating two coincident vertices of one layer, keyed by
/// their actors (`first` precedes `second` in the layer's vertex order). The
/// first vertex is pushed along the result, the second along its negation.
/// Actor keys make replicated pairs on different layers separate identically.
Vec2 jitter_direction(std::uint64_t seed, int iteration, ActorId first, ActorId second);

struct LayoutState {
    PositionMap positions;
    std::vector<Vec2> displacement;
    double temperature = 0.0;
    double initial_temperature = 0.0;
    double k = 0.0;
    /// Completed iterations.
    int iteration = 0;
};

/// Uniform random draws in the frame, by actor id then layer id.
PositionMap initialize_positions(const MultiplexNetwork& network, const LayoutConfig& config);

LayoutState make_state(const MultiplexNetwork& network, const LayoutConfig& config);
LayoutState make_state(const MultiplexNetwork& network, const LayoutConfig& config, PositionMap initial);

void zero_displacements(LayoutState& state);
void accumulate_repulsion(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config);
void accumulate_in_layer_attraction(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config);
void accumulate_inter_layer_attraction(LayoutState& state, const MultiplexNetwork& network,
                                       const LayoutConfig& config);
void apply_displacements(LayoutState& state, const LayoutConfig& config);
/// Advances the iteration counter and lowers the temperature.
void cool(LayoutState& state, const LayoutConfig& config);

/// One full iteration: zero, repel, attract in-layer, attract across layers,
/// move, cool.
void step(LayoutState& state, const MultiplexNetwork& network, const LayoutConfig& config);

/// Maps the drawing's bounding box into the frame with a uniform scale,
/// centered, applied to all layers at once.
void rescale_to_frame(PositionMap& positions, const Frame& frame);

/// Called after each iteration with the state at that point.
using IterationObserver = std::function<void(const LayoutState&)>;

PositionMap layout(const MultiplexNetwork& network, const LayoutConfig& config,
                   const IterationObserver& observer = {});
PositionMap layout(const MultiplexNetwork& network, const LayoutConfig& config, PositionMap initial,
                   const IterationObserver& observer = {});

}  // namespace multiforce

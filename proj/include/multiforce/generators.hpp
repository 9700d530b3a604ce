#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multiforce/network.hpp"

namespace multiforce {

/// Edge counts of the two layers of the synthetic network (53 in total).
inline constexpr std::size_t synthetic_layer_edges[2] = {25, 28};
inline constexpr std::size_t synthetic_actor_count = 13;

/// Two-layer, 13-actor network with 53 in-layer edges.
///
/// Each layer holds two dense communities of 6 and 7 actors joined by two
/// bridge edges. Actors a6 and a7 swap communities between the layers.
/// Actor labels are a1..a13, layer labels layer1 and layer2.
MultiplexNetwork generate_synthetic_two_layer(std::uint64_t seed);

/// Actor ids 0..12 of each community on the given layer (0 or 1).
std::vector<std::uint32_t> synthetic_community(std::size_t layer, std::size_t community);

/// Every actor on every layer; each layer is an independent uniform random
/// graph with exactly edges_per_layer edges.
MultiplexNetwork generate_random_multiplex(std::size_t actors, std::size_t layers, std::size_t edges_per_layer,
                                           std::uint64_t seed);

/// `layers` copies of one random layer: every layer has the same edge set.
MultiplexNetwork generate_identical_layers(std::size_t actors, std::size_t layers, std::size_t edges_per_layer,
                                           std::uint64_t seed);

}  // namespace multiforce

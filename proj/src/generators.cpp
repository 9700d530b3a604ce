#include "multiforce/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "multiforce/errors.hpp"
#include "multiforce/random.hpp"

namespace multiforce {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

Pair ordered(std::uint32_t a, std::uint32_t b) {
    return a < b ? Pair{a, b} : Pair{b, a};
}

MultiplexNetwork with_all_vertices(std::size_t actors, std::size_t layers) {
    MultiplexNetwork net;
    for (std::size_t a = 0; a < actors; ++a) {
        net.add_actor("a" + std::to_string(a + 1));
    }
    for (std::size_t l = 0; l < layers; ++l) {
        net.add_layer("layer" + std::to_string(l + 1));
    }
    for (std::uint32_t a = 0; a < actors; ++a) {
        for (std::uint32_t l = 0; l < layers; ++l) {
            net.add_vertex(ActorId{a}, LayerId{l});
        }
    }
    return net;
}

void add_pairs(MultiplexNetwork& net, std::uint32_t layer, std::vector<Pair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [a, b] : pairs) {
        net.add_edge(Vertex{ActorId{a}, LayerId{layer}}, Vertex{ActorId{b}, LayerId{layer}});
    }
}

// Uniform sample of `count` distinct unordered pairs over `actors` nodes.
std::vector<Pair> random_pairs(std::size_t actors, std::size_t count, Rng& rng) {
    const std::size_t max_pairs = actors * (actors - 1) / 2;
    if (count > max_pairs) {
        throw ValidationError("cannot place " + std::to_string(count) + " edges among " + std::to_string(actors) +
                              " actors");
    }
    std::vector<Pair> out;
    if (count * 3 > max_pairs) {
        std::vector<Pair> all;
        all.reserve(max_pairs);
        for (std::uint32_t a = 0; a < actors; ++a) {
            for (std::uint32_t b = a + 1; b < actors; ++b) {
                all.emplace_back(a, b);
            }
        }
        rng.shuffle(all);
        all.resize(count);
        return all;
    }
    std::vector<Pair> seen;
    while (out.size() < count) {
        const auto a = static_cast<std::uint32_t>(rng.below(actors));
        const auto b = static_cast<std::uint32_t>(rng.below(actors));
        if (a == b) {
            continue;
        }
        const Pair p = ordered(a, b);
        const auto it = std::lower_bound(seen.begin(), seen.end(), p);
        if (it != seen.end() && *it == p) {
            continue;
        }
        seen.insert(it, p);
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<std::uint32_t> synthetic_community(std::size_t layer, std::size_t community) {
    // Layer 1: {0..5} and {6..12}. Layer 2 swaps actors 5 and 6.
    std::vector<std::uint32_t> first{0, 1, 2, 3, 4, 5};
    std::vector<std::uint32_t> second{6, 7, 8, 9, 10, 11, 12};
    if (layer == 1) {
        std::swap(first.back(), second.front());
        std::sort(first.begin(), first.end());
        std::sort(second.begin(), second.end());
    }
    return community == 0 ? first : second;
}

MultiplexNetwork generate_synthetic_two_layer(std::uint64_t seed) {
    constexpr std::size_t bridges = 2;
    Rng rng(seed);
    MultiplexNetwork net = with_all_vertices(synthetic_actor_count, 2);

    for (std::uint32_t layer = 0; layer < 2; ++layer) {
        const auto a = synthetic_community(layer, 0);
        const auto b = synthetic_community(layer, 1);
        std::vector<Pair> chosen;

        // A random spanning path keeps each community connected.
        std::vector<Pair> rest;
        for (const auto& community : {a, b}) {
            auto order = community;
            rng.shuffle(order);
            for (std::size_t i = 0; i + 1 < order.size(); ++i) {
                chosen.push_back(ordered(order[i], order[i + 1]));
            }
            for (std::size_t i = 0; i < community.size(); ++i) {
                for (std::size_t j = i + 1; j < community.size(); ++j) {
                    const Pair p{community[i], community[j]};
                    if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) {
                        rest.push_back(p);
                    }
                }
            }
        }
        rng.shuffle(rest);
        const std::size_t intra = synthetic_layer_edges[layer] - bridges;
        rest.resize(intra - chosen.size());
        chosen.insert(chosen.end(), rest.begin(), rest.end());

        std::vector<Pair> cross;
        for (auto x : a) {
            for (auto y : b) {
                cross.push_back(ordered(x, y));
            }
        }
        rng.shuffle(cross);
        chosen.insert(chosen.end(), cross.begin(), cross.begin() + bridges);
        add_pairs(net, layer, std::move(chosen));
    }
    return net;
}

MultiplexNetwork generate_random_multiplex(std::size_t actors, std::size_t layers, std::size_t edges_per_layer,
                                           std::uint64_t seed) {
    Rng rng(seed);
    MultiplexNetwork net = with_all_vertices(actors, layers);
    for (std::uint32_t l = 0; l < layers; ++l) {
        add_pairs(net, l, random_pairs(actors, edges_per_layer, rng));
    }
    return net;
}

MultiplexNetwork generate_identical_layers(std::size_t actors, std::size_t layers, std::size_t edges_per_layer,
                                           std::uint64_t seed) {
    Rng rng(seed);
    MultiplexNetwork net = with_all_vertices(actors, layers);
    const auto pairs = random_pairs(actors, edges_per_layer, rng);
    for (std::uint32_t l = 0; l < layers; ++l) {
        add_pairs(net, l, pairs);
    }
    return net;
}

}  // namespace multiforce

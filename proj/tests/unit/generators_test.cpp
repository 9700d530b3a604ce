#include "multiforce/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "multiforce/io.hpp"

using namespace multiforce;

namespace {

// Connected-component check of a community by BFS over its induced edges.
bool connected(const MultiplexNetwork& net, LayerId layer, const std::vector<std::uint32_t>& community) {
    const std::set<std::uint32_t> members(community.begin(), community.end());
    std::set<std::uint32_t> seen{community.front()};
    std::queue<std::uint32_t> todo;
    todo.push(community.front());
    while (!todo.empty()) {
        const auto a = todo.front();
        todo.pop();
        for (const Edge& e : net.edges()) {
            if (e.u.layer != layer) {
                continue;
            }
            for (auto [x, y] : {std::pair{e.u.actor.value, e.v.actor.value}, std::pair{e.v.actor.value, e.u.actor.value}}) {
                if (x == a && members.contains(y) && seen.insert(y).second) {
                    todo.push(y);
                }
            }
        }
    }
    return seen.size() == members.size();
}

}  // namespace

TEST(SyntheticTwoLayer, ShapeHoldsForEverySeed) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto net = generate_synthetic_two_layer(seed);
        ASSERT_EQ(net.actor_count(), 13u);
        ASSERT_EQ(net.layer_count(), 2u);
        ASSERT_EQ(net.vertex_count(), 26u);
        ASSERT_EQ(net.edge_count(), 53u);
    }
}

TEST(SyntheticTwoLayer, SeedDeterministic) {
    EXPECT_EQ(serialize_edge_list(generate_synthetic_two_layer(1)), serialize_edge_list(generate_synthetic_two_layer(1)));
    EXPECT_NE(serialize_edge_list(generate_synthetic_two_layer(1)), serialize_edge_list(generate_synthetic_two_layer(2)));
}

TEST(SyntheticTwoLayer, TwoConnectedCommunitiesPerLayer) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto net = generate_synthetic_two_layer(seed);
        for (std::uint32_t l = 0; l < 2; ++l) {
            const auto a = synthetic_community(l, 0);
            const auto b = synthetic_community(l, 1);
            EXPECT_TRUE(connected(net, LayerId{l}, a));
            EXPECT_TRUE(connected(net, LayerId{l}, b));
            const std::set<std::uint32_t> in_a(a.begin(), a.end());
            std::size_t cut = 0;
            std::size_t intra = 0;
            for (const Edge& e : net.layer_subgraph(LayerId{l}).edges) {
                (in_a.contains(e.u.actor.value) != in_a.contains(e.v.actor.value) ? cut : intra)++;
            }
            EXPECT_LT(cut, intra);
        }
    }
}

TEST(SyntheticTwoLayer, SomeActorsSwitchCommunity) {
    std::size_t switched = 0;
    const auto a0 = synthetic_community(0, 0);
    const auto a1 = synthetic_community(1, 0);
    for (std::uint32_t actor = 0; actor < 13; ++actor) {
        const bool first = std::find(a0.begin(), a0.end(), actor) != a0.end();
        const bool second = std::find(a1.begin(), a1.end(), actor) != a1.end();
        switched += first != second;
    }
    EXPECT_GE(switched, 2u);
}

TEST(RandomMultiplex, ExactEdgeCounts) {
    const auto net = generate_random_multiplex(100, 3, 300, 7);
    EXPECT_EQ(net.vertex_count(), 300u);
    for (std::uint32_t l = 0; l < 3; ++l) {
        EXPECT_EQ(net.layer_subgraph(LayerId{l}).edges.size(), 300u);
    }
    EXPECT_THROW(generate_random_multiplex(3, 1, 4, 1), std::exception);
}

TEST(IdenticalLayers, SameEdgeSetOnEveryLayer) {
    const auto net = generate_identical_layers(20, 3, 40, 2);
    const auto first = net.layer_subgraph(LayerId{0}).edges;
    for (std::uint32_t l = 1; l < 3; ++l) {
        const auto other = net.layer_subgraph(LayerId{l}).edges;
        ASSERT_EQ(other.size(), first.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            EXPECT_EQ(other[i].u.actor, first[i].u.actor);
            EXPECT_EQ(other[i].v.actor, first[i].v.actor);
        }
    }
}

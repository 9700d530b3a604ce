#include "multiforce/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "multiforce/errors.hpp"
#include "multiforce/generators.hpp"
#include "support/oracles.hpp"

using namespace multiforce;

namespace {

MultiplexNetwork one_edge() {
    MultiplexNetwork net;
    net.add_actor("a");
    net.add_actor("b");
    net.add_layer("x");
    net.add_edge(net.add_vertex(ActorId{0}, LayerId{0}), net.add_vertex(ActorId{1}, LayerId{0}));
    return net;
}

}  // namespace

TEST(InternalFit, ZeroAtIdealDistance) {
    const double k = 2.5;
    const auto net = one_edge();
    EXPECT_NEAR(internal_fit(net, PositionMap(std::vector<Vec2>{{0, 0}, {k, 0}}), k), 0.0, 1e-9 * k);
}

TEST(InternalFit, DoubleDistance) {
    // Per vertex: pull 4k minus push k/2.
    const double k = 1.7;
    const auto net = one_edge();
    const PositionMap pos(std::vector<Vec2>{{0, 0}, {0, 2 * k}});
    EXPECT_NEAR(internal_fit(net, pos, k), 7 * k, 1e-9 * 7 * k);
    EXPECT_NEAR(internal_fit(net, pos, k), oracle::brute_force_internal_fit(net, pos, k), 1e-12);
}

TEST(ExternalFit, TwoReplicas) {
    MultiplexNetwork net;
    net.add_actor("a");
    net.add_layer("x");
    net.add_layer("y");
    net.add_vertex(ActorId{0}, LayerId{0});
    net.add_vertex(ActorId{0}, LayerId{1});
    const double k = 2.0;
    // Pull (2k)^2/k = 4k on each replica.
    EXPECT_DOUBLE_EQ(external_fit(net, PositionMap(std::vector<Vec2>{{0, 0}, {2 * k, 0}}), k), 8 * k);
    // Distance k: k on each.
    EXPECT_DOUBLE_EQ(external_fit(net, PositionMap(std::vector<Vec2>{{0, 0}, {k, 0}}), k), 2 * k);
    EXPECT_EQ(external_fit(net, PositionMap(std::vector<Vec2>{{1, 1}, {1, 1}}), k), 0.0);
}

TEST(ExternalFit, EquilateralTriangle) {
    // Three replicas at mutual distance k: two unit pulls at 60 degrees give sqrt(3)k each.
    MultiplexNetwork net;
    net.add_actor("a");
    for (const char* l : {"x", "y", "z"}) {
        net.add_vertex(ActorId{0}, net.add_layer(l));
    }
    const double k = 1.0;
    const PositionMap pos(std::vector<Vec2>{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
    EXPECT_NEAR(external_fit(net, pos, k), 3 * std::sqrt(3.0) * k, 1e-12);
}

TEST(Fit, MatchesBruteForceOnRandomInputs) {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto net = oracle::random_network(rng);
        const auto pos = oracle::random_positions(net, rng, 5.0);
        const double k = rng.uniform(0.2, 3.0);
        const double in = oracle::brute_force_internal_fit(net, pos, k);
        const double ex = oracle::brute_force_external_fit(net, pos, k);
        EXPECT_NEAR(internal_fit(net, pos, k), in, 1e-9 * std::max(1.0, in));
        EXPECT_NEAR(external_fit(net, pos, k), ex, 1e-9 * std::max(1.0, ex));
    }
}

TEST(Fit, TranslationInvariant) {
    const auto net = generate_synthetic_two_layer(1);
    Rng rng(2);
    auto pos = oracle::random_positions(net, rng, 5.0);
    const auto before = fit_report(net, pos, 1.0);
    for (Vec2& p : pos.coords()) {
        p += Vec2{3.0, -2.0};
    }
    const auto after = fit_report(net, pos, 1.0);
    EXPECT_NEAR(after.internal_fit, before.internal_fit, 1e-9 * before.internal_fit);
    EXPECT_NEAR(after.external_fit, before.external_fit, 1e-9 * before.external_fit);
}

TEST(Fit, RotatingOneLayerBreaksAlignment) {
    const auto net = generate_synthetic_two_layer(1);
    LayoutConfig c;
    c.shared_init = true;
    auto pos = initialize_positions(net, c);
    const double k = ideal_distance(c.frame, net.actor_count());
    EXPECT_EQ(external_fit(net, pos, k), 0.0);
    const double internal = internal_fit(net, pos, k);
    for (VertexIndex v : net.layer_members(LayerId{1})) {
        pos[v] = {-pos[v].y, pos[v].x};
    }
    EXPECT_GT(external_fit(net, pos, k), 0.0);
    EXPECT_NEAR(internal_fit(net, pos, k), internal, 1e-9 * internal);
}

TEST(Fit, ReportBreakdownSumsAndNormalizes) {
    const auto net = generate_synthetic_two_layer(3);
    Rng rng(4);
    const auto pos = oracle::random_positions(net, rng, 5.0);
    const auto copy = pos;
    const auto r = fit_report(net, pos, 1.0);
    EXPECT_EQ(pos, copy);
    ASSERT_EQ(r.per_layer_internal.size(), 2u);
    ASSERT_EQ(r.per_actor_external.size(), 13u);
    EXPECT_EQ(r.internal_fit, r.per_layer_internal[0] + r.per_layer_internal[1]);
    EXPECT_EQ(r.internal_fit, internal_fit(net, pos, 1.0));
    const auto n = fit_report(net, pos, 1.0, FitOptions{true});
    EXPECT_NEAR(n.internal_fit * 26, r.internal_fit, 1e-9 * r.internal_fit);
}

TEST(Fit, RejectsBadInput) {
    const auto net = one_edge();
    EXPECT_THROW(internal_fit(net, PositionMap(1), 1.0), ValidationError);
    EXPECT_THROW(external_fit(net, PositionMap(2), 0.0), ValidationError);
}

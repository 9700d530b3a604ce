#include "multiforce/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "multiforce/errors.hpp"
#include "multiforce/generators.hpp"

using namespace multiforce;

namespace {

MultiplexNetwork padgett() {
    const std::filesystem::path data = MULTIFORCE_DATA_DIR;
    return load_dataset(parse_manifest(read_file(data / "manifest.json"), data).at(0));
}

}  // namespace

TEST(Settings, Resolve) {
    const auto net = generate_synthetic_two_layer(0);
    LayoutConfig base;
    base.iterations = 7;
    const auto bal = resolve_setting("balanced", net, base);
    EXPECT_EQ(bal.config.iterations, 7);
    EXPECT_EQ(bal.config.weights.interla(LayerId{0}, LayerId{1}), 1.0);
    const auto ind = resolve_setting("independent", net, base);
    EXPECT_EQ(ind.config.weights.interla(LayerId{0}, LayerId{1}), 0.0);
    EXPECT_FALSE(ind.config.shared_init);
    const auto anc = resolve_setting("anchored:layer2", net, base);
    EXPECT_EQ(anc.config.weights.inla(LayerId{0}), 0.0);
    EXPECT_EQ(anc.config.weights.inla(LayerId{1}), 1.0);
    EXPECT_TRUE(anc.config.shared_init);
    EXPECT_THROW(resolve_setting("anchored:nope", net, base), ValidationError);
    EXPECT_THROW(resolve_setting("bogus", net, base), ValidationError);
}

TEST(Settings, ComparisonList) {
    const auto net = generate_random_multiplex(10, 4, 10, 0);
    EXPECT_EQ(comparison_settings(net).size(), 6u);
    const auto capped = comparison_settings(net, 1);
    ASSERT_EQ(capped.size(), 3u);
    EXPECT_EQ(capped[2], "anchored:layer1");
}

TEST(Sweep, CompareOnPadgett) {
    LayoutConfig base;
    base.iterations = 20;
    const auto result = compare_sweep(padgett(), "padgett", base, 0, 10);
    ASSERT_EQ(result.rows.size(), 40u);
    EXPECT_EQ(result.metrics_rows().size(), 40u);
    for (const auto& r : result.rows) {
        EXPECT_TRUE(std::isfinite(r.fit.internal_fit));
        EXPECT_TRUE(std::isfinite(r.fit.external_fit));
        EXPECT_GE(r.seconds, 0.0);
    }
    const std::string csv = sweep_csv(result);
    EXPECT_EQ(csv.rfind("dataset,setting,seed,internal_fit,external_fit\n", 0), 0u);
    EXPECT_EQ(csv, sweep_csv(compare_sweep(padgett(), "padgett", base, 0, 10)));
}

TEST(Sweep, CompareNeedsTwoLayers) {
    const auto net = generate_random_multiplex(10, 1, 10, 0);
    EXPECT_THROW(compare_sweep(net, "one", LayoutConfig{}, 0, 1), ValidationError);
}

TEST(Sweep, GridCells) {
    const auto net = generate_synthetic_two_layer(0);
    LayoutConfig base;
    base.iterations = 5;
    const std::vector<double> values{0.0, 0.5, 1.0};
    const auto grid = grid_sweep(net, "synthetic", base, values, values, 0, 1);
    ASSERT_EQ(grid.rows.size(), 9u);
    EXPECT_EQ(grid.rows[0].setting, "inla=0/interla=0");
    EXPECT_EQ(grid.rows[1].setting, "inla=0/interla=0.5");
    EXPECT_EQ(grid.rows[8].setting, "inla=1/interla=1");
    const std::vector<double> one{1.0};
    const std::vector<double> two{0.0, 1.0};
    EXPECT_EQ(grid_sweep(net, "synthetic", base, one, two, 0, 1).rows.size(), 2u);
    const std::vector<double> bad{1.5};
    EXPECT_THROW(grid_sweep(net, "synthetic", base, bad, one, 0, 1), ValidationError);
}

TEST(Sweep, MediansPerSetting) {
    SweepResult r;
    for (double v : {3.0, 1.0, 2.0}) {
        RunRecord rec;
        rec.setting = "s";
        rec.fit.internal_fit = v;
        rec.fit.external_fit = 10 * v;
        r.rows.push_back(rec);
    }
    EXPECT_EQ(r.median_internal("s"), 2.0);
    EXPECT_EQ(r.median_external("s"), 20.0);
}

TEST(Stats, MedianAndSlope) {
    EXPECT_EQ(median({4.0, 1.0, 3.0, 2.0}), 2.5);
    EXPECT_TRUE(std::isnan(median({})));
    const std::vector<double> x{100, 200, 400, 800};
    std::vector<double> y;
    for (double n : x) {
        y.push_back(3e-6 * n * n);
    }
    EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-12);
}

TEST(Scaling, RowsAndCsv) {
    LayoutConfig base;
    base.iterations = 2;
    const std::vector<std::size_t> counts{10, 20};
    const auto rows = scaling_sweep(2, counts, 4.0, base, 0, 2);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].actors, 10u);
    EXPECT_EQ(rows[3].actors, 20u);
    EXPECT_EQ(scaling_csv(rows).rfind("actors,layers,seed,seconds\n", 0), 0u);
    const std::vector<std::size_t> descending{20, 10};
    EXPECT_THROW(scaling_sweep(2, descending, 4.0, base, 0, 1), ValidationError);
}

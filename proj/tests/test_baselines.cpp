#include <doctest.h>

#include <set>

#include "gbmst/baselines.hpp"
#include "gbmst/errors.hpp"
#include "gbmst/generators.hpp"
#include "gbmst/metrics.hpp"
#include "gbmst/rng.hpp"
#include "oracles.hpp"

using namespace gbmst;

namespace {

Dataset from_points(const std::vector<std::vector<double>>& pts) {
    Dataset d;
    d.dim = pts[0].size();
    for (const auto& p : pts) d.values.insert(d.values.end(), p.begin(), p.end());
    return d;
}

GeneratorSpec two_blob_spec(std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::blobs;
    spec.n_points = n;
    spec.seed = seed;
    spec.sigma = 0.05;
    spec.blob_centers = {{0.0, 0.0}, {1.0, 1.0}};
    return spec;
}

}  // namespace

TEST_CASE("normal_mst: collinear points split at the big gap") {
    const Dataset d = from_points({{0}, {1}, {2}, {10}});
    const auto result = normal_mst_cluster(d, 2);
    CHECK(result.point_labels == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("normal_mst: clean two-blob data is exact") {
    const Dataset data = generate(two_blob_spec(100, 19));
    const auto result = normal_mst_cluster(data, 2);
    CHECK(ari(result.point_labels, *data.labels) == doctest::Approx(1.0));
}

TEST_CASE("normal_mst: a midpoint bridge distorts the cut") {
    // Two tight blobs plus one point sitting exactly between them. The bridge
    // halves the gap, so the longest-edge heuristic slices off a fringe point
    // instead of separating the blobs.
    SplitMix64 rng(41);
    std::vector<std::vector<double>> pts;
    std::vector<int> truth;
    for (int i = 0; i < 30; ++i) {
        pts.push_back({rng.normal() * 0.05, rng.normal() * 0.05});
        truth.push_back(0);
    }
    for (int i = 0; i < 30; ++i) {
        pts.push_back({1.0 + rng.normal() * 0.05, 1.0 + rng.normal() * 0.05});
        truth.push_back(1);
    }
    pts.push_back({0.5, 0.5});
    truth.push_back(0);  // fold the bridge into blob 0 for scoring
    const Dataset d = from_points(pts);

    const auto normal = normal_mst_cluster(d, 2);
    const double normal_ari = ari(normal.point_labels, truth);
    CHECK(normal_ari < 1.0);

    ClusterConfig config;
    config.k = 2;
    config.generation.min_ball_size = 8;
    const auto gb = cluster(d, config);
    const double gb_ari = ari(gb.point_labels, truth);
    CHECK(gb_ari > normal_ari);
    CHECK(gb_ari == doctest::Approx(1.0));
}

TEST_CASE("normal_mst equals single linkage on raw points") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 8 + rng.below(56);
        const Dataset d = oracles::random_dataset(rng, n, 2);
        const std::size_t k = 2 + rng.below(3);
        const auto result = normal_mst_cluster(d, k, /*normalize=*/false);
        std::vector<std::vector<double>> dis(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) dis[i][j] = euclidean(d.point(i), d.point(j));
        CHECK(result.point_labels == oracles::single_linkage(n, dis, k));
    }
}

TEST_CASE("normal_mst: TooManyClusters") {
    const Dataset d = from_points({{0}, {1}});
    CHECK_THROWS_AS(normal_mst_cluster(d, 3), TooManyClusters);
}

TEST_CASE("kmeans: k = n puts every point in its own cluster") {
    const Dataset d = from_points({{0, 0}, {1, 0}, {0, 1}, {5, 5}});
    const auto result = kmeans(d, 4, 123);
    std::set<int> distinct(result.point_labels.begin(), result.point_labels.end());
    CHECK(distinct.size() == 4);
}

TEST_CASE("kmeans: two far pairs always group, any seed") {
    const Dataset d = from_points({{0, 0}, {0.01, 0}, {9, 9}, {9.01, 9}});
    for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
        const auto result = kmeans(d, 2, seed);
        CHECK(result.point_labels[0] == result.point_labels[1]);
        CHECK(result.point_labels[2] == result.point_labels[3]);
        CHECK(result.point_labels[0] != result.point_labels[2]);
    }
}

TEST_CASE("kmeans: inertia is non-increasing across iterations") {
    SplitMix64 rng(43);
    const Dataset d = oracles::random_dataset(rng, 200, 3);
    std::vector<double> inertia;
    kmeans(d, 3, 7, 100, true, &inertia);
    REQUIRE(inertia.size() >= 2);
    for (std::size_t i = 1; i < inertia.size(); ++i)
        CHECK(inertia[i] <= inertia[i - 1] + 1e-9);
}

TEST_CASE("baselines are deterministic given (dataset, k, seed)") {
    const Dataset data = generate(two_blob_spec(80, 23));
    const auto a = kmeans(data, 2, 5);
    const auto b = kmeans(data, 2, 5);
    CHECK(a.point_labels == b.point_labels);
    const auto m1 = normal_mst_cluster(data, 3);
    const auto m2 = normal_mst_cluster(data, 3);
    CHECK(m1.point_labels == m2.point_labels);
}

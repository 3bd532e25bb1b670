#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gbmst/ball_graph.hpp"
#include "gbmst/dataset.hpp"
#include "gbmst/granular_ball.hpp"

namespace gbmst {

struct ClusterConfig {
    std::size_t k = 2;
    bool normalize = true;
    GenerationConfig generation;
    // Edge weight used for the tree and for outlier attachment. The clamped
    // gap (ball_distance) zeroes every edge once balls overlap a lot, which
    // happens on higher-dimensional data and leaves the cut step nothing to
    // rank; center distance keeps the ordering. See README.
    BallMetric mst_weight = BallMetric::center;
};

struct StageTimings {
    double normalize_seconds = 0.0;
    double generation_seconds = 0.0;
    double graph_seconds = 0.0;
    double cut_seconds = 0.0;
    double assign_seconds = 0.0;
    double total_seconds = 0.0;
};

struct Clustering {
    std::vector<int> point_labels;           // one per dataset point, in [0, k)
    std::vector<int> ball_labels;            // one per ball; empty for k-means
    std::vector<WeightedEdge> tree_edges;    // full spanning tree, pre-cut
    std::vector<WeightedEdge> cut_edges;     // the k-1 removed tree edges
    std::vector<std::pair<std::size_t, std::size_t>> outlier_assignments;
    GranularBallSet balls;                   // empty for the baselines
    std::size_t ball_count = 0;
    std::size_t outlier_count = 0;
    std::size_t core_count = 0;
    StageTimings timings;
};

// Removes the k-1 largest-weight edges (ties: lexicographically largest
// (a, b) pair goes first). Returns {kept forest edges, cut edges}.
std::pair<std::vector<WeightedEdge>, std::vector<WeightedEdge>> cut_longest_edges(
    const MSTree& mst, std::size_t k);

// Union-find component labels for node_ids under the forest edges, renumbered
// 0..k-1 in order of the smallest node id each component contains. Returned
// vector is parallel to node_ids.
std::vector<int> label_components(std::span<const WeightedEdge> forest,
                                  std::span<const std::size_t> node_ids);

// Nearest labeled core ball wins; ties go to the lowest core ball index.
// Returned vector is parallel to `outliers`.
std::vector<int> assign_outliers(const std::vector<GranularBall>& balls,
                                 std::span<const std::size_t> outliers,
                                 std::span<const std::size_t> core,
                                 std::span<const int> core_labels,
                                 BallMetric metric = BallMetric::gap);

// Full pipeline: normalize -> generate balls -> drop outlier balls -> MST ->
// cut k-1 longest -> label components -> re-attach outliers -> project ball
// labels onto points. Deterministic.
Clustering cluster(const Dataset& dataset, const ClusterConfig& config);

}  // namespace gbmst

#include "gbmst/cluster.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "gbmst/errors.hpp"

namespace gbmst {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<std::size_t, std::size_t> ordered_pair(const WeightedEdge& e) {
    return {std::min(e.a, e.b), std::max(e.a, e.b)};
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

// Position (into `core`) of the nearest core ball for each outlier; ties go
// to the lowest core ball index.
std::vector<std::size_t> nearest_core_positions(const std::vector<GranularBall>& balls,
                                                std::span<const std::size_t> outliers,
                                                std::span<const std::size_t> core,
                                                BallMetric metric) {
    std::vector<std::size_t> positions;
    positions.reserve(outliers.size());
    for (const std::size_t o : outliers) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_pos = 0;
        for (std::size_t c = 0; c < core.size(); ++c) {
            const double d = ball_weight(metric, balls[o], balls[core[c]]);
            if (d < best || (d == best && core[c] < core[best_pos])) {
                best = d;
                best_pos = c;
            }
        }
        positions.push_back(best_pos);
    }
    return positions;
}

}  // namespace

std::pair<std::vector<WeightedEdge>, std::vector<WeightedEdge>> cut_longest_edges(
    const MSTree& mst, std::size_t k) {
    if (k < 1) throw InvalidK();
    if (k > mst.node_ids.size())
        throw TooManyClusters("k = " + std::to_string(k) + " exceeds " +
                              std::to_string(mst.node_ids.size()) + " tree nodes");

    std::vector<std::size_t> order(mst.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& ex = mst.edges[x];
        const auto& ey = mst.edges[y];
        if (ex.weight != ey.weight) return ex.weight > ey.weight;
        return ordered_pair(ex) > ordered_pair(ey);
    });

    std::vector<bool> is_cut(mst.edges.size(), false);
    for (std::size_t i = 0; i + 1 < k; ++i) is_cut[order[i]] = true;

    std::vector<WeightedEdge> forest;
    std::vector<WeightedEdge> cut;
    forest.reserve(mst.edges.size() - (k - 1));
    cut.reserve(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) cut.push_back(mst.edges[order[i]]);
    for (std::size_t i = 0; i < mst.edges.size(); ++i)
        if (!is_cut[i]) forest.push_back(mst.edges[i]);
    return {std::move(forest), std::move(cut)};
}

std::vector<int> label_components(std::span<const WeightedEdge> forest,
                                  std::span<const std::size_t> node_ids) {
    std::unordered_map<std::size_t, std::size_t> position;
    position.reserve(node_ids.size());
    for (std::size_t i = 0; i < node_ids.size(); ++i) position[node_ids[i]] = i;

    UnionFind uf(node_ids.size());
    for (const auto& e : forest) uf.unite(position.at(e.a), position.at(e.b));

    // Renumber components 0..k-1 in order of the smallest node id they hold.
    std::vector<std::size_t> sorted_positions(node_ids.size());
    for (std::size_t i = 0; i < node_ids.size(); ++i) sorted_positions[i] = i;
    std::sort(sorted_positions.begin(), sorted_positions.end(),
              [&](std::size_t x, std::size_t y) { return node_ids[x] < node_ids[y]; });

    std::unordered_map<std::size_t, int> root_label;
    int next = 0;
    for (const std::size_t pos : sorted_positions) {
        const std::size_t root = uf.find(pos);
        if (root_label.emplace(root, next).second) ++next;
    }
    std::vector<int> labels(node_ids.size());
    for (std::size_t i = 0; i < node_ids.size(); ++i)
        labels[i] = root_label.at(uf.find(i));
    return labels;
}

std::vector<int> assign_outliers(const std::vector<GranularBall>& balls,
                                 std::span<const std::size_t> outliers,
                                 std::span<const std::size_t> core,
                                 std::span<const int> core_labels,
                                 BallMetric metric) {
    if (core.empty() || core_labels.size() != core.size())
        throw InternalError("assign_outliers needs a labeled, non-empty core");
    const auto positions = nearest_core_positions(balls, outliers, core, metric);
    std::vector<int> labels;
    labels.reserve(outliers.size());
    for (const std::size_t pos : positions) labels.push_back(core_labels[pos]);
    return labels;
}

Clustering cluster(const Dataset& dataset, const ClusterConfig& config) {
    dataset.validate();
    if (config.k < 1) throw InvalidK();
    const auto total_start = Clock::now();

    auto stage_start = Clock::now();
    const Dataset* working = &dataset;
    Dataset normalized;
    if (config.normalize) {
        normalized = normalize_minmax(dataset);
        working = &normalized;
    }
    Clustering result;
    result.timings.normalize_seconds = seconds_since(stage_start);

    stage_start = Clock::now();
    GranularBallSet gbs = generate_granular_balls(*working, config.generation);
    result.timings.generation_seconds = seconds_since(stage_start);
    result.ball_count = gbs.balls.size();

    stage_start = Clock::now();
    const BallPartition partition = partition_outliers(gbs);
    result.outlier_count = partition.outliers.size();
    result.core_count = partition.core.size();
    if (config.k > partition.core.size())
        throw TooManyClusters("k = " + std::to_string(config.k) + " exceeds " +
                              std::to_string(partition.core.size()) + " core balls");
    const MSTree tree = build_mst(gbs.balls, partition.core, config.mst_weight);
    result.tree_edges = tree.edges;
    result.timings.graph_seconds = seconds_since(stage_start);

    stage_start = Clock::now();
    auto [forest, cut] = cut_longest_edges(tree, config.k);
    const std::vector<int> core_labels = label_components(forest, tree.node_ids);
    result.cut_edges = std::move(cut);
    result.timings.cut_seconds = seconds_since(stage_start);

    stage_start = Clock::now();
    const auto outlier_positions = nearest_core_positions(
        gbs.balls, partition.outliers, partition.core, config.mst_weight);

    result.ball_labels.assign(gbs.balls.size(), -1);
    for (std::size_t i = 0; i < partition.core.size(); ++i)
        result.ball_labels[partition.core[i]] = core_labels[i];
    for (std::size_t i = 0; i < partition.outliers.size(); ++i) {
        const std::size_t target = partition.core[outlier_positions[i]];
        result.ball_labels[partition.outliers[i]] = core_labels[outlier_positions[i]];
        result.outlier_assignments.emplace_back(partition.outliers[i], target);
    }

    result.point_labels.assign(working->size(), 0);
    for (std::size_t b = 0; b < gbs.balls.size(); ++b)
        for (const std::size_t p : gbs.balls[b].members)
            result.point_labels[p] = result.ball_labels[b];
    result.timings.assign_seconds = seconds_since(stage_start);
    result.balls = std::move(gbs);
    result.timings.total_seconds = seconds_since(total_start);
    return result;
}

}  // namespace gbmst

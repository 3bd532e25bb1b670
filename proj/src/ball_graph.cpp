#include "gbmst/ball_graph.hpp"

#include <algorithm>
#include <limits>

#include "gbmst/errors.hpp"

namespace gbmst {

double ball_distance(const GranularBall& a, const GranularBall& b) {
    const double gap = euclidean(a.center, b.center) - (a.radius + b.radius);
    return gap > 0.0 ? gap : 0.0;
}

double center_distance(const GranularBall& a, const GranularBall& b) {
    return euclidean(a.center, b.center);
}

double ball_weight(BallMetric metric, const GranularBall& a, const GranularBall& b) {
    return metric == BallMetric::gap ? ball_distance(a, b) : center_distance(a, b);
}

BallPartition partition_outliers(const GranularBallSet& gbs) {
    BallPartition partition;
    for (std::size_t i = 0; i < gbs.balls.size(); ++i) {
        if (gbs.balls[i].count() <= 2)
            partition.outliers.push_back(i);
        else
            partition.core.push_back(i);
    }
    if (partition.core.empty()) {
        partition.core = std::move(partition.outliers);
        partition.outliers.clear();
        partition.fallback_all_core = true;
        warn("every ball has <= 2 members; treating all balls as core");
    }
    return partition;
}

MSTree build_mst(const std::vector<GranularBall>& balls,
                 std::span<const std::size_t> core, BallMetric metric) {
    if (core.empty()) throw NoCoreBalls();

    MSTree tree;
    tree.node_ids.assign(core.begin(), core.end());
    const std::size_t n = core.size();
    if (n == 1) return tree;

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<bool> in_tree(n, false);
    std::vector<double> best_weight(n, inf);
    std::vector<std::size_t> best_source(n, 0);

    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v)
        best_weight[v] = ball_weight(metric, balls[core[0]], balls[core[v]]);

    tree.edges.reserve(n - 1);
    for (std::size_t round = 1; round < n; ++round) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (pick == n || best_weight[v] < best_weight[pick] ||
                (best_weight[v] == best_weight[pick] &&
                 std::pair(best_source[v], v) < std::pair(best_source[pick], pick)))
                pick = v;
        }
        tree.edges.push_back({core[best_source[pick]], core[pick], best_weight[pick]});
        in_tree[pick] = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = ball_weight(metric, balls[core[pick]], balls[core[v]]);
            if (w < best_weight[v] || (w == best_weight[v] && pick < best_source[v])) {
                best_weight[v] = w;
                best_source[v] = pick;
            }
        }
    }
    return tree;
}

}  // namespace gbmst

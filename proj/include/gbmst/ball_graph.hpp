#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gbmst/granular_ball.hpp"

namespace gbmst {

struct WeightedEdge {
    std::size_t a;
    std::size_t b;
    double weight;
};

// Spanning tree over the core balls; node_ids index into the originating
// ball list and edges hold exactly node_ids.size() - 1 entries.
struct MSTree {
    std::vector<std::size_t> node_ids;
    std::vector<WeightedEdge> edges;
};

struct BallPartition {
    std::vector<std::size_t> core;
    std::vector<std::size_t> outliers;
    // True when every ball had <= 2 members and all were promoted to core.
    bool fallback_all_core = false;
};

// Center distance minus both radii, clamped at zero for overlapping balls.
// Not a metric after clamping; MST construction does not need one.
double ball_distance(const GranularBall& a, const GranularBall& b);

// Plain center-to-center distance (balls as sample points).
double center_distance(const GranularBall& a, const GranularBall& b);

enum class BallMetric { gap, center };

double ball_weight(BallMetric metric, const GranularBall& a, const GranularBall& b);

// Balls with <= 2 members are outliers and sit out MST construction. If that
// would empty the core, all balls are kept as core and a warning is emitted.
BallPartition partition_outliers(const GranularBallSet& gbs);

// Dense Prim over the complete graph on `core`; weights evaluated on demand.
// Equal-weight frontier ties resolve to the smaller (source, target) pair, so
// the edge list is deterministic.
MSTree build_mst(const std::vector<GranularBall>& balls,
                 std::span<const std::size_t> core,
                 BallMetric metric = BallMetric::gap);

}  // namespace gbmst

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gbmst/dataset.hpp"

namespace gbmst {

// One coarse-grained ball over a subset of dataset points. center is the
// member mean, radius the maximum member-to-center distance, sum_dist the
// total member-to-center distance and dm = sum_dist / count the mean
// member-to-center distance (the distribution measure). dm is what the split
// loop compares; it always satisfies 0 <= dm <= radius.
struct GranularBall {
    std::vector<std::size_t> members;  // sorted ascending, non-empty
    std::vector<double> center;
    double radius = 0.0;
    double sum_dist = 0.0;
    double dm = 0.0;

    std::size_t count() const { return members.size(); }
};

struct GranularBallSet {
    std::vector<GranularBall> balls;
    std::size_t dataset_size = 0;
};

enum class FarthestPairMode { exact, heuristic };

struct GenerationConfig {
    // 0 = auto: clamp(max(ceil(sqrt(n)), 15), 1, max(1, n/4)). Balls stop
    // splitting once their member count drops to this size.
    std::size_t min_ball_size = 0;
    // A ball is force-split while radius > oversize_factor * max(mean r, median r).
    double oversize_factor = 2.0;
    FarthestPairMode farthest_pair_mode = FarthestPairMode::heuristic;
    // Per-phase pass cap; 0 = auto: max(10, 10*ceil(log2 n)). Hitting the cap
    // warns but is not an error.
    std::size_t max_iterations = 0;

    std::size_t effective_min_ball_size(std::size_t n) const;
    std::size_t effective_max_iterations(std::size_t n) const;
};

// Optional trace of what generation did; used by tests and reports.
struct GenerationLog {
    std::size_t phase1_passes = 0;
    std::size_t phase2_passes = 0;
    bool iteration_capped = false;
    // (parent dm, weighted child dm) for every accepted phase-1 split.
    std::vector<std::pair<double, double>> accepted_splits;
};

std::vector<double> compute_center(const Dataset& dataset,
                                   std::span<const std::size_t> members);

// radius = max member-to-center distance, sum = total distance.
std::pair<double, double> compute_radius_and_sum(const Dataset& dataset,
                                                 std::span<const std::size_t> members,
                                                 std::span<const double> center);

double compute_dm(double sum_dist, std::size_t count);

// Size-weighted mean of the child dm values; algebraically equals
// (child1.sum_dist + child2.sum_dist) / parent_count.
double weighted_dm(const GranularBall& child1, const GranularBall& child2,
                   std::size_t parent_count);

GranularBall make_ball(const Dataset& dataset, std::vector<std::size_t> members);

// Splits on the two farthest members (exact pairwise scan or the two-pass
// heuristic), assigning every member to the nearer seed; ties go to the seed
// with the lower dataset index.
std::pair<GranularBall, GranularBall> split_ball(const GranularBall& ball,
                                                 const Dataset& dataset,
                                                 const GenerationConfig& config);

// Adaptive two-phase generation: dm-guided splitting down to min_ball_size,
// then force-splitting of oversized balls. The returned balls partition
// [0, n).
GranularBallSet generate_granular_balls(const Dataset& dataset,
                                        const GenerationConfig& config = {},
                                        GenerationLog* log = nullptr);

}  // namespace gbmst

#include "gbmst/granular_ball.hpp"

#include <algorithm>
#include <cmath>

#include "gbmst/errors.hpp"

namespace gbmst {

namespace {

// Strict comparison guard so float noise never triggers a split.
constexpr double kSplitTolerance = 1e-12;

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::size_t GenerationConfig::effective_min_ball_size(std::size_t n) const {
    if (min_ball_size > 0) return min_ball_size;
    const auto sqrt_n =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    // sqrt(n) convention with a small-n floor; the cap keeps tiny datasets
    // splittable at all. See README for the floor's calibration.
    const std::size_t floor_size = std::max<std::size_t>(sqrt_n, 15);
    const std::size_t cap = std::max<std::size_t>(1, n / 4);
    return std::clamp<std::size_t>(floor_size, 1, cap);
}

std::size_t GenerationConfig::effective_max_iterations(std::size_t n) const {
    if (max_iterations > 0) return max_iterations;
    const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
    return std::max<std::size_t>(10, 10 * static_cast<std::size_t>(std::ceil(lg)));
}

std::vector<double> compute_center(const Dataset& dataset,
                                   std::span<const std::size_t> members) {
    if (members.empty()) throw EmptyBall();
    std::vector<double> center(dataset.dim, 0.0);
    for (const std::size_t idx : members) {
        const auto p = dataset.point(idx);
        for (std::size_t c = 0; c < dataset.dim; ++c) center[c] += p[c];
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (double& v : center) v *= inv;
    return center;
}

std::pair<double, double> compute_radius_and_sum(const Dataset& dataset,
                                                 std::span<const std::size_t> members,
                                                 std::span<const double> center) {
    if (members.empty()) throw EmptyBall();
    if (center.size() != dataset.dim)
        throw DimensionMismatch("center dimension does not match dataset");
    double radius = 0.0;
    double sum = 0.0;
    for (const std::size_t idx : members) {
        const double d = euclidean(dataset.point(idx), center);
        radius = std::max(radius, d);
        sum += d;
    }
    return {radius, sum};
}

double compute_dm(double sum_dist, std::size_t count) {
    if (count == 0) throw EmptyBall();
    return sum_dist / static_cast<double>(count);
}

double weighted_dm(const GranularBall& child1, const GranularBall& child2,
                   std::size_t parent_count) {
    if (child1.count() + child2.count() != parent_count)
        throw InvalidSplit("child counts do not add up to the parent count");
    const double n = static_cast<double>(parent_count);
    return (static_cast<double>(child1.count()) / n) * child1.dm +
           (static_cast<double>(child2.count()) / n) * child2.dm;
}

GranularBall make_ball(const Dataset& dataset, std::vector<std::size_t> members) {
    GranularBall ball;
    ball.members = std::move(members);
    std::sort(ball.members.begin(), ball.members.end());
    ball.center = compute_center(dataset, ball.members);
    const auto [radius, sum] = compute_radius_and_sum(dataset, ball.members, ball.center);
    ball.radius = radius;
    ball.sum_dist = sum;
    ball.dm = compute_dm(sum, ball.members.size());
    return ball;
}

namespace {

// Seed pair for a split: the two farthest members, exactly or via the
// two-pass heuristic (farthest from center, then farthest from that point).
// All argmax ties resolve to the lowest dataset index.
std::pair<std::size_t, std::size_t> pick_seeds(const GranularBall& ball,
                                               const Dataset& dataset,
                                               FarthestPairMode mode) {
    const auto& mem = ball.members;
    if (mode == FarthestPairMode::exact) {
        double best = -1.0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const auto pi = dataset.point(mem[i]);
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                const double d = euclidean(pi, dataset.point(mem[j]));
                if (d > best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        return {mem[bi], mem[bj]};
    }

    std::size_t first = mem[0];
    double best = -1.0;
    for (const std::size_t idx : mem) {
        const double d = euclidean(dataset.point(idx), ball.center);
        if (d > best) {
            best = d;
            first = idx;
        }
    }
    std::size_t second = mem[0];
    best = -1.0;
    const auto pf = dataset.point(first);
    for (const std::size_t idx : mem) {
        const double d = euclidean(dataset.point(idx), pf);
        if (d > best) {
            best = d;
            second = idx;
        }
    }
    return {first, second};
}

}  // namespace

std::pair<GranularBall, GranularBall> split_ball(const GranularBall& ball,
                                                 const Dataset& dataset,
                                                 const GenerationConfig& config) {
    if (ball.count() < 2) throw CannotSplit();

    auto [s1, s2] = pick_seeds(ball, dataset, config.farthest_pair_mode);
    if (s1 > s2) std::swap(s1, s2);  // C1 is the lower-index seed
    const auto p1 = dataset.point(s1);
    const auto p2 = dataset.point(s2);
    if (euclidean(p1, p2) == 0.0) throw DegenerateBall();

    std::vector<std::size_t> m1, m2;
    m1.reserve(ball.count());
    m2.reserve(ball.count());
    for (const std::size_t idx : ball.members) {
        const auto p = dataset.point(idx);
        if (euclidean(p, p1) <= euclidean(p, p2))
            m1.push_back(idx);
        else
            m2.push_back(idx);
    }
    if (m1.empty() || m2.empty())
        throw InternalError("nearest-seed assignment produced an empty child");
    return {make_ball(dataset, std::move(m1)), make_ball(dataset, std::move(m2))};
}

GranularBallSet generate_granular_balls(const Dataset& dataset,
                                        const GenerationConfig& config,
                                        GenerationLog* log) {
    dataset.validate();
    const std::size_t n = dataset.size();
    const std::size_t min_size = config.effective_min_ball_size(n);
    const std::size_t max_passes = config.effective_max_iterations(n);

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;

    std::vector<GranularBall> balls;
    balls.push_back(make_ball(dataset, std::move(all)));

    const auto try_split = [&](const GranularBall& ball,
                               std::pair<GranularBall, GranularBall>& out) {
        try {
            out = split_ball(ball, dataset, config);
            return true;
        } catch (const DegenerateBall&) {
            return false;  // identical members stay one ball
        }
    };

    // Phase 1: split while the size-weighted child dm improves on the parent.
    bool capped = false;
    std::size_t pass = 0;
    for (; pass < max_passes; ++pass) {
        std::vector<GranularBall> next;
        next.reserve(balls.size() + 8);
        bool changed = false;
        for (auto& ball : balls) {
            if (ball.count() > min_size) {
                std::pair<GranularBall, GranularBall> children;
                if (try_split(ball, children)) {
                    const double dm_w =
                        weighted_dm(children.first, children.second, ball.count());
                    if (ball.dm - dm_w > kSplitTolerance * std::max(1.0, ball.dm)) {
                        if (log) log->accepted_splits.emplace_back(ball.dm, dm_w);
                        next.push_back(std::move(children.first));
                        next.push_back(std::move(children.second));
                        changed = true;
                        continue;
                    }
                }
            }
            next.push_back(std::move(ball));
        }
        balls = std::move(next);
        if (!changed) break;
        if (pass + 1 == max_passes) capped = true;
    }
    if (log) log->phase1_passes = pass + 1;

    // Phase 2: force-split oversized balls; the radius statistics are
    // recomputed over all current balls each pass.
    std::size_t pass2 = 0;
    for (; pass2 < max_passes; ++pass2) {
        std::vector<double> radii;
        radii.reserve(balls.size());
        double mean = 0.0;
        for (const auto& b : balls) {
            radii.push_back(b.radius);
            mean += b.radius;
        }
        mean /= static_cast<double>(balls.size());
        const double threshold =
            config.oversize_factor * std::max(mean, median_of(std::move(radii)));

        std::vector<GranularBall> next;
        next.reserve(balls.size() + 8);
        bool changed = false;
        for (auto& ball : balls) {
            if (ball.count() >= 2 && ball.radius > threshold) {
                std::pair<GranularBall, GranularBall> children;
                if (try_split(ball, children)) {
                    next.push_back(std::move(children.first));
                    next.push_back(std::move(children.second));
                    changed = true;
                    continue;
                }
            }
            next.push_back(std::move(ball));
        }
        balls = std::move(next);
        if (!changed) break;
        if (pass2 + 1 == max_passes) capped = true;
    }
    if (log) {
        log->phase2_passes = pass2 + 1;
        log->iteration_capped = capped;
    }
    if (capped)
        warn("granular-ball generation hit the iteration cap before stabilizing");

    GranularBallSet set;
    set.balls = std::move(balls);
    set.dataset_size = n;
    return set;
}

}  // namespace gbmst

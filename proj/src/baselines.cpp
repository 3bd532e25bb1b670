#include "gbmst/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "gbmst/errors.hpp"
#include "gbmst/rng.hpp"

namespace gbmst {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Point-level Prim with the same tie rules as the ball graph.
std::vector<WeightedEdge> prim_points(const Dataset& data) {
    const std::size_t n = data.size();
    std::vector<WeightedEdge> edges;
    if (n < 2) return edges;

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<bool> in_tree(n, false);
    std::vector<double> best_weight(n, inf);
    std::vector<std::size_t> best_source(n, 0);

    in_tree[0] = true;
    const auto p0 = data.point(0);
    for (std::size_t v = 1; v < n; ++v) best_weight[v] = euclidean(p0, data.point(v));

    edges.reserve(n - 1);
    for (std::size_t round = 1; round < n; ++round) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (pick == n || best_weight[v] < best_weight[pick] ||
                (best_weight[v] == best_weight[pick] &&
                 std::pair(best_source[v], v) < std::pair(best_source[pick], pick)))
                pick = v;
        }
        edges.push_back({best_source[pick], pick, best_weight[pick]});
        in_tree[pick] = true;
        const auto pp = data.point(pick);
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = euclidean(pp, data.point(v));
            if (w < best_weight[v] || (w == best_weight[v] && pick < best_source[v])) {
                best_weight[v] = w;
                best_source[v] = pick;
            }
        }
    }
    return edges;
}

}  // namespace

Clustering normal_mst_cluster(const Dataset& dataset, std::size_t k, bool normalize) {
    dataset.validate();
    if (k < 1) throw InvalidK();
    const std::size_t n = dataset.size();
    if (k > n)
        throw TooManyClusters("k = " + std::to_string(k) + " exceeds " +
                              std::to_string(n) + " points");
    const auto start = Clock::now();

    const Dataset* working = &dataset;
    Dataset normalized;
    if (normalize) {
        normalized = normalize_minmax(dataset);
        working = &normalized;
    }

    MSTree tree;
    tree.node_ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) tree.node_ids[i] = i;
    tree.edges = prim_points(*working);

    auto [forest, cut] = cut_longest_edges(tree, k);
    const std::vector<int> labels = label_components(forest, tree.node_ids);

    Clustering result;
    result.point_labels = labels;
    result.tree_edges = std::move(tree.edges);
    result.cut_edges = std::move(cut);
    result.timings.total_seconds = seconds_since(start);
    return result;
}

Clustering kmeans(const Dataset& dataset, std::size_t k, std::uint64_t seed,
                  std::size_t max_iter, bool normalize,
                  std::vector<double>* inertia_trace) {
    dataset.validate();
    if (k < 1) throw InvalidK();
    const std::size_t n = dataset.size();
    if (k > n)
        throw TooManyClusters("k = " + std::to_string(k) + " exceeds " +
                              std::to_string(n) + " points");
    const auto start = Clock::now();

    const Dataset* working = &dataset;
    Dataset normalized;
    if (normalize) {
        normalized = normalize_minmax(dataset);
        working = &normalized;
    }
    const Dataset& data = *working;
    const std::size_t d = data.dim;

    // Random-point initialization: k distinct indices.
    SplitMix64 rng(seed);
    std::vector<std::size_t> seeds;
    while (seeds.size() < k) {
        const std::size_t idx = static_cast<std::size_t>(rng.below(n));
        if (std::find(seeds.begin(), seeds.end(), idx) == seeds.end())
            seeds.push_back(idx);
    }
    std::vector<double> centroids(k * d);
    for (std::size_t c = 0; c < k; ++c) {
        const auto p = data.point(seeds[c]);
        std::copy(p.begin(), p.end(), centroids.begin() + c * d);
    }

    std::vector<int> assign(n, -1);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = data.point(i);
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double dist = euclidean(p, {centroids.data() + c * d, d});
                if (dist < best) {
                    best = dist;
                    best_c = static_cast<int>(c);
                }
            }
            inertia += best * best;
            if (assign[i] != best_c) {
                assign[i] = best_c;
                changed = true;
            }
        }
        if (inertia_trace) inertia_trace->push_back(inertia);
        if (!changed) break;

        std::fill(centroids.begin(), centroids.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = data.point(i);
            const std::size_t c = static_cast<std::size_t>(assign[i]);
            ++counts[c];
            for (std::size_t j = 0; j < d; ++j) centroids[c * d + j] += p[j];
        }
        std::vector<std::size_t> empties;
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0)
                for (std::size_t j = 0; j < d; ++j)
                    centroids[c * d + j] /= static_cast<double>(counts[c]);
            else
                empties.push_back(c);
        }
        // Re-seed each emptied cluster from the point farthest from its
        // assigned centroid, and move that point over immediately.
        for (const std::size_t c : empties) {
            double far_d = -1.0;
            std::size_t far_i = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t a = static_cast<std::size_t>(assign[i]);
                if (counts[a] <= 1) continue;
                const double dist =
                    euclidean(data.point(i), {centroids.data() + a * d, d});
                if (dist > far_d) {
                    far_d = dist;
                    far_i = i;
                }
            }
            const auto p = data.point(far_i);
            std::copy(p.begin(), p.end(), centroids.begin() + c * d);
            --counts[static_cast<std::size_t>(assign[far_i])];
            assign[far_i] = static_cast<int>(c);
            counts[c] = 1;
        }
    }

    Clustering result;
    result.point_labels = std::move(assign);
    result.timings.total_seconds = seconds_since(start);
    return result;
}

}  // namespace gbmst

#include "gbmst/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "gbmst/errors.hpp"

namespace gbmst {

namespace {

std::vector<int> compact_ids(std::span<const int> labels,
                             std::unordered_map<int, int>& mapping) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const int v : labels) {
        auto it = mapping.find(v);
        if (it == mapping.end())
            it = mapping.emplace(v, static_cast<int>(mapping.size())).first;
        out.push_back(it->second);
    }
    return out;
}

// Min-cost assignment on a square matrix via the potentials (Jonker-style
// O(n^3)) formulation. Returns the optimal total cost.
long long hungarian_min_cost(const std::vector<long long>& cost, std::size_t n) {
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0);  // column -> assigned row (1-based)
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<long long> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            long long delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur =
                    cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    long long total = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (match[j] != 0) total += cost[(match[j] - 1) * n + (j - 1)];
    return total;
}

long long pairs_of(long long m) { return m * (m - 1) / 2; }

struct PairCounts {
    long long together_both = 0;   // sum_ij C(n_ij, 2)
    long long together_pred = 0;   // sum_i C(a_i, 2)
    long long together_true = 0;   // sum_j C(b_j, 2)
    long long total = 0;           // C(n, 2)
};

PairCounts pair_counts(const ContingencyTable& table) {
    PairCounts pc;
    pc.total = pairs_of(table.n);
    std::vector<long long> row_sum(table.rows, 0), col_sum(table.cols, 0);
    for (std::size_t r = 0; r < table.rows; ++r) {
        for (std::size_t c = 0; c < table.cols; ++c) {
            const long long v = table.at(r, c);
            pc.together_both += pairs_of(v);
            row_sum[r] += v;
            col_sum[c] += v;
        }
    }
    for (const long long v : row_sum) pc.together_pred += pairs_of(v);
    for (const long long v : col_sum) pc.together_true += pairs_of(v);
    return pc;
}

}  // namespace

ContingencyTable ContingencyTable::from_labels(std::span<const int> pred,
                                               std::span<const int> truth) {
    if (pred.size() != truth.size() || pred.empty()) throw LabelLengthMismatch();
    std::unordered_map<int, int> pred_ids, true_ids;
    const auto p = compact_ids(pred, pred_ids);
    const auto t = compact_ids(truth, true_ids);

    ContingencyTable table;
    table.rows = pred_ids.size();
    table.cols = true_ids.size();
    table.counts.assign(table.rows * table.cols, 0);
    table.n = static_cast<long long>(pred.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        ++table.counts[static_cast<std::size_t>(p[i]) * table.cols +
                       static_cast<std::size_t>(t[i])];
    return table;
}

double accuracy(std::span<const int> pred, std::span<const int> truth) {
    const auto table = ContingencyTable::from_labels(pred, truth);
    const std::size_t side = std::max(table.rows, table.cols);
    // Pad to square and negate: max matched count == min cost of -counts.
    std::vector<long long> cost(side * side, 0);
    for (std::size_t r = 0; r < table.rows; ++r)
        for (std::size_t c = 0; c < table.cols; ++c)
            cost[r * side + c] = -table.at(r, c);
    const long long matched = -hungarian_min_cost(cost, side);
    return static_cast<double>(matched) / static_cast<double>(table.n);
}

double nmi(std::span<const int> pred, std::span<const int> truth, NmiNorm norm) {
    const auto table = ContingencyTable::from_labels(pred, truth);
    const double n = static_cast<double>(table.n);

    std::vector<long long> row_sum(table.rows, 0), col_sum(table.cols, 0);
    for (std::size_t r = 0; r < table.rows; ++r)
        for (std::size_t c = 0; c < table.cols; ++c) {
            row_sum[r] += table.at(r, c);
            col_sum[c] += table.at(r, c);
        }

    double hu = 0.0, hv = 0.0, mi = 0.0;
    for (const long long v : row_sum)
        if (v > 0) hu -= (v / n) * std::log(v / n);
    for (const long long v : col_sum)
        if (v > 0) hv -= (v / n) * std::log(v / n);
    for (std::size_t r = 0; r < table.rows; ++r)
        for (std::size_t c = 0; c < table.cols; ++c) {
            const long long v = table.at(r, c);
            if (v == 0) continue;
            const double pij = v / n;
            mi += pij * std::log(pij * n * n /
                                 (static_cast<double>(row_sum[r]) *
                                  static_cast<double>(col_sum[c])));
        }

    if (hu <= 0.0 && hv <= 0.0) return 1.0;  // both single-cluster
    if (hu <= 0.0 || hv <= 0.0) return 0.0;

    double denom = 0.0;
    switch (norm) {
        case NmiNorm::sqrt_norm: denom = std::sqrt(hu * hv); break;
        case NmiNorm::min_norm: denom = std::min(hu, hv); break;
        case NmiNorm::max_norm: denom = std::max(hu, hv); break;
        case NmiNorm::arithmetic: denom = 0.5 * (hu + hv); break;
    }
    return std::clamp(mi / denom, 0.0, 1.0);
}

double rand_index(std::span<const int> pred, std::span<const int> truth) {
    if (pred.size() != truth.size() || pred.empty()) throw LabelLengthMismatch();
    if (pred.size() < 2) throw TooFewPoints();
    const auto pc = pair_counts(ContingencyTable::from_labels(pred, truth));
    const long long agreements = pc.total + 2 * pc.together_both -
                                 pc.together_pred - pc.together_true;
    return static_cast<double>(agreements) / static_cast<double>(pc.total);
}

double ari(std::span<const int> pred, std::span<const int> truth) {
    if (pred.size() != truth.size() || pred.empty()) throw LabelLengthMismatch();
    if (pred.size() < 2) throw TooFewPoints();
    const auto pc = pair_counts(ContingencyTable::from_labels(pred, truth));

    // Degenerate partitions where the index is 0/0: identical trivial
    // clusterings count as perfect agreement.
    const bool both_singletons = pc.together_pred == 0 && pc.together_true == 0;
    const bool both_one_cluster =
        pc.together_pred == pc.total && pc.together_true == pc.total;
    if (both_singletons || both_one_cluster) return 1.0;

    const double expected = static_cast<double>(pc.together_pred) *
                            static_cast<double>(pc.together_true) /
                            static_cast<double>(pc.total);
    const double maximum =
        0.5 * static_cast<double>(pc.together_pred + pc.together_true);
    return (static_cast<double>(pc.together_both) - expected) / (maximum - expected);
}

std::vector<int> fold_noise(std::span<const int> truth, std::span<const int> pred,
                            int noise_label) {
    if (truth.size() != pred.size()) throw LabelLengthMismatch();
    // A noise point inherits the majority true class of its predicted
    // cluster, so scoring is neutral to where the algorithm put it and
    // invariant under relabeling either side.
    std::unordered_map<int, std::unordered_map<int, long long>> cluster_class;
    int max_class = noise_label;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == noise_label) continue;
        ++cluster_class[pred[i]][truth[i]];
        max_class = std::max(max_class, truth[i]);
    }
    std::unordered_map<int, int> majority;
    for (const auto& [cluster, classes] : cluster_class) {
        long long best = -1;
        int best_class = noise_label;
        for (const auto& [cls, count] : classes)
            if (count > best || (count == best && cls < best_class)) {
                best = count;
                best_class = cls;
            }
        majority[cluster] = best_class;
    }
    std::vector<int> folded(truth.begin(), truth.end());
    std::unordered_map<int, int> all_noise_cluster_class;
    for (std::size_t i = 0; i < folded.size(); ++i) {
        if (folded[i] != noise_label) continue;
        const auto it = majority.find(pred[i]);
        if (it != majority.end()) {
            folded[i] = it->second;
        } else {
            // Cluster made purely of noise: give it one fresh class of its own.
            auto fresh = all_noise_cluster_class.find(pred[i]);
            if (fresh == all_noise_cluster_class.end())
                fresh = all_noise_cluster_class.emplace(pred[i], ++max_class).first;
            folded[i] = fresh->second;
        }
    }
    return folded;
}

}  // namespace gbmst

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gbmst {

// Predicted-cluster x true-class count matrix shared by all metrics.
struct ContingencyTable {
    std::size_t rows = 0;  // distinct predicted labels
    std::size_t cols = 0;  // distinct true labels
    std::vector<long long> counts;
    long long n = 0;

    long long at(std::size_t r, std::size_t c) const { return counts[r * cols + c]; }

    static ContingencyTable from_labels(std::span<const int> pred,
                                        std::span<const int> truth);
};

// Fraction of points matched under the best one-to-one cluster-to-class
// mapping (Kuhn-Munkres on the table padded to square).
double accuracy(std::span<const int> pred, std::span<const int> truth);

enum class NmiNorm { sqrt_norm, min_norm, max_norm, arithmetic };

// I(U;V) normalized by sqrt(H(U) H(V)) with natural-log entropies.
// Both sides single-cluster -> 1; exactly one side degenerate -> 0.
double nmi(std::span<const int> pred, std::span<const int> truth,
           NmiNorm norm = NmiNorm::sqrt_norm);

double rand_index(std::span<const int> pred, std::span<const int> truth);

// Permutation-model chance-corrected Rand index, in [-1, 1].
double ari(std::span<const int> pred, std::span<const int> truth);

// Noise points (true label == noise_label) carry no ground truth of their
// own; this scores them as belonging to whichever cluster they were given.
std::vector<int> fold_noise(std::span<const int> truth, std::span<const int> pred,
                            int noise_label = -1);

}  // namespace gbmst

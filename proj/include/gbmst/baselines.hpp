#pragma once

#include <cstdint>

#include "gbmst/cluster.hpp"
#include "gbmst/dataset.hpp"

namespace gbmst {

// Classic point-level MST clustering: Prim over raw points with Euclidean
// weights, cut the k-1 longest edges, label components. Same cut and
// tie-break conventions as the ball pipeline; no balls, no outlier handling.
Clustering normal_mst_cluster(const Dataset& dataset, std::size_t k,
                              bool normalize = true);

// Lloyd's algorithm from seeded random-point initialization. Runs until the
// assignment stops changing or max_iter; an emptied cluster is re-seeded from
// the point farthest from its assigned centroid. inertia_trace, when given,
// receives the sum of squared point-to-centroid distances after each
// assignment step.
Clustering kmeans(const Dataset& dataset, std::size_t k, std::uint64_t seed,
                  std::size_t max_iter = 100, bool normalize = true,
                  std::vector<double>* inertia_trace = nullptr);

}  // namespace gbmst

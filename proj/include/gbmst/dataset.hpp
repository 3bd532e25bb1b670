#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbmst {

// A fixed-dimension point set in row-major storage, with optional integer
// class labels. The reserved label -1 marks generated noise points.
struct Dataset {
    std::vector<double> values;  // size() * dim entries
    std::size_t dim = 0;
    std::optional<std::vector<int>> labels;

    std::size_t size() const { return dim == 0 ? 0 : values.size() / dim; }

    std::span<const double> point(std::size_t i) const {
        return {values.data() + i * dim, dim};
    }

    // Throws on violated invariants (empty, dim 0, label length mismatch).
    void validate() const;
};

constexpr int kNoiseLabel = -1;

double euclidean(std::span<const double> a, std::span<const double> b);

struct LoadOptions {
    bool has_header = true;
    // Column index holding class labels; negative counts from the end
    // (-1 = last column). nullopt = no label column.
    std::optional<int> label_column;
};

Dataset load_csv(const std::string& path, const LoadOptions& options = {});

// Scans the header for a column named "label" or "class" (case-insensitive).
std::optional<int> detect_label_column(const std::string& path);

// Numeric cells are written with up to 12 significant digits, UTF-8, LF.
void write_csv(const Dataset& dataset, const std::string& path,
               const std::vector<std::string>& feature_names = {});

// Per-dimension affine map onto [0,1]; constant dimensions map to 0.
Dataset normalize_minmax(const Dataset& dataset);

}  // namespace gbmst

#include "gbmst/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "gbmst/errors.hpp"

namespace gbmst {

void Dataset::validate() const {
    if (dim == 0) throw DimensionMismatch("dataset dimension must be positive");
    if (values.empty()) throw EmptyFile("<in-memory dataset>");
    if (values.size() % dim != 0)
        throw DimensionMismatch("value buffer is not a multiple of dim");
    if (labels && labels->size() != size())
        throw LabelLengthMismatch();
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("points differ in dimension");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_double(const std::string& cell, double& out) {
    const std::string t = trimmed(cell);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

Dataset load_csv(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);

    std::string line;
    std::vector<std::vector<std::string>> rows;
    bool first = true;
    std::size_t physical_row = 0;
    while (std::getline(in, line)) {
        ++physical_row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty()) continue;
        if (first && options.has_header) {
            first = false;
            continue;
        }
        first = false;
        rows.push_back(split_line(line));
    }
    if (rows.empty()) throw EmptyFile(path);

    const std::size_t cols = rows[0].size();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != cols) throw RaggedRows(r + 1);

    std::optional<std::size_t> label_col;
    if (options.label_column) {
        long idx = *options.label_column;
        if (idx < 0) idx += static_cast<long>(cols);
        if (idx < 0 || idx >= static_cast<long>(cols))
            throw Error("label column out of range in " + path);
        label_col = static_cast<std::size_t>(idx);
    }
    const std::size_t dim = cols - (label_col ? 1 : 0);
    if (dim == 0) throw Error("no feature columns in " + path);

    Dataset dataset;
    dataset.dim = dim;
    dataset.values.reserve(rows.size() * dim);
    std::vector<int> labels;
    std::map<std::string, int> class_ids;  // first-occurrence order via counter

    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (label_col && c == *label_col) {
                const std::string cell = trimmed(rows[r][c]);
                double numeric;
                if (parse_double(cell, numeric) &&
                    numeric == std::floor(numeric) && std::abs(numeric) < 1e9) {
                    labels.push_back(static_cast<int>(numeric));
                } else {
                    auto it = class_ids.find(cell);
                    if (it == class_ids.end())
                        it = class_ids.emplace(cell, static_cast<int>(class_ids.size())).first;
                    labels.push_back(it->second);
                }
                continue;
            }
            double v;
            if (!parse_double(rows[r][c], v))
                throw ParseError("cell is not numeric: '" + rows[r][c] + "'", r + 1, c + 1);
            dataset.values.push_back(v);
        }
    }
    if (label_col) dataset.labels = std::move(labels);
    dataset.validate();
    return dataset;
}

std::optional<int> detect_label_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto cells = split_line(line);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string name = lower(trimmed(cells[i]));
        if (name == "label" || name == "class") return static_cast<int>(i);
    }
    return std::nullopt;
}

void write_csv(const Dataset& dataset, const std::string& path,
               const std::vector<std::string>& feature_names) {
    dataset.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);

    const bool with_labels = dataset.labels.has_value();
    for (std::size_t c = 0; c < dataset.dim; ++c) {
        if (c) out << ',';
        if (c < feature_names.size())
            out << feature_names[c];
        else
            out << 'x' << c;
    }
    if (with_labels) out << ",label";
    out << '\n';

    char buf[64];
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto p = dataset.point(i);
        for (std::size_t c = 0; c < dataset.dim; ++c) {
            if (c) out << ',';
            std::snprintf(buf, sizeof buf, "%.12g", p[c]);
            out << buf;
        }
        if (with_labels) out << ',' << (*dataset.labels)[i];
        out << '\n';
    }
}

Dataset normalize_minmax(const Dataset& dataset) {
    dataset.validate();
    const std::size_t n = dataset.size();
    const std::size_t d = dataset.dim;
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = dataset.point(i);
        for (std::size_t c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    }
    Dataset out;
    out.dim = d;
    out.labels = dataset.labels;
    out.values.resize(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = dataset.point(i);
        for (std::size_t c = 0; c < d; ++c) {
            const double range = hi[c] - lo[c];
            out.values[i * d + c] = range > 0.0 ? (p[c] - lo[c]) / range : 0.0;
        }
    }
    return out;
}

}  // namespace gbmst

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbmst/dataset.hpp"

namespace gbmst {

enum class Family { blobs, moons, rings, spirals, uniform_noise };

Family family_from_string(const std::string& name);  // throws InvalidSpec
std::string family_to_string(Family family);

// Seeded synthetic dataset spec. noise_fraction of the points (rounded) are
// drawn uniformly over the signal bounding box and labeled kNoiseLabel.
struct GeneratorSpec {
    Family family = Family::blobs;
    std::size_t n_points = 100;
    double noise_fraction = 0.0;
    double sigma = 0.05;        // jitter around the family's manifold
    std::uint64_t seed = 0;
    std::size_t centers = 2;    // blobs: center count; spirals: arm count
    double ring_inner = 1.0;
    double ring_outer = 2.0;
    // Explicit blob centers (2-d); empty = evenly spaced on the unit circle.
    std::vector<std::vector<double>> blob_centers;
    // Per-blob sigmas; empty = `sigma` for every blob.
    std::vector<double> blob_sigmas;

    void validate() const;  // throws InvalidSpec
};

Dataset generate(const GeneratorSpec& spec);

std::string spec_to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const std::string& text);

}  // namespace gbmst

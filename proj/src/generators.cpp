#include "gbmst/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "gbmst/errors.hpp"
#include "gbmst/rng.hpp"

namespace gbmst {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void push_point(Dataset& data, double x, double y, int label) {
    data.values.push_back(x);
    data.values.push_back(y);
    data.labels->push_back(label);
}

std::vector<std::vector<double>> default_blob_centers(std::size_t k) {
    std::vector<std::vector<double>> centers;
    if (k == 1) {
        centers.push_back({0.0, 0.0});
        return centers;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double angle = kTwoPi * static_cast<double>(i) / static_cast<double>(k);
        centers.push_back({std::cos(angle), std::sin(angle)});
    }
    return centers;
}

}  // namespace

Family family_from_string(const std::string& name) {
    if (name == "blobs") return Family::blobs;
    if (name == "moons") return Family::moons;
    if (name == "rings") return Family::rings;
    if (name == "spirals") return Family::spirals;
    if (name == "uniform-noise-overlay" || name == "uniform") return Family::uniform_noise;
    throw InvalidSpec("unknown family '" + name + "'");
}

std::string family_to_string(Family family) {
    switch (family) {
        case Family::blobs: return "blobs";
        case Family::moons: return "moons";
        case Family::rings: return "rings";
        case Family::spirals: return "spirals";
        case Family::uniform_noise: return "uniform-noise-overlay";
    }
    throw InternalError("unhandled family");
}

void GeneratorSpec::validate() const {
    if (n_points < 1) throw InvalidSpec("n_points must be >= 1");
    if (noise_fraction < 0.0 || noise_fraction >= 1.0)
        throw InvalidSpec("noise_fraction must lie in [0, 1)");
    if (sigma < 0.0) throw InvalidSpec("sigma must be non-negative");
    if (centers < 1) throw InvalidSpec("centers must be >= 1");
    if (ring_inner <= 0.0 || ring_outer <= ring_inner)
        throw InvalidSpec("rings need 0 < ring_inner < ring_outer");
    for (const auto& c : blob_centers)
        if (c.size() != 2) throw InvalidSpec("blob centers must be 2-d");
    if (!blob_sigmas.empty() && !blob_centers.empty() &&
        blob_sigmas.size() != blob_centers.size() && blob_sigmas.size() != 1)
        throw InvalidSpec("blob_sigmas must match blob_centers (or be one value)");
}

Dataset generate(const GeneratorSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);

    const std::size_t n_noise =
        static_cast<std::size_t>(static_cast<double>(spec.n_points) *
                                     spec.noise_fraction +
                                 0.5);
    const std::size_t n_signal = spec.n_points - n_noise;
    if (n_signal == 0) throw InvalidSpec("noise_fraction leaves no signal points");

    Dataset data;
    data.dim = 2;
    data.labels.emplace();
    data.values.reserve(spec.n_points * 2);
    data.labels->reserve(spec.n_points);

    switch (spec.family) {
        case Family::blobs: {
            auto centers = spec.blob_centers.empty() ? default_blob_centers(spec.centers)
                                                     : spec.blob_centers;
            const std::size_t k = centers.size();
            std::vector<double> sigmas(k, spec.sigma);
            if (!spec.blob_sigmas.empty())
                for (std::size_t i = 0; i < k; ++i)
                    sigmas[i] = spec.blob_sigmas[std::min(i, spec.blob_sigmas.size() - 1)];
            const std::size_t per = n_signal / k;
            for (std::size_t c = 0; c < k; ++c) {
                const std::size_t count = (c + 1 == k) ? n_signal - per * (k - 1) : per;
                for (std::size_t i = 0; i < count; ++i) {
                    double g1, g2;
                    rng.normal_pair(g1, g2);
                    push_point(data, centers[c][0] + sigmas[c] * g1,
                               centers[c][1] + sigmas[c] * g2, static_cast<int>(c));
                }
            }
            break;
        }
        case Family::moons: {
            const std::size_t n0 = n_signal / 2;
            for (std::size_t i = 0; i < n_signal; ++i) {
                const int m = i < n0 ? 0 : 1;
                const double t = rng.uniform() * std::numbers::pi;
                double g1, g2;
                rng.normal_pair(g1, g2);
                double x, y;
                if (m == 0) {
                    x = std::cos(t);
                    y = std::sin(t);
                } else {
                    x = 1.0 - std::cos(t);
                    y = 0.5 - std::sin(t);
                }
                push_point(data, x + spec.sigma * g1, y + spec.sigma * g2, m);
            }
            break;
        }
        case Family::rings: {
            const std::size_t n0 = n_signal / 2;
            for (std::size_t i = 0; i < n_signal; ++i) {
                const int ring = i < n0 ? 0 : 1;
                const double r0 = ring == 0 ? spec.ring_inner : spec.ring_outer;
                const double theta = rng.uniform() * kTwoPi;
                double g1, g2;
                rng.normal_pair(g1, g2);
                const double r = r0 + spec.sigma * g1;
                push_point(data, r * std::cos(theta), r * std::sin(theta), ring);
            }
            break;
        }
        case Family::spirals: {
            const std::size_t arms = spec.centers;
            const std::size_t per = n_signal / arms;
            for (std::size_t a = 0; a < arms; ++a) {
                const std::size_t count =
                    (a + 1 == arms) ? n_signal - per * (arms - 1) : per;
                const double offset = kTwoPi * static_cast<double>(a) /
                                      static_cast<double>(arms);
                for (std::size_t i = 0; i < count; ++i) {
                    const double t = 0.25 + 0.75 * rng.uniform();  // radial progress
                    const double angle = offset + t * 2.5 * std::numbers::pi;
                    double g1, g2;
                    rng.normal_pair(g1, g2);
                    push_point(data, t * std::cos(angle) + spec.sigma * g1,
                               t * std::sin(angle) + spec.sigma * g2,
                               static_cast<int>(a));
                }
            }
            break;
        }
        case Family::uniform_noise: {
            for (std::size_t i = 0; i < n_signal; ++i) {
                const double x = rng.uniform();
                const double y = rng.uniform();
                push_point(data, x, y, 0);
            }
            break;
        }
    }

    if (n_noise > 0) {
        double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
        double hi_x = -lo_x, hi_y = -lo_x;
        for (std::size_t i = 0; i < n_signal; ++i) {
            lo_x = std::min(lo_x, data.values[2 * i]);
            hi_x = std::max(hi_x, data.values[2 * i]);
            lo_y = std::min(lo_y, data.values[2 * i + 1]);
            hi_y = std::max(hi_y, data.values[2 * i + 1]);
        }
        for (std::size_t i = 0; i < n_noise; ++i) {
            const double x = lo_x + rng.uniform() * (hi_x - lo_x);
            const double y = lo_y + rng.uniform() * (hi_y - lo_y);
            push_point(data, x, y, kNoiseLabel);
        }
    }
    return data;
}

std::string spec_to_json(const GeneratorSpec& spec) {
    nlohmann::json j;
    j["family"] = family_to_string(spec.family);
    j["n_points"] = spec.n_points;
    j["noise_fraction"] = spec.noise_fraction;
    j["sigma"] = spec.sigma;
    j["seed"] = spec.seed;
    j["centers"] = spec.centers;
    j["ring_inner"] = spec.ring_inner;
    j["ring_outer"] = spec.ring_outer;
    if (!spec.blob_centers.empty()) j["blob_centers"] = spec.blob_centers;
    if (!spec.blob_sigmas.empty()) j["blob_sigmas"] = spec.blob_sigmas;
    return j.dump(2) + "\n";
}

GeneratorSpec spec_from_json(const std::string& text) {
    GeneratorSpec spec;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("bad spec JSON: ") + e.what());
    }
    try {
        spec.family = family_from_string(j.at("family").get<std::string>());
        spec.n_points = j.at("n_points").get<std::size_t>();
        spec.noise_fraction = j.value("noise_fraction", 0.0);
        spec.sigma = j.value("sigma", 0.05);
        spec.seed = j.value("seed", std::uint64_t{0});
        spec.centers = j.value("centers", std::size_t{2});
        spec.ring_inner = j.value("ring_inner", 1.0);
        spec.ring_outer = j.value("ring_outer", 2.0);
        if (j.contains("blob_centers"))
            spec.blob_centers = j["blob_centers"].get<std::vector<std::vector<double>>>();
        if (j.contains("blob_sigmas"))
            spec.blob_sigmas = j["blob_sigmas"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("bad spec JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

}  // namespace gbmst

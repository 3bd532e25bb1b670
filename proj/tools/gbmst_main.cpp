#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbmst/baselines.hpp"
#include "gbmst/cluster.hpp"
#include "gbmst/dataset.hpp"
#include "gbmst/errors.hpp"
#include "gbmst/generators.hpp"
#include "gbmst/metrics.hpp"
#include "gbmst/svg_plot.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GBMST_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gbmst::Error("cannot open " + path);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    char hex[32];
    std::snprintf(hex, sizeof hex, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(hash));
    return hex;
}

bool has_noise(const std::vector<int>& labels) {
    for (const int v : labels)
        if (v == gbmst::kNoiseLabel) return true;
    return false;
}

json metrics_json(const std::vector<int>& pred, const std::vector<int>& truth) {
    json m;
    const bool noisy = has_noise(truth);
    const std::vector<int> primary_truth =
        noisy ? gbmst::fold_noise(truth, pred) : truth;
    m["acc"] = gbmst::accuracy(pred, primary_truth);
    m["nmi"] = gbmst::nmi(pred, primary_truth);
    m["rand_index"] = gbmst::rand_index(pred, primary_truth);
    m["ari"] = gbmst::ari(pred, primary_truth);
    if (noisy) {
        std::vector<int> p2, t2;
        for (std::size_t i = 0; i < truth.size(); ++i) {
            if (truth[i] == gbmst::kNoiseLabel) continue;
            p2.push_back(pred[i]);
            t2.push_back(truth[i]);
        }
        m["acc_excluding_noise"] = gbmst::accuracy(p2, t2);
        m["nmi_excluding_noise"] = gbmst::nmi(p2, t2);
        m["rand_index_excluding_noise"] = gbmst::rand_index(p2, t2);
        m["ari_excluding_noise"] = gbmst::ari(p2, t2);
    }
    return m;
}

void write_labels_csv(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gbmst::Error("cannot write " + path);
    out << "point_index,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << i << ',' << labels[i] << '\n';
}

void write_edges_csv(const std::string& path,
                     const std::vector<gbmst::WeightedEdge>& edges) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gbmst::Error("cannot write " + path);
    out << "a,b,weight\n";
    char buf[48];
    for (const auto& e : edges) {
        std::snprintf(buf, sizeof buf, "%.12g", e.weight);
        out << e.a << ',' << e.b << ',' << buf << '\n';
    }
}

struct ClusterArgs {
    std::string input;
    std::size_t k = 2;
    std::string algo = "gbmst";
    bool no_normalize = false;
    std::size_t min_ball_size = 0;
    double oversize_factor = 2.0;
    bool exact_diameter = false;
    std::string mst_weight = "center";
    std::optional<int> label_col;
    bool no_labels = false;
    bool no_header = false;
    std::uint64_t seed = default_seed();
    std::size_t max_iter = 100;
    std::string labels_out, report_out, plot_out, mst_out;
    bool no_plot_balls = false;
    bool deterministic_report = false;
};

int run_cluster(const ClusterArgs& args) {
    gbmst::LoadOptions load;
    load.has_header = !args.no_header;
    if (args.no_labels)
        load.label_column = std::nullopt;
    else if (args.label_col)
        load.label_column = args.label_col;
    else if (!args.no_header)
        load.label_column = gbmst::detect_label_column(args.input);

    const gbmst::Dataset dataset = gbmst::load_csv(args.input, load);

    gbmst::ClusterConfig config;
    config.k = args.k;
    config.normalize = !args.no_normalize;
    config.generation.min_ball_size = args.min_ball_size;
    config.generation.oversize_factor = args.oversize_factor;
    config.generation.farthest_pair_mode = args.exact_diameter
                                               ? gbmst::FarthestPairMode::exact
                                               : gbmst::FarthestPairMode::heuristic;
    config.mst_weight = args.mst_weight == "gap" ? gbmst::BallMetric::gap
                                                 : gbmst::BallMetric::center;

    gbmst::Clustering result;
    if (args.algo == "gbmst")
        result = gbmst::cluster(dataset, config);
    else if (args.algo == "normal-mst")
        result = gbmst::normal_mst_cluster(dataset, args.k, config.normalize);
    else if (args.algo == "kmeans")
        result = gbmst::kmeans(dataset, args.k, args.seed, args.max_iter,
                               config.normalize);
    else
        throw gbmst::Error("unknown --algo '" + args.algo + "'");

    json report;
    report["algorithm"] = args.algo;
    report["config"] = {
        {"k", args.k},
        {"normalize", config.normalize},
        {"min_ball_size", args.min_ball_size == 0
                              ? config.generation.effective_min_ball_size(dataset.size())
                              : args.min_ball_size},
        {"oversize_factor", args.oversize_factor},
        {"farthest_pair_mode", args.exact_diameter ? "exact" : "heuristic"},
        {"mst_weight", args.mst_weight},
        {"seed", args.seed},
    };
    report["input"] = {
        {"path", args.input},
        {"fingerprint", fnv1a64_file(args.input)},
        {"points", dataset.size()},
        {"dim", dataset.dim},
        {"has_labels", dataset.labels.has_value()},
    };
    std::vector<double> cut_weights;
    for (const auto& e : result.cut_edges) cut_weights.push_back(e.weight);
    report["provenance"] = {
        {"ball_count", result.ball_count},
        {"outlier_count", result.outlier_count},
        {"core_count", result.core_count},
        {"cut_edge_weights", cut_weights},
    };
    if (dataset.labels)
        report["metrics"] = metrics_json(result.point_labels, *dataset.labels);
    else
        report["metrics"] = json::object();
    const auto& t = result.timings;
    report["metrics"]["runtime_seconds"] = args.deterministic_report ? 0.0 : t.total_seconds;
    report["metrics"]["stage_timings"] = {
        {"normalize", args.deterministic_report ? 0.0 : t.normalize_seconds},
        {"generation", args.deterministic_report ? 0.0 : t.generation_seconds},
        {"graph", args.deterministic_report ? 0.0 : t.graph_seconds},
        {"cut", args.deterministic_report ? 0.0 : t.cut_seconds},
        {"assign", args.deterministic_report ? 0.0 : t.assign_seconds},
    };

    if (!args.labels_out.empty()) write_labels_csv(args.labels_out, result.point_labels);
    if (!args.mst_out.empty()) write_edges_csv(args.mst_out, result.tree_edges);
    if (!args.plot_out.empty()) {
        if (dataset.dim != 2) {
            gbmst::warn("plot skipped: input is not 2-d");
        } else {
            const gbmst::Dataset plotted =
                config.normalize ? gbmst::normalize_minmax(dataset) : dataset;
            gbmst::PlotOptions plot_options;
            plot_options.draw_balls = !args.no_plot_balls && args.algo == "gbmst";
            gbmst::write_svg_scatter(args.plot_out, plotted, result.point_labels,
                                     args.algo == "gbmst" ? &result.balls : nullptr,
                                     plot_options);
        }
    }
    if (!args.report_out.empty()) {
        std::ofstream out(args.report_out, std::ios::binary);
        if (!out) throw gbmst::Error("cannot write " + args.report_out);
        out << report.dump(2) << '\n';
    }
    std::cout << report.dump(2) << std::endl;
    return 0;
}

struct GenerateArgs {
    std::string family = "blobs";
    std::size_t n = 100;
    double noise = 0.0;
    double sigma = 0.05;
    std::uint64_t seed = default_seed();
    std::size_t centers = 2;
    double ring_inner = 1.0;
    double ring_outer = 2.0;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    gbmst::GeneratorSpec spec;
    spec.family = gbmst::family_from_string(args.family);
    spec.n_points = args.n;
    spec.noise_fraction = args.noise;
    spec.sigma = args.sigma;
    spec.seed = args.seed;
    spec.centers = args.centers;
    spec.ring_inner = args.ring_inner;
    spec.ring_outer = args.ring_outer;

    const gbmst::Dataset data = gbmst::generate(spec);
    gbmst::write_csv(data, args.out);
    std::ofstream side(args.out + ".spec.json", std::ios::binary);
    if (!side) throw gbmst::Error("cannot write " + args.out + ".spec.json");
    side << gbmst::spec_to_json(spec);
    std::cout << "wrote " << data.size() << " points to " << args.out << std::endl;
    return 0;
}

struct BenchArgs {
    std::string family = "blobs";
    std::vector<std::size_t> sizes = {10000, 20000, 40000};
    std::size_t k = 4;
    std::size_t repeats = 3;
    std::vector<std::string> algos = {"gbmst", "normal-mst"};
    std::uint64_t seed = default_seed();
    std::string out;
};

int run_bench(const BenchArgs& args) {
    for (std::size_t i = 1; i < args.sizes.size(); ++i)
        if (args.sizes[i] <= args.sizes[i - 1])
            throw gbmst::Error("--sizes must be strictly ascending");

    std::ostringstream csv;
    csv << "algorithm,n,mean_seconds,growth_ratio\n";
    for (const auto& algo : args.algos) {
        double previous = -1.0;
        for (const std::size_t n : args.sizes) {
            gbmst::GeneratorSpec spec;
            spec.family = gbmst::family_from_string(args.family);
            spec.n_points = n;
            spec.centers = args.k;
            spec.seed = args.seed + n;
            const gbmst::Dataset data = gbmst::generate(spec);

            double total = 0.0;
            for (std::size_t r = 0; r <= args.repeats; ++r) {
                gbmst::Clustering result;
                if (algo == "gbmst") {
                    gbmst::ClusterConfig config;
                    config.k = args.k;
                    result = gbmst::cluster(data, config);
                } else if (algo == "normal-mst") {
                    result = gbmst::normal_mst_cluster(data, args.k);
                } else if (algo == "kmeans") {
                    result = gbmst::kmeans(data, args.k, args.seed);
                } else {
                    throw gbmst::Error("unknown algorithm '" + algo + "'");
                }
                if (r > 0) total += result.timings.total_seconds;  // r=0 warms up
            }
            const double mean = total / static_cast<double>(args.repeats);
            csv << algo << ',' << n << ',' << mean << ',';
            if (previous > 0.0) csv << mean / previous;
            csv << '\n';
            previous = mean;
        }
    }
    std::cout << csv.str();
    if (!args.out.empty()) {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw gbmst::Error("cannot write " + args.out);
        out << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Granular-ball MST clustering"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cmd_cluster = app.add_subcommand("cluster", "Cluster a CSV dataset");
    cmd_cluster->add_option("input", cluster_args.input, "input CSV")->required();
    cmd_cluster->add_option("--k", cluster_args.k, "number of clusters")->required();
    cmd_cluster->add_option("--algo", cluster_args.algo, "gbmst | normal-mst | kmeans")
        ->check(CLI::IsMember({"gbmst", "normal-mst", "kmeans"}));
    cmd_cluster->add_flag("--no-normalize", cluster_args.no_normalize,
                          "skip min-max normalization");
    cmd_cluster->add_option("--min-ball-size", cluster_args.min_ball_size,
                            "splitting floor (0 = auto)");
    cmd_cluster->add_option("--oversize-factor", cluster_args.oversize_factor,
                            "radius limit multiplier");
    cmd_cluster->add_flag("--exact-diameter", cluster_args.exact_diameter,
                          "exact farthest-pair seeds");
    cmd_cluster->add_option("--mst-weight", cluster_args.mst_weight,
                            "edge weight: center (default) or gap")
        ->check(CLI::IsMember({"center", "gap"}));
    int label_col_value = 0;
    auto* label_opt = cmd_cluster->add_option("--label-col", label_col_value,
                                              "0-based label column (negative = from end)");
    cmd_cluster->add_flag("--no-labels", cluster_args.no_labels,
                          "ignore any label column");
    cmd_cluster->add_flag("--no-header", cluster_args.no_header,
                          "input has no header row");
    cmd_cluster->add_option("--seed", cluster_args.seed, "k-means seed");
    cmd_cluster->add_option("--max-iter", cluster_args.max_iter, "k-means iteration cap");
    cmd_cluster->add_option("--labels-out", cluster_args.labels_out, "labels CSV path");
    cmd_cluster->add_option("--report-out", cluster_args.report_out, "report JSON path");
    cmd_cluster->add_option("--plot-out", cluster_args.plot_out, "SVG scatter path");
    cmd_cluster->add_flag("--no-plot-balls", cluster_args.no_plot_balls,
                          "omit ball outlines from the plot");
    cmd_cluster->add_option("--mst-out", cluster_args.mst_out,
                            "spanning-tree edge CSV path");
    cmd_cluster->add_flag("--deterministic-report", cluster_args.deterministic_report,
                          "zero timing fields in the report");

    GenerateArgs gen_args;
    auto* cmd_generate = app.add_subcommand("generate", "Emit a synthetic dataset CSV");
    cmd_generate->add_option("--family", gen_args.family,
                             "blobs | moons | rings | spirals | uniform-noise-overlay");
    cmd_generate->add_option("--n", gen_args.n, "total points")->required();
    cmd_generate->add_option("--noise", gen_args.noise, "uniform noise fraction");
    cmd_generate->add_option("--sigma", gen_args.sigma, "jitter sigma");
    cmd_generate->add_option("--seed", gen_args.seed, "generator seed");
    cmd_generate->add_option("--centers", gen_args.centers, "blob centers / spiral arms");
    cmd_generate->add_option("--ring-inner", gen_args.ring_inner, "inner ring radius");
    cmd_generate->add_option("--ring-outer", gen_args.ring_outer, "outer ring radius");
    cmd_generate->add_option("--out", gen_args.out, "output CSV path")->required();

    BenchArgs bench_args;
    auto* cmd_bench = app.add_subcommand("bench", "Wall-clock scaling sweep");
    cmd_bench->add_option("--family", bench_args.family, "generator family");
    cmd_bench->add_option("--sizes", bench_args.sizes, "ascending point counts")
        ->delimiter(',');
    cmd_bench->add_option("--k", bench_args.k, "clusters per run");
    cmd_bench->add_option("--repeats", bench_args.repeats, "timed repeats per cell");
    cmd_bench->add_option("--algos", bench_args.algos, "algorithms to time")
        ->delimiter(',');
    cmd_bench->add_option("--seed", bench_args.seed, "generator seed");
    cmd_bench->add_option("--out", bench_args.out, "CSV output path");

    try {
        app.parse(argc, argv);
        if (cmd_cluster->parsed()) {
            if (label_opt->count() > 0) cluster_args.label_col = label_col_value;
            return run_cluster(cluster_args);
        }
        if (cmd_generate->parsed()) return run_generate(gen_args);
        if (cmd_bench->parsed()) return run_bench(bench_args);
        return 1;
    } catch (const CLI::Success& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // every usage problem maps to exit 1
    } catch (const gbmst::InternalError& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 2;
    } catch (const gbmst::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 2;
    }
}

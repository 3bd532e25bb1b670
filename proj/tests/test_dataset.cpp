#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "gbmst/dataset.hpp"
#include "gbmst/errors.hpp"
#include "gbmst/rng.hpp"

using namespace gbmst;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("/tmp/gbmst_test_") + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("load_csv reads the bundled iris fixture") {
    const Dataset d = load_csv(std::string(GBMST_DATA_DIR) + "/iris.csv",
                               {.has_header = true, .label_column = -1});
    CHECK(d.size() == 150);
    CHECK(d.dim == 4);
    REQUIRE(d.labels.has_value());
    int max_label = 0;
    for (const int v : *d.labels) max_label = std::max(max_label, v);
    CHECK(max_label == 2);  // 3 classes mapped in first-occurrence order
    CHECK(d.point(0)[0] == doctest::Approx(5.1));
}

TEST_CASE("load_csv reads the bundled wine fixture") {
    const Dataset d = load_csv(std::string(GBMST_DATA_DIR) + "/wine.csv",
                               {.has_header = true, .label_column = -1});
    CHECK(d.size() == 178);
    CHECK(d.dim == 13);
    REQUIRE(d.labels.has_value());
    int max_label = 0;
    for (const int v : *d.labels) max_label = std::max(max_label, v);
    CHECK(max_label == 2);
}

TEST_CASE("load_csv without labels") {
    const auto path = temp_path("plain.csv");
    write_file(path, "1.5,2\n3,4.25\n");
    const Dataset d = load_csv(path, {.has_header = false, .label_column = std::nullopt});
    CHECK(d.size() == 2);
    CHECK(d.dim == 2);
    CHECK_FALSE(d.labels.has_value());
    CHECK(d.point(1)[1] == doctest::Approx(4.25));
}

TEST_CASE("load_csv error paths") {
    const auto ragged = temp_path("ragged.csv");
    write_file(ragged, "1,2\n3\n");
    CHECK_THROWS_AS(load_csv(ragged, {.has_header = false, .label_column = std::nullopt}),
                    RaggedRows);

    const auto empty = temp_path("empty.csv");
    write_file(empty, "a,b\n");
    CHECK_THROWS_AS(load_csv(empty, {.has_header = true, .label_column = std::nullopt}),
                    EmptyFile);

    const auto bad = temp_path("bad.csv");
    write_file(bad, "1,2\n3,oops\n");
    try {
        load_csv(bad, {.has_header = false, .label_column = std::nullopt});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.row == 2);
        CHECK(e.col == 2);
    }
}

TEST_CASE("detect_label_column finds label/class headers") {
    const auto path = temp_path("detect.csv");
    write_file(path, "x0,x1,label\n0,0,0\n");
    CHECK(detect_label_column(path) == 2);
    write_file(path, "x0,Class,x1\n0,0,0\n");
    CHECK(detect_label_column(path) == 1);
    write_file(path, "x0,x1\n0,0\n");
    CHECK_FALSE(detect_label_column(path).has_value());
}

TEST_CASE("normalize_minmax maps each dimension onto [0,1]") {
    Dataset d;
    d.dim = 1;
    d.values = {0.0, 10.0};
    const Dataset norm = normalize_minmax(d);
    CHECK(norm.values[0] == 0.0);
    CHECK(norm.values[1] == 1.0);
}

TEST_CASE("normalize_minmax zeroes constant dimensions") {
    Dataset d;
    d.dim = 2;
    d.values = {5.0, 1.0, 5.0, 2.0, 5.0, 3.0};
    const Dataset norm = normalize_minmax(d);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(norm.point(i)[0] == 0.0);
    }
    CHECK(norm.point(0)[1] == 0.0);
    CHECK(norm.point(2)[1] == 1.0);
}

TEST_CASE("normalize_minmax is idempotent") {
    SplitMix64 rng(77);
    Dataset d;
    d.dim = 3;
    for (int i = 0; i < 120; ++i) d.values.push_back(rng.uniform() * 40 - 7);
    const Dataset once = normalize_minmax(d);
    const Dataset twice = normalize_minmax(once);
    REQUIRE(once.values.size() == twice.values.size());
    for (std::size_t i = 0; i < once.values.size(); ++i)
        CHECK(once.values[i] == doctest::Approx(twice.values[i]).epsilon(1e-12));
}

TEST_CASE("csv round trip is exact for short decimal inputs") {
    const auto path = temp_path("roundtrip.csv");
    write_file(path, "x0,x1,label\n1.25,-3.5,0\n0.125,7,1\n");
    const Dataset d = load_csv(path, {.has_header = true, .label_column = 2});
    const auto out = temp_path("roundtrip_out.csv");
    write_csv(d, out);
    const Dataset d2 = load_csv(out, {.has_header = true, .label_column = 2});
    CHECK(d.values == d2.values);
    CHECK(*d.labels == *d2.labels);
    // identical bytes when re-written
    const auto out2 = temp_path("roundtrip_out2.csv");
    write_csv(d2, out2);
    CHECK(read_file(out) == read_file(out2));
}

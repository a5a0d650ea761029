#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ncgeo/io.hpp"

using namespace ncgeo;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ncgeo_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("json writer prints 17 significant digits and is deterministic") {
    std::string a = jsonw::obj({{"value", jsonw::num(std::atan(1.0))}});
    std::string b = jsonw::obj({{"value", jsonw::num(std::atan(1.0))}});
    CHECK(a == b);
    CHECK(a == "{\"value\":0.78539816339744828}");
    CHECK(jsonw::num(2.0) == "2");
    CHECK(jsonw::str("a\"b") == "\"a\\\"b\"");
    CHECK(jsonw::arr({"1", "2"}) == "[1,2]");
}

TEST_CASE("skew matrix json round trip") {
    TempFile f("theta.json");
    {
        std::ofstream out(f.path);
        out << "[[0, 0.5], [-0.5, 0]]";
    }
    SkewMatrix m = read_skew_matrix(f.path);
    CHECK(m.dim() == 2);
    CHECK(m(0, 1) == doctest::Approx(0.5));

    SUBCASE("malformed json rejected") {
        std::ofstream bad(f.path);
        bad << "[[0, \"x\"], [1, 0]";
        bad.close();
        CHECK_THROWS_AS(read_skew_matrix(f.path), std::invalid_argument);
    }
    SUBCASE("non-square rejected") {
        std::ofstream bad(f.path);
        bad << "[[0, 1, 2], [-1, 0, 3]]";
        bad.close();
        CHECK_THROWS_AS(read_skew_matrix(f.path), std::invalid_argument);
    }
    SUBCASE("non-skew rejected") {
        std::ofstream bad(f.path);
        bad << "[[0, 1], [1, 0]]";
        bad.close();
        CHECK_THROWS_AS(read_skew_matrix(f.path), std::invalid_argument);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_skew_matrix("/tmp/ncgeo_no_such_file.json"), std::invalid_argument);
    }
}

TEST_CASE("grid csv round trip") {
    auto f = GridFunction::sample(2, 4.0, 16, [](const std::vector<double>& x) {
        return Cd(std::exp(-x[0] * x[0] - x[1] * x[1]), 0.1 * x[0]);
    });
    TempFile tmp("grid.csv");
    write_grid_csv(tmp.path, f);
    GridFunction g = read_grid_csv(tmp.path);
    CHECK(g.d() == 2);
    CHECK(g.points_per_axis() == 16);
    CHECK(g.half_width() == doctest::Approx(4.0));
    CHECK(sup_distance(f, g) == 0.0);

    SUBCASE("csv emission is deterministic") {
        CHECK(grid_csv_string(f) == grid_csv_string(g));
    }
}

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csvout.hpp"
#include "figures.hpp"

using namespace eigenstrata::tools;

namespace {
std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("CSV formatting") {
    Table t;
    t.add("x", {1.0, 2.5});
    t.add("y", {std::nan(""), -3.0});
    CHECK(format_csv(t) == "x,y\n1.000000000000e+00,nan\n2.500000000000e+00,-3.000000000000e+00\n");
    Table bad;
    bad.add("a", {1.0});
    CHECK_THROWS(bad.add("b", {1.0, 2.0}));
}

TEST_CASE("atomic write creates directories") {
    const auto dir = std::filesystem::temp_directory_path() / "eigenstrata_cli_test";
    std::filesystem::remove_all(dir);
    const std::string p = (dir / "sub" / "a.csv").string();
    write_atomic(p, "hello\n");
    CHECK(slurp(p) == "hello\n");
    CHECK_FALSE(std::filesystem::exists(p + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(check_config(c));
    c.ensemble = "cue";
    CHECK_THROWS_AS(check_config(c), ConfigError);
    c = RunConfig{};
    c.samples = -1;
    CHECK_THROWS_AS(check_config(c), ConfigError);
    c = RunConfig{};
    c.n = 0;
    CHECK_THROWS_AS(check_config(c), ConfigError);
    c = RunConfig{};
    c.ensemble = "wishart";
    c.alpha = 1;
    CHECK_NOTHROW(config_spec(c));
}

TEST_CASE("figure columns") {
    RunConfig c;
    c.samples = 2000;
    auto f3 = make_figure(3, c);
    CHECK(f3.columns == std::vector<std::string>{"x", "density", "eig_largest", "eig_smallest", "uncorr_largest", "uncorr_smallest"});
    auto f4 = make_figure(4, c);
    CHECK(f4.columns.front() == "xi");
    CHECK(std::find(f4.columns.begin(), f4.columns.end(), "rel_diff") != f4.columns.end());
    auto f7 = make_figure(7, c);
    for (const char* col : {"s", "simulation", "nearly_gaussian", "tracy_widom"})
        CHECK(std::find(f7.columns.begin(), f7.columns.end(), col) != f7.columns.end());
    CHECK_THROWS(make_figure(15, c));
}

TEST_CASE("figures are deterministic for a fixed seed") {
    RunConfig c;
    c.samples = 3000;
    c.seed = 99;
    CHECK(format_csv(make_figure(7, c)) == format_csv(make_figure(7, c)));
    CHECK(format_csv(make_figure(1, c)) == format_csv(make_figure(1, c)));
    RunConfig d = c;
    d.seed = 100;
    CHECK(format_csv(make_figure(7, c)) != format_csv(make_figure(7, d)));
}

TEST_CASE("table 1 reports the unitary Tracy-Widom mean") {
    RunConfig c;
    const std::string t = make_cumulant_table(1, c);
    CHECK(t.find("-1.7710") != std::string::npos);
    CHECK(make_cumulant_table(2, c).find("-1.2065") != std::string::npos);
}

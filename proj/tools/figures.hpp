#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "csvout.hpp"
#include "eigenstrata/ensemble.hpp"

namespace eigenstrata::tools {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class UncorrParent { Exact, Leading };

struct RunConfig {
    std::string ensemble = "gue";
    std::optional<int> n;  // unset: the figure's own N
    int alpha = 4;
    std::optional<double> lo, hi;
    int points = 0;  // 0: figure default
    int samples = 100000;
    std::uint64_t seed = 7;
    std::string out = "out";
    bool svg = false;
    UncorrParent uncorr = UncorrParent::Exact;
};

// throws ConfigError
void check_config(const RunConfig& cfg);

// ensemble named in cfg.ensemble with cfg.n (default 20) and cfg.alpha
EnsembleSpec config_spec(const RunConfig& cfg);

std::string figure_title(int id);
Table make_figure(int id, const RunConfig& cfg);

// cumulant table 1 (unitary) or 2 (orthogonal) as aligned text
std::string make_cumulant_table(int id, const RunConfig& cfg);

// writes fig<id>.csv (and .svg) under cfg.out, returns the csv path
std::string write_figure(int id, const RunConfig& cfg);

}  // namespace eigenstrata::tools

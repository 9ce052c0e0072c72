// eigenstrata: figures, tables, acceptance suite and direct access to the
// density / decomposition / Tracy-Widom routines.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csvout.hpp"
#include "eigenstrata/acceptance.hpp"
#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/gaussdecomp.hpp"
#include "eigenstrata/tracywidom.hpp"
#include "figures.hpp"

using namespace eigenstrata;
using namespace eigenstrata::tools;

namespace {

constexpr int kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitNumeric = 3;

struct Flags {
    std::string ensemble = "gue";
    int n = 0;
    int alpha = 4;
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    int points = 0;
    int samples = 100000;
    std::uint64_t seed = 7;
    std::string out = "out";
    bool svg = false;
    std::string uncorr = "exact";
};

RunConfig to_config(const Flags& f) {
    RunConfig c;
    c.ensemble = f.ensemble;
    if (f.n != 0) c.n = f.n;
    c.alpha = f.alpha;
    if (!std::isnan(f.lo)) c.lo = f.lo;
    if (!std::isnan(f.hi)) c.hi = f.hi;
    c.points = f.points;
    c.samples = f.samples;
    c.seed = f.seed;
    c.out = f.out;
    c.svg = f.svg;
    if (f.uncorr == "exact")
        c.uncorr = UncorrParent::Exact;
    else if (f.uncorr == "leading")
        c.uncorr = UncorrParent::Leading;
    else
        throw ConfigError("uncorr-parent must be exact or leading");
    check_config(c);
    return c;
}

void add_common(CLI::App* app, Flags& f, bool figure_opts) {
    app->add_option("--ensemble", f.ensemble, "gue, goe or wishart");
    app->add_option("--n", f.n, "matrix size N");
    app->add_option("--alpha", f.alpha, "Wishart alpha = M - N");
    app->add_option("--lo", f.lo, "grid start");
    app->add_option("--hi", f.hi, "grid end");
    app->add_option("--points", f.points, "grid points");
    if (figure_opts) {
        app->add_option("--samples", f.samples, "Monte Carlo samples");
        app->add_option("--seed", f.seed, "Monte Carlo seed");
        app->add_option("--out", f.out, "output directory");
        app->add_flag("--svg", f.svg, "also write an SVG plot");
        app->add_option("--uncorr-parent", f.uncorr, "parent density of the uncorrelated overlay: exact or leading");
    }
}

std::vector<double> direct_grid(const RunConfig& c, const EnsembleSpec& spec) {
    auto sup = leading_support(spec);
    const double w = sup.hi - sup.lo;
    const double lo = c.lo.value_or(spec.gaussian() ? sup.lo - 0.2 * w : 1e-3);
    const double hi = c.hi.value_or(sup.hi + 0.2 * w);
    const int n = c.points > 0 ? c.points : 401;
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// Flat "key = value" config: each key becomes --key=value unless the same
// flag is already on the command line. Lines starting with # or ; and
// [section] headers are skipped.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    auto given = [&](const std::string& key) {
        for (const auto& a : rest)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line without '=': " + line);
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (given(key)) continue;
        if (value == "true")
            rest.push_back("--" + key);
        else if (value != "false")
            rest.push_back("--" + key + "=" + value);
    }
    return rest;
}

void emit(const std::string& out_file, const Table& t) {
    const std::string csv = format_csv(t);
    if (out_file.empty())
        std::cout << csv;
    else
        write_atomic(out_file, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenstrata: eigenvalue densities split into individual eigenvalue distributions"};
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value file of option values (flags win)");
    app.require_subcommand(1);

    Flags f;
    int fig_id = 0;
    auto* figure = app.add_subcommand("figure", "write fig<id>.csv (and .svg) for figure 1-14");
    figure->add_option("id", fig_id, "figure number")->required()->check(CLI::Range(1, 14));
    add_common(figure, f, true);

    int table_id = 0;
    auto* table = app.add_subcommand("table", "print cumulant table 1 or 2");
    table->add_option("id", table_id, "table number")->required()->check(CLI::Range(1, 2));
    table->add_option("--n", f.n, "matrix size N");

    bool full = false;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite, JSON report on stdout");
    verify->add_flag("--full", full, "include the Monte Carlo criteria");

    std::string out_file;
    auto* dens = app.add_subcommand("density", "exact, leading and asymptotic density on a grid");
    add_common(dens, f, false);
    dens->add_option("--out", out_file, "CSV file (default stdout)");

    std::string mode = "exact";
    auto* dec = app.add_subcommand("decompose", "individual eigenvalue densities on a grid");
    add_common(dec, f, false);
    dec->add_option("--mode", mode, "exact or bulk")->check(CLI::IsMember({"exact", "bulk"}));
    dec->add_option("--out", out_file, "CSV file (default stdout)");

    int beta = 2;
    bool cumulants = false;
    auto* tw = app.add_subcommand("tw", "Tracy-Widom CDF and density");
    tw->add_option("--beta", beta, "1 or 2")->check(CLI::IsMember({1, 2}));
    tw->add_option("--lo", f.lo, "s start");
    tw->add_option("--hi", f.hi, "s end");
    tw->add_option("--points", f.points, "grid points");
    tw->add_flag("--cumulants", cumulants, "print cumulants instead of the table");
    tw->add_option("--out", out_file, "CSV file (default stdout)");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*figure) {
            auto cfg = to_config(f);
            std::cerr << "wrote " << write_figure(fig_id, cfg) << "\n";
        } else if (*table) {
            auto cfg = to_config(f);
            std::cout << make_cumulant_table(table_id, cfg);
        } else if (*verify) {
            auto res = run_acceptance(full, [](const CriterionResult& r) {
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
            });
            std::cout << to_json(res) << "\n";
            bool ok = true;
            for (const auto& r : res) {
                if (!r.pass) std::cerr << "failed: " << r.name << " (" << r.detail << ")\n";
                ok = ok && r.pass;
            }
            return ok ? kExitOk : kExitVerify;
        } else if (*dens) {
            auto cfg = to_config(f);
            auto spec = config_spec(cfg);
            auto xs = direct_grid(cfg, spec);
            std::vector<double> rho(xs.size()), lead(xs.size()), asym(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                rho[i] = !spec.gaussian() && xs[i] <= 0 ? 0.0 : density(spec, xs[i]);
                lead[i] = leading_density(spec, xs[i]);
                try {
                    asym[i] = asymptotic_density(spec, xs[i]);
                } catch (const Error&) {
                    asym[i] = std::numeric_limits<double>::quiet_NaN();
                }
            }
            Table t;
            t.add("x", xs);
            t.add("density", rho);
            t.add("leading", lead);
            t.add("asymptotic", asym);
            emit(out_file, t);
        } else if (*dec) {
            auto cfg = to_config(f);
            auto spec = config_spec(cfg);
            auto xs = direct_grid(cfg, spec);
            auto g = decompose_grid(spec, xs, mode == "bulk" ? DecompMode::Bulk : DecompMode::Exact);
            Table t;
            t.add("x", xs);
            t.add("density", g.rho);
            t.add("rho_s", g.rho_s);
            t.add("nu", g.nu);
            t.add("sigma2", g.sigma2);
            for (int k = 1; k <= spec.N; ++k) t.add("comp_" + std::to_string(k), g.components[k - 1]);
            emit(out_file, t);
        } else if (*tw) {
            const auto& sol = default_painleve();
            if (cumulants) {
                auto c = tw_cumulants(sol, beta);
                std::printf("mean %.8f\nstd_dev %.8f\nskewness %.8f\nexcess_kurtosis %.8f\n", c.mean, c.std_dev,
                            c.skewness, c.excess_kurtosis);
                return kExitOk;
            }
            const double lo = std::isnan(f.lo) ? -8.0 : f.lo, hi = std::isnan(f.hi) ? 6.0 : f.hi;
            const int n = f.points > 0 ? f.points : 281;
            if (n < 2 || !(lo < hi)) throw ConfigError("bad s grid");
            std::vector<double> s(n), F(n), p(n);
            for (int i = 0; i < n; ++i) {
                s[i] = lo + (hi - lo) * i / (n - 1);
                F[i] = tw_cdf(sol, s[i], beta);
                p[i] = tw_density(sol, s[i], beta);
            }
            Table t;
            t.add("s", s);
            t.add("cdf", F);
            t.add("density", p);
            emit(out_file, t);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return e.kind() == ErrorKind::InvalidSpec ? kExitUsage : kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

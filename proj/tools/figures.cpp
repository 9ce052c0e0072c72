#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/gaussdecomp.hpp"
#include "eigenstrata/montecarlo.hpp"
#include "eigenstrata/orderstats.hpp"
#include "eigenstrata/specfn.hpp"
#include "eigenstrata/tracywidom.hpp"
#include "svg.hpp"

namespace eigenstrata::tools {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> grid(const RunConfig& cfg, double lo, double hi, int points = 801) {
    return linspace(cfg.lo.value_or(lo), cfg.hi.value_or(hi), cfg.points > 0 ? cfg.points : points);
}

int n_or(const RunConfig& cfg, int def) { return cfg.n.value_or(def); }

// histogram density looked up at x (0 outside the histogram)
std::vector<double> hist_at(const RankHistogram& h, const std::vector<double>& xs, double scale = 1.0) {
    auto d = h.density();
    std::vector<double> out(xs.size(), 0.0);
    if (d.empty()) return out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        if (x < h.bin_edges.front() || x > h.bin_edges.back()) continue;
        std::size_t j = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), x) - h.bin_edges.begin();
        j = std::clamp<std::size_t>(j, 1, d.size());
        out[i] = d[j - 1] * scale;
    }
    return out;
}

// parent density for uncorrelated variables with the same total density
DensityMap parent_map(const EnsembleSpec& spec, UncorrParent which) {
    if (which == UncorrParent::Leading) {
        return {[spec](double x) { return leading_density(spec, x); },
                [spec](double x) { return counting_xi(spec, x) - (spec.gaussian() ? 0.0 : 0.5 * spec.N); }};
    }
    if (spec.kind == Ensemble::GUE) {
        return {[spec](double x) { return density(spec, x); }, [spec](double x) { return counting_fn_gue(spec.N, x); }};
    }
    // cumulative by trapezoid on a fine table, measured from the median
    auto sup = leading_support(spec);
    const double w = sup.hi - sup.lo;
    const double a = spec.gaussian() ? sup.lo - 0.5 * w - 4.0 : 1e-9;
    const double b = sup.hi + 0.5 * w + 4.0;
    auto xs = linspace(a, b, 20001);
    std::vector<double> F(xs.size(), 0.0), f(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) f[i] = density(spec, xs[i]);
    for (std::size_t i = 1; i < xs.size(); ++i) F[i] = F[i - 1] + 0.5 * (f[i] + f[i - 1]) * (xs[i] - xs[i - 1]);
    for (auto& v : F) v -= 0.5 * spec.N;
    GridCdf cdf{xs, F};
    return {[spec](double x) { return spec.gaussian() || x > 0 ? density(spec, x) : 0.0; },
            [cdf, lo = F.front(), hi = F.back()](double x) {
                if (x <= cdf.x.front()) return lo;
                if (x >= cdf.x.back()) return hi;
                return cdf(x);
            }};
}

// figures 1 and 3/8 style: order statistics of i.i.d. parents
Table iid_figure(const RunConfig& cfg) {
    const int N = n_or(cfg, 20);
    auto xs = grid(cfg, -3.5, 3.5);
    auto map = gaussian_map(N);
    Table t;
    t.add("x", xs);
    std::vector<double> d(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) d[i] = map.density(xs[i]);
    t.add("density", d);
    for (int k = 1; k <= N; ++k) {
        std::vector<double> c(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) c[i] = mapped_rank_density(map, {N, k - 1}, xs[i]);
        t.add("var_" + std::to_string(k), c);
    }
    return t;
}

Table gumbel_figure(const RunConfig& cfg) {
    const int N = n_or(cfg, 100);
    auto zs = grid(cfg, -3.0, 8.0, 441);
    Table t;
    t.add("z", zs);
    if (cfg.samples > 0) {
        auto m = iid_gaussian_maxima(N, 0.5 * std::numbers::sqrt2, cfg.seed, cfg.samples);
        for (auto& x : m) x = gumbel_variable(N, x);
        t.add("simulation", hist_at(histogram(m), zs));
    }
    std::vector<double> g(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) g[i] = gumbel_density(zs[i]);
    t.add("gumbel", g);
    return t;
}

Table n2_figure(const RunConfig& cfg, Ensemble kind) {
    const auto spec = EnsembleSpec{kind, 2, 0};
    auto xs = grid(cfg, -4.0, 4.0);
    auto map = parent_map(spec, cfg.uncorr);
    Table t;
    t.add("x", xs);
    std::vector<double> d(xs.size()), L(xs.size()), S(xs.size()), uL(xs.size()), uS(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const bool gue = kind == Ensemble::GUE;
        d[i] = gue ? gue_n2_density(x) : goe_n2_density(x);
        L[i] = gue ? gue_n2_extreme(x, Extreme::Largest) : goe_n2_extreme(x, Extreme::Largest);
        S[i] = gue ? gue_n2_extreme(x, Extreme::Smallest) : goe_n2_extreme(x, Extreme::Smallest);
        uL[i] = mapped_rank_density(map, {2, 0}, x);
        uS[i] = mapped_rank_density(map, {2, 1}, x);
    }
    t.add("density", d);
    t.add("eig_largest", L);
    t.add("eig_smallest", S);
    t.add("uncorr_largest", uL);
    t.add("uncorr_smallest", uS);
    return t;
}

Table reldiff_figure(const RunConfig& cfg, const EnsembleSpec& spec) {
    auto sup = leading_support(spec);
    const double w = sup.hi - sup.lo;
    auto xs = grid(cfg, sup.lo + 1e-3 * w, sup.hi - 1e-3 * w, 1601);
    std::vector<double> xi(xs.size()), r(xs.size(), kNaN);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xi[i] = counting_xi(spec, xs[i]);
        try {
            const double rho = density(spec, xs[i]);
            r[i] = (asymptotic_density(spec, xs[i]) - rho) / rho;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::EdgeSingularity) throw;
        }
    }
    Table t;
    t.add("xi", xi);
    t.add("x", xs);
    t.add("rel_diff", r);
    return t;
}

std::vector<double> decomposition_range(const EnsembleSpec& spec) {
    auto sup = leading_support(spec);
    if (spec.gaussian()) return {sup.lo - 2.5, sup.hi + 2.5};
    return {1e-3, sup.hi + 10.0 * std::cbrt(sup.hi)};
}

// components (exact and bulk), simulation histograms and/or uncorrelated overlay
Table decomposition_figure(const RunConfig& cfg, const EnsembleSpec& spec, bool bulk, bool sim, bool uncorr) {
    auto r = decomposition_range(spec);
    auto xs = grid(cfg, r[0], r[1]);
    const int N = spec.N;
    Table t;
    t.add("x", xs);
    auto ex = decompose_grid(spec, xs, DecompMode::Exact);
    t.add("density", ex.rho);
    for (int k = 1; k <= N; ++k) t.add("comp_" + std::to_string(k), ex.components[k - 1]);
    if (bulk) {
        auto bk = decompose_grid(spec, xs, DecompMode::Bulk);
        for (int k = 1; k <= N; ++k) t.add("bulk_" + std::to_string(k), bk.components[k - 1]);
    }
    if (sim && cfg.samples > 0) {
        auto batch = sample_ensemble(spec, cfg.seed, cfg.samples);
        for (int k = 1; k <= N; ++k)
            t.add("sim_" + std::to_string(k), hist_at(rank_histogram(batch, ascending_rank(spec, k)), xs));
    }
    if (uncorr) {
        auto map = parent_map(spec, cfg.uncorr);
        for (int k = 1; k <= N; ++k) {
            // rank counted from the top for the order-statistics weight
            const int n = N - ascending_rank(spec, k);
            std::vector<double> c(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                c[i] = spec.gaussian() || xs[i] > 0 ? mapped_rank_density(map, {N, n}, xs[i]) : 0.0;
            t.add("uncorr_" + std::to_string(k), c);
        }
    }
    return t;
}

// largest eigenvalue in the edge variable s
Table edge_figure(const RunConfig& cfg, const EnsembleSpec& spec, bool bulk) {
    const auto sc = edge_scaling(spec);
    auto ss = grid(cfg, -6.0, 4.0, 401);
    std::vector<double> xs(ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) xs[i] = sc.center + sc.scale * ss[i];
    if (!spec.gaussian())
        for (auto& x : xs) x = std::max(x, 1e-3);
    const int k = largest_component(spec);
    Table t;
    t.add("s", ss);
    if (cfg.samples > 0) {
        auto batch = sample_ensemble(spec, cfg.seed, cfg.samples);
        auto top = rank_values(batch, spec.N);
        for (auto& x : top) x = (x - sc.center) / sc.scale;
        t.add("simulation", hist_at(histogram(top), ss));
    }
    auto ex = decompose_grid(spec, xs, DecompMode::Exact);
    std::vector<double> ng(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ng[i] = ex.components[k - 1][i] * sc.scale;
    t.add("nearly_gaussian", ng);
    const auto& tw = default_painleve();
    const int beta = spec.kind == Ensemble::GOE ? 1 : 2;
    std::vector<double> twd(ss.size(), 0.0);
    for (std::size_t i = 0; i < ss.size(); ++i)
        if (ss[i] >= tw.s_grid.front() && ss[i] <= tw.s_grid.back()) twd[i] = tw_density(tw, ss[i], beta);
    t.add("tracy_widom", twd);
    if (bulk) {
        auto bk = decompose_grid(spec, xs, DecompMode::Bulk);
        std::vector<double> a(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) a[i] = bk.components[k - 1][i] * sc.scale;
        t.add("asymptotic", a);
    }
    return t;
}

Table smallest_wishart_figure(const RunConfig& cfg, const EnsembleSpec& spec) {
    auto e = mp_edges(spec.N, spec.alpha);
    auto xs = grid(cfg, 1e-3, std::max(4.0, 4.0 * std::max(e.lo, 1.0)), 401);
    Table t;
    t.add("x", xs);
    if (cfg.samples > 0) {
        auto batch = sample_ensemble(spec, cfg.seed, cfg.samples);
        t.add("simulation", hist_at(rank_histogram(batch, 1), xs));
    }
    auto ex = decompose_grid(spec, xs, DecompMode::Exact);
    t.add("nearly_gaussian", ex.components[0]);
    return t;
}

EnsembleSpec fig_spec(const RunConfig& cfg, Ensemble kind) {
    EnsembleSpec s{kind, n_or(cfg, 20), kind == Ensemble::Wishart ? cfg.alpha : 0};
    validate(s);
    return s;
}

// moments of a density sampled on an even grid
Cumulants grid_cumulants(const std::vector<double>& s, const std::vector<double>& f) {
    auto integ = [&](auto g) {
        double v = 0.0;
        for (std::size_t i = 1; i < s.size(); ++i) v += 0.5 * (g(i) + g(i - 1)) * (s[i] - s[i - 1]);
        return v;
    };
    const double m0 = integ([&](std::size_t i) { return f[i]; });
    const double mean = integ([&](std::size_t i) { return s[i] * f[i]; }) / m0;
    auto c = [&](int p) { return integ([&](std::size_t i) { return std::pow(s[i] - mean, p) * f[i]; }) / m0; };
    const double var = c(2);
    return {mean, std::sqrt(var), c(3) / std::pow(var, 1.5), c(4) / (var * var) - 3.0};
}

}  // namespace

void check_config(const RunConfig& cfg) {
    if (cfg.points != 0 && cfg.points < 2) throw ConfigError("points must be >= 2");
    if (cfg.lo && cfg.hi && !(*cfg.lo < *cfg.hi)) throw ConfigError("lo must be below hi");
    if (cfg.samples < 0) throw ConfigError("samples must be >= 0");
    if (cfg.n && *cfg.n < 1) throw ConfigError("n must be positive");
    if (cfg.alpha < 0) throw ConfigError("alpha must be >= 0");
    try {
        parse_ensemble(cfg.ensemble);
    } catch (const Error&) {
        throw ConfigError("unknown ensemble '" + cfg.ensemble + "'");
    }
}

EnsembleSpec config_spec(const RunConfig& cfg) {
    const Ensemble kind = parse_ensemble(cfg.ensemble);
    EnsembleSpec s{kind, n_or(cfg, 20), kind == Ensemble::Wishart ? cfg.alpha : 0};
    validate(s);
    return s;
}

std::string figure_title(int id) {
    switch (id) {
    case 1: return "Fig 1: individual distributions of N i.i.d. Gaussian variables";
    case 2: return "Fig 2: largest of N=100 Gaussian variables vs Gumbel";
    case 3: return "Fig 3: GUE N=2 density, eigenvalues and uncorrelated variables";
    case 4: return "Fig 4: GUE relative difference (rho_asym - rho)/rho vs xi";
    case 5: return "Fig 5: GUE individual eigenvalue distributions";
    case 6: return "Fig 6: GUE eigenvalues vs uncorrelated variables";
    case 7: return "Fig 7: GUE largest eigenvalue, nearly Gaussian vs Tracy-Widom";
    case 8: return "Fig 8: GOE N=2 density, eigenvalues and uncorrelated variables";
    case 9: return "Fig 9: GOE individual eigenvalue distributions";
    case 10: return "Fig 10: GOE largest eigenvalue, nearly Gaussian vs Tracy-Widom";
    case 11: return "Fig 11: Wishart relative difference (rho_asym - rho)/rho vs xi";
    case 12: return "Fig 12: Wishart individual eigenvalue distributions";
    case 13: return "Fig 13: Wishart largest eigenvalue, nearly Gaussian vs Tracy-Widom";
    case 14: return "Fig 14: Wishart smallest eigenvalue";
    }
    throw ConfigError("figure id must be in 1..14");
}

Table make_figure(int id, const RunConfig& cfg) {
    check_config(cfg);
    switch (id) {
    case 1: return iid_figure(cfg);
    case 2: return gumbel_figure(cfg);
    case 3: return n2_figure(cfg, Ensemble::GUE);
    case 4: return reldiff_figure(cfg, fig_spec(cfg, Ensemble::GUE));
    case 5: return decomposition_figure(cfg, fig_spec(cfg, Ensemble::GUE), true, true, false);
    case 6: return decomposition_figure(cfg, fig_spec(cfg, Ensemble::GUE), false, false, true);
    case 7: return edge_figure(cfg, fig_spec(cfg, Ensemble::GUE), true);
    case 8: return n2_figure(cfg, Ensemble::GOE);
    case 9: return decomposition_figure(cfg, fig_spec(cfg, Ensemble::GOE), true, true, false);
    case 10: return edge_figure(cfg, fig_spec(cfg, Ensemble::GOE), false);
    case 11: return reldiff_figure(cfg, fig_spec(cfg, Ensemble::Wishart));
    case 12: return decomposition_figure(cfg, fig_spec(cfg, Ensemble::Wishart), true, true, true);
    case 13: return edge_figure(cfg, fig_spec(cfg, Ensemble::Wishart), false);
    case 14: return smallest_wishart_figure(cfg, fig_spec(cfg, Ensemble::Wishart));
    }
    throw ConfigError("figure id must be in 1..14");
}

std::string write_figure(int id, const RunConfig& cfg) {
    const std::string title = figure_title(id);
    auto t = make_figure(id, cfg);
    const std::string base = (std::filesystem::path(cfg.out) / ("fig" + std::to_string(id))).string();
    write_atomic(base + ".csv", format_csv(t));
    if (cfg.svg) write_atomic(base + ".svg", render_svg(t, title));
    return base + ".csv";
}

std::string make_cumulant_table(int id, const RunConfig& cfg) {
    if (id != 1 && id != 2) throw ConfigError("table id must be 1 or 2");
    check_config(cfg);
    const auto spec = fig_spec(cfg, id == 1 ? Ensemble::GUE : Ensemble::GOE);
    const int beta = id == 1 ? 2 : 1;
    const auto tw = tw_cumulants(default_painleve(), beta);

    // largest-eigenvalue component in the edge variable
    const auto sc = edge_scaling(spec);
    auto ss = linspace(-12.0, 8.0, 4001);
    std::vector<double> xs(ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) xs[i] = sc.center + sc.scale * ss[i];
    auto ex = decompose_grid(spec, xs, DecompMode::Exact);
    std::vector<double> f(ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) f[i] = ex.components[largest_component(spec) - 1][i] * sc.scale;
    const auto ng = grid_cumulants(ss, f);

    struct Row {
        const char* name;
        Cumulants c;
    };
    const Row ref_tw = id == 1 ? Row{"reference Tracy-Widom", {-1.77109, 0.9018, 0.224, 0.093}}
                                 : Row{"reference Tracy-Widom", {-1.20653, 1.2580, 0.293, 0.165}};
    const Row ref_ng = id == 1 ? Row{"reference nearly Gaussian", {-1.829, 0.9066, 0.114, 0.074}}
                                 : Row{"reference nearly Gaussian", {-1.382, 1.264, 0.325, 0.067}};
    char line[160];
    std::string out = id == 1 ? "Table 1: cumulants, unitary case (N=" : "Table 2: cumulants, orthogonal case (N=";
    out += std::to_string(spec.N) + ")\n";
    std::snprintf(line, sizeof line, "%-24s %12s %12s %12s %12s\n", "", "mean", "std_dev", "skewness", "kurtosis");
    out += line;
    for (const Row& r : {Row{"Tracy-Widom", tw}, ref_tw, Row{"nearly Gaussian", ng}, ref_ng}) {
        std::snprintf(line, sizeof line, "%-24s %12.6f %12.6f %12.6f %12.6f\n", r.name, r.c.mean, r.c.std_dev,
                      r.c.skewness, r.c.excess_kurtosis);
        out += line;
    }
    return out;
}

}  // namespace eigenstrata::tools

#include "eigenstrata/gaussdecomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/phasedecomp.hpp"
#include "parallel.hpp"

namespace eigenstrata {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using SpecKey = std::tuple<int, int, int>;
SpecKey key_of(const EnsembleSpec& s) { return {static_cast<int>(s.kind), s.N, s.alpha}; }

std::mutex g_cache_mu;
std::map<SpecKey, int> g_offset_cache;
std::map<SpecKey, InflectionPoints> g_inflection_cache;
std::map<SpecKey, std::pair<double, double>> g_domain_cache;

void check_k(const EnsembleSpec& spec, int k) {
    if (k < 1 || k > spec.N)
        fail(ErrorKind::RankOutOfRange, "component " + std::to_string(k) + " for N=" + std::to_string(spec.N));
}

double spectrum_centre(const EnsembleSpec& spec) {
    return spec.gaussian() ? 0.0 : xi_inverse(spec, 0.5 * spec.N);
}

double raw_nu(const EnsembleSpec& spec, const DensitySplit& d) {
    if (spec.gaussian()) return (d.phase_sum + d.theta_shift - kPi) / (2.0 * kPi) - 0.5 * spec.N;
    return (d.phase_sum - d.theta_shift) / (2.0 * kPi);
}

double sigma2_from(double B, double rho_s) {
    if (!(rho_s > 0.0) || !(B > 0.0)) return kNaN;
    const double r = B / (2.0 * rho_s);
    if (!(r < 1.0)) return kNaN;
    return -std::log(r) / (2.0 * kPi * kPi);
}

struct BulkPoint {
    double rho_s = kNaN, nu = kNaN, sigma2 = kNaN;
};

BulkPoint bulk_point(const EnsembleSpec& spec, double x) {
    BulkPoint p;
    const double N = spec.N;
    const double lead = leading_density(spec, x);
    if (!(lead > 0.0)) return p;
    const double xi = counting_xi(spec, x);
    switch (spec.kind) {
    case Ensemble::GUE: {
        p.rho_s = lead;
        p.nu = xi;
        const double arg = kPi * std::numbers::sqrt2 * lead / std::cbrt(std::sqrt(N));
        p.sigma2 = arg > 1.0 ? 3.0 / (2.0 * kPi * kPi) * std::log(arg) : kNaN;
        break;
    }
    case Ensemble::GOE: {
        p.rho_s = lead - 1.0 / (2.0 * kPi * kPi * lead);
        p.nu = xi - std::atan(3.0 * x / (4.0 * kPi * lead)) / (2.0 * kPi);
        const double B = std::sqrt(2.0 * N) / (2.0 * std::pow(kPi, 5) * std::pow(lead, 4)) *
                         std::sqrt(1.0 + 9.0 * x * x / (16.0 * kPi * kPi * lead * lead));
        p.sigma2 = sigma2_from(B, p.rho_s);
        break;
    }
    case Ensemble::Wishart: {
        p.rho_s = lead;
        p.nu = xi;
        const double xp = mp_edges(spec.N, spec.alpha).hi;
        const double arg = 2.0 * kPi * std::pow(2.0 * x, 2.0 / 3.0) * lead / std::cbrt(xp);
        p.sigma2 = arg > 1.0 ? 3.0 / (2.0 * kPi * kPi) * std::log(arg) : kNaN;
        break;
    }
    }
    return p;
}

// Interval around the spectrum centre on which the exact sigma^2 stays
// defined. Outside it the split is dominated by cancellation and the
// Gaussian components are switched off.
std::pair<double, double> variance_domain(const EnsembleSpec& spec) {
    {
        std::lock_guard<std::mutex> g(g_cache_mu);
        auto it = g_domain_cache.find(key_of(spec));
        if (it != g_domain_cache.end()) return it->second;
    }
    const Band band = split_band(spec);
    const double xc = spectrum_centre(spec);
    const double lo = spec.gaussian() ? -band.hi : band.lo, hi = band.hi;
    const int n = 4000;
    // walk from the centre towards end; grids are passed ascending
    auto edge = [&](double end) {
        std::vector<double> xs(n + 1);
        for (int i = 0; i <= n; ++i) xs[i] = xc + (end - xc) * i / n;
        if (end < xc) std::reverse(xs.begin(), xs.end());
        auto sp = split_density_grid(spec, xs);
        double last = xc;
        for (int i = 0; i <= n; ++i) {
            const int j = end < xc ? n - i : i;
            if (std::isnan(sigma2_from(sp[j].B, sp[j].rho_s))) return last;
            last = xs[j];
        }
        return end;
    };
    std::pair<double, double> d{edge(lo), edge(hi)};
    std::lock_guard<std::mutex> g(g_cache_mu);
    g_domain_cache[key_of(spec)] = d;
    return d;
}

double curvature(const EnsembleSpec& spec, double x, double h) {
    return (density(spec, x + h) - 2.0 * density(spec, x) + density(spec, x - h)) / (h * h);
}

}  // namespace

EigenComponent eigen_component(const EnsembleSpec& spec, int k) {
    check_k(spec, k);
    EigenComponent c;
    c.k = k;
    c.nu_k = spec.gaussian() ? 0.5 * (spec.N + 1) - k : 0.5 + (k - 1);
    const bool extreme = spec.N >= 2 && (k == 1 || k == spec.N);
    c.kind = extreme ? ComponentKind::EdgeExactTail : ComponentKind::BulkGaussian;
    return c;
}

int largest_component(const EnsembleSpec& spec) { return spec.gaussian() ? 1 : spec.N; }

int ascending_rank(const EnsembleSpec& spec, int k) {
    check_k(spec, k);
    return spec.gaussian() ? spec.N + 1 - k : k;
}

int exact_nu_offset(const EnsembleSpec& spec) {
    {
        std::lock_guard<std::mutex> g(g_cache_mu);
        auto it = g_offset_cache.find(key_of(spec));
        if (it != g_offset_cache.end()) return it->second;
    }
    const double xc = spectrum_centre(spec);
    const auto d = split_density(spec, xc);
    const int j = static_cast<int>(std::lround(counting_xi(spec, xc) - raw_nu(spec, d)));
    std::lock_guard<std::mutex> g(g_cache_mu);
    g_offset_cache[key_of(spec)] = j;
    return j;
}

ScaledCoordinates scaled_coords(const EnsembleSpec& spec, double x, DecompMode mode) {
    validate(spec);
    ScaledCoordinates s;
    if (mode == DecompMode::Bulk) {
        auto p = bulk_point(spec, x);
        if (std::isnan(p.sigma2))
            fail(ErrorKind::VarianceUndefined, "bulk variance undefined at x=" + std::to_string(x));
        s.nu = p.nu;
        s.sigma2 = p.sigma2;
        return s;
    }
    const auto d = split_density(spec, x);
    s.nu = raw_nu(spec, d) + exact_nu_offset(spec);
    s.sigma2 = sigma2_from(d.B, d.rho_s);
    if (std::isnan(s.sigma2))
        fail(ErrorKind::VarianceUndefined, "B/(2 rho_s) >= 1 at x=" + std::to_string(x));
    return s;
}

InflectionPoints inflection_points(const EnsembleSpec& spec) {
    validate(spec);
    if (spec.N < 2) fail(ErrorKind::NotFound, "no inflection points for N=1");
    {
        std::lock_guard<std::mutex> g(g_cache_mu);
        auto it = g_inflection_cache.find(key_of(spec));
        if (it != g_inflection_cache.end()) return it->second;
    }
    auto sup = leading_support(spec);
    const double width = sup.hi - sup.lo;
    const double h = 1e-4 * width;
    const double lo = spec.gaussian() ? sup.lo - 0.5 * width : 2.0 * h;
    const double hi = sup.hi + 0.5 * width;
    const int n = 4000;
    std::vector<double> xs(n + 1), c(n + 1), f(n + 1);
    double fmax = 0.0;
    for (int i = 0; i <= n; ++i) {
        xs[i] = lo + (hi - lo) * i / n;
        f[i] = density(spec, xs[i]);
        fmax = std::max(fmax, f[i]);
    }
    for (int i = 0; i <= n; ++i) c[i] = f[i] > 1e-10 * fmax ? curvature(spec, xs[i], h) : 0.0;

    auto bisect = [&](double a, double b) {
        double ca = curvature(spec, a, h);
        for (int it = 0; it < 80 && b - a > 1e-13 * width; ++it) {
            const double m = 0.5 * (a + b);
            const double cm = curvature(spec, m, h);
            if ((cm > 0) == (ca > 0)) {
                a = m;
                ca = cm;
            } else {
                b = m;
            }
        }
        return 0.5 * (a + b);
    };

    int first = -1, last = -1;
    for (int i = 0; i < n; ++i) {
        if (c[i] == 0.0 || c[i + 1] == 0.0) continue;
        if ((c[i] > 0) != (c[i + 1] > 0)) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0 || first == last) fail(ErrorKind::NotFound, "no curvature sign change");
    InflectionPoints ip{bisect(xs[first], xs[first + 1]), bisect(xs[last], xs[last + 1])};
    std::lock_guard<std::mutex> g(g_cache_mu);
    g_inflection_cache[key_of(spec)] = ip;
    return ip;
}

bool in_bulk_band(const EnsembleSpec& spec, double x) {
    const double xi = counting_xi(spec, x);
    const double N = spec.N;
    if (spec.gaussian()) return std::abs(xi) <= 0.5 * N - 1.0;
    return xi >= 1.0 && xi <= N - 1.0;
}

double remainder_bound(double sigma, double nu, int N) {
    // excluded centres sit at (N+1)/2 - k for k <= 0 and k >= N+1
    const double s2 = sigma * sigma;
    const double norm = 1.0 / std::sqrt(2.0 * kPi * s2);
    double bound = 0.0;
    for (double d : {0.5 * (N + 1) - nu, nu + 0.5 * (N + 1)}) {
        // nearest excluded centre is at distance d from nu; ratios of
        // successive terms are below exp(-d/s2)
        if (d <= 0) return std::numeric_limits<double>::infinity();
        bound += norm * std::exp(-d * d / (2.0 * s2)) / (1.0 - std::exp(-d / s2));
    }
    return bound;
}

PoissonCheck poisson_sum_check(double sigma, double nu, int N, int m_max) {
    PoissonCheck p;
    const double s2 = sigma * sigma;
    const double norm = 1.0 / std::sqrt(2.0 * kPi * s2);
    auto g = [&](double c) { return norm * std::exp(-(nu - c) * (nu - c) / (2.0 * s2)); };
    double comb = 0.0;
    for (int k = 1; k <= N; ++k) comb += g(0.5 * (N + 1) - k);
    double r = 0.0;
    for (int k = 0;; --k) {
        const double t = g(0.5 * (N + 1) - k);
        r += t;
        if (t < 1e-20 * (comb + r) && 0.5 * (N + 1) - k > nu) break;
    }
    for (int k = N + 1;; ++k) {
        const double t = g(0.5 * (N + 1) - k);
        r += t;
        if (t < 1e-20 * (comb + r) && 0.5 * (N + 1) - k < nu) break;
    }
    p.remainder = r;
    p.remainder_bound = remainder_bound(sigma, nu, N);
    p.lhs = comb + r;
    double rhs = 1.0;
    for (int m = 1; m <= m_max; ++m)
        rhs += 2.0 * (m % 2 ? -1.0 : 1.0) * std::exp(-2.0 * std::pow(kPi * m * sigma, 2)) *
               std::cos(2.0 * kPi * m * (nu + 0.5 * N));
    p.rhs = rhs;
    return p;
}

DecompGrid decompose_grid(const EnsembleSpec& spec, const std::vector<double>& xs, DecompMode mode,
                          double sigma2_scale) {
    validate(spec);
    const int N = spec.N;
    const std::size_t n = xs.size();
    DecompGrid out;
    out.x = xs;
    out.rho.assign(n, 0.0);
    out.rho_s.assign(n, kNaN);
    out.nu.assign(n, kNaN);
    out.sigma2.assign(n, kNaN);
    detail::parallel_for(n, [&](std::size_t i) {
        if (!spec.gaussian() && !(xs[i] > 0.0)) return;
        out.rho[i] = density(spec, xs[i]);
    });
    out.inflection = inflection_points(spec);

    if (mode == DecompMode::Exact) {
        const Band band = split_band(spec);
        std::vector<double> inside;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            const bool ok = spec.gaussian() ? std::abs(xs[i]) <= band.hi : (xs[i] >= band.lo && xs[i] <= band.hi);
            if (ok) {
                inside.push_back(xs[i]);
                idx.push_back(i);
            }
        }
        if (!inside.empty()) {
            auto sp = split_density_grid(spec, inside);
            const int off = exact_nu_offset(spec);
            const auto dom = variance_domain(spec);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const std::size_t i = idx[j];
                if (xs[i] < dom.first || xs[i] > dom.second) continue;
                out.rho_s[i] = sp[j].rho_s;
                out.nu[i] = raw_nu(spec, sp[j]) + off;
                out.sigma2[i] = sigma2_from(sp[j].B, sp[j].rho_s);
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            auto p = bulk_point(spec, xs[i]);
            out.rho_s[i] = p.rho_s;
            out.nu[i] = p.nu;
            out.sigma2[i] = p.sigma2;
        }
    }

    if (sigma2_scale != 1.0)
        for (auto& v : out.sigma2) v *= sigma2_scale;

    out.components.assign(N, std::vector<double>(n, 0.0));
    for (int k = 1; k <= N; ++k) {
        const double nk = eigen_component(spec, k).nu_k;
        auto& row = out.components[k - 1];
        for (std::size_t i = 0; i < n; ++i) {
            const double s2 = out.sigma2[i];
            if (std::isnan(s2) || std::isnan(out.nu[i])) continue;
            const double d = out.nu[i] - nk;
            row[i] = out.rho_s[i] / std::sqrt(2.0 * kPi * s2) * std::exp(-d * d / (2.0 * s2));
        }
    }

    // extremes: Gaussian between the inflection points, density minus the
    // interior components beyond the one on their side
    if (N >= 2) {
        const int k_right = largest_component(spec);
        const int k_left = spec.gaussian() ? N : 1;
        std::vector<double> interior(n, 0.0);
        for (int k = 1; k <= N; ++k) {
            if (k == k_left || k == k_right) continue;
            for (std::size_t i = 0; i < n; ++i) interior[i] += out.components[k - 1][i];
        }
        const double xl = out.inflection.x_left, xr = out.inflection.x_right;
        auto& R = out.components[k_right - 1];
        auto& L = out.components[k_left - 1];
        for (std::size_t i = 0; i < n; ++i) {
            const double tail = std::max(out.rho[i] - interior[i], 0.0);
            const double x = xs[i];
            if (x > xr)
                R[i] = tail;
            else if (x < xl)
                R[i] = 0.0;
            if (x < xl)
                L[i] = tail;
            else if (x > xr)
                L[i] = 0.0;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (std::isnan(out.sigma2[i]) || !in_bulk_band(spec, xs[i])) continue;
        const double nu_g = spec.gaussian() ? out.nu[i] : out.nu[i] - 0.5 * N;  // shift to the GUE layout
        out.max_remainder_bulk =
            std::max(out.max_remainder_bulk, remainder_bound(std::sqrt(out.sigma2[i]), nu_g, N));
    }
    return out;
}

double component_density(const EnsembleSpec& spec, int k, double x, DecompMode mode) {
    validate(spec);
    check_k(spec, k);
    return decompose_grid(spec, {x}, mode).components[k - 1][0];
}

}  // namespace eigenstrata

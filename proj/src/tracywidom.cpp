#include "eigenstrata/tracywidom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/numeric/odeint.hpp>

#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/specfn.hpp"

namespace eigenstrata {

namespace {

using State = std::array<double, 5>;  // q, q', I2, J, mu

State rhs(double s, const State& y) {
    const double q = y[0];
    return {y[1], s * q + 2.0 * q * q * q, -y[3], -q * q, -q};
}

State state_at(const PainleveSolution& sol, std::size_t i) {
    return {sol.q[i], sol.q_prime[i], sol.I2[i], sol.J[i], sol.mu[i]};
}

// cubic Hermite between the stored points
State interpolate(const PainleveSolution& sol, double s) {
    const auto& g = sol.s_grid;
    if (g.empty() || s < g.front() || s > g.back())
        fail(ErrorKind::OutOfGrid, "s=" + std::to_string(s) + " outside the Painleve grid");
    std::size_t i = std::upper_bound(g.begin(), g.end(), s) - g.begin();
    if (i == g.size()) return state_at(sol, g.size() - 1);
    if (i == 0) i = 1;
    const double a = g[i - 1], b = g[i], h = b - a, t = (s - a) / h;
    const State ya = state_at(sol, i - 1), yb = state_at(sol, i);
    const State da = rhs(a, ya), db = rhs(b, yb);
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    State out;
    for (int k = 0; k < 5; ++k) out[k] = h00 * ya[k] + h10 * h * da[k] + h01 * yb[k] + h11 * h * db[k];
    return out;
}

double cdf_from(const State& y, int beta) {
    const double F2 = std::exp(-y[2]);
    return beta == 2 ? F2 : std::sqrt(F2) * std::exp(-0.5 * y[4]);
}

double density_from(const State& y, int beta) {
    const double F = cdf_from(y, beta);
    return beta == 2 ? y[3] * F : 0.5 * F * (y[3] + y[0]);
}

void check_beta(int beta) {
    if (beta != 1 && beta != 2) fail(ErrorKind::DomainError, "beta must be 1 or 2");
}

}  // namespace

PainleveSolution solve_painleve2(double s_min, double s_max, double tol, double step) {
    if (!(s_max >= 6.0) || !(s_min <= -8.0) || !(tol >= 1e-12) || !(step > 0.0))
        fail(ErrorKind::DomainError, "solve_painleve2 needs s_max >= 6, s_min <= -8, tol >= 1e-12");
    const double ai = airy(s_max), aip = airy_prime(s_max);
    boost::math::quadrature::exp_sinh<double> es;
    const double mu0 = es.integrate([&](double t) { return airy(s_max + t); }, 1e-14);
    State y{ai, aip, (2.0 * s_max * s_max * ai * ai - 2.0 * s_max * aip * aip - ai * aip) / 3.0,
            aip * aip - s_max * ai * ai, mu0};

    const int n = static_cast<int>(std::ceil((s_max - s_min) / step));
    std::vector<double> times(n + 1);
    for (int i = 0; i <= n; ++i) times[i] = s_max - (s_max - s_min) * i / n;

    // The solution is unstable towards negative s (perturbations grow like
    // exp(2^{3/2}|s|^{3/2}/3)), so the state is carried in extended precision
    // with a local tolerance well under tol.
    using LState = std::array<long double, 5>;
    LState ly;
    std::copy(y.begin(), y.end(), ly.begin());
    std::vector<State> states;
    states.reserve(n + 1);
    namespace ode = boost::numeric::odeint;
    const long double rtol = std::min<long double>(tol, 1e-16L);
    auto stepper = ode::make_dense_output(rtol * 1e-3L, rtol,
                                          ode::runge_kutta_dopri5<LState, long double, LState, long double>());
    auto sys = [](const LState& x, LState& dx, long double s) {
        if (!(std::abs(x[0]) <= 1e6L))
            fail(ErrorKind::BlowUp, "|q| above 1e6 near s=" + std::to_string(static_cast<double>(s)));
        const long double q = x[0];
        dx = {x[1], s * q + 2.0L * q * q * q, -x[3], -q * q, -q};
    };
    std::vector<long double> ltimes(times.begin(), times.end());
    ode::integrate_times(stepper, sys, ly, ltimes.begin(), ltimes.end(), static_cast<long double>(-step),
                         [&](const LState& x, long double s) {
                             if (!(x[0] > 0.0L))
                                 fail(ErrorKind::BlowUp, "q left the positive branch at s=" +
                                                             std::to_string(static_cast<double>(s)));
                             State d;
                             std::copy(x.begin(), x.end(), d.begin());
                             states.push_back(d);
                         });

    PainleveSolution sol;
    for (int i = n; i >= 0; --i) {
        const State& x = states[i];
        sol.s_grid.push_back(times[i]);
        sol.q.push_back(x[0]);
        sol.q_prime.push_back(x[1]);
        sol.I2.push_back(x[2]);
        sol.J.push_back(x[3]);
        sol.mu.push_back(x[4]);
    }
    return sol;
}

double tw_cdf(const PainleveSolution& sol, double s, int beta) {
    check_beta(beta);
    return std::clamp(cdf_from(interpolate(sol, s), beta), 0.0, 1.0);
}

double tw_density(const PainleveSolution& sol, double s, int beta) {
    check_beta(beta);
    return std::max(density_from(interpolate(sol, s), beta), 0.0);
}

Cumulants tw_cumulants(const PainleveSolution& sol, int beta) {
    check_beta(beta);
    const std::size_t n = sol.s_grid.size();
    if (n < 4) fail(ErrorKind::InsufficientGrid, "Painleve grid too short");
    const double lo = cdf_from(state_at(sol, 0), beta), hi = cdf_from(state_at(sol, n - 1), beta);
    if (lo > 1e-9 || 1.0 - hi > 1e-9)
        fail(ErrorKind::InsufficientGrid, "grid misses " + std::to_string(lo + 1.0 - hi) + " of the mass");

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = density_from(state_at(sol, i), beta);
    // composite Simpson, 3/8 rule on the last three intervals if the count is odd
    auto integrate = [&](auto g) {
        const std::size_t m = n - 1;
        const std::size_t even = m % 2 ? m - 3 : m;
        double v = 0.0;
        for (std::size_t i = 0; i + 2 <= even; i += 2) {
            const double h = sol.s_grid[i + 2] - sol.s_grid[i];
            v += h / 6.0 * (g(i) + 4.0 * g(i + 1) + g(i + 2));
        }
        if (even != m) {
            const std::size_t i = even;
            const double h = (sol.s_grid[i + 3] - sol.s_grid[i]) / 3.0;
            v += 3.0 * h / 8.0 * (g(i) + 3.0 * g(i + 1) + 3.0 * g(i + 2) + g(i + 3));
        }
        return v;
    };
    const auto& s = sol.s_grid;
    const double m0 = integrate([&](std::size_t i) { return f[i]; });
    const double mean = integrate([&](std::size_t i) { return s[i] * f[i]; }) / m0;
    auto central = [&](int p) {
        return integrate([&](std::size_t i) { return std::pow(s[i] - mean, p) * f[i]; }) / m0;
    };
    const double var = central(2);
    Cumulants c;
    c.mean = mean;
    c.std_dev = std::sqrt(var);
    c.skewness = central(3) / std::pow(var, 1.5);
    c.excess_kurtosis = central(4) / (var * var) - 3.0;
    return c;
}

EdgeScaling edge_scaling(const EnsembleSpec& spec) {
    validate(spec);
    const double N = spec.N;
    if (spec.gaussian()) return {std::sqrt(2.0 * N), 1.0 / (std::sqrt(2.0) * std::pow(N, 1.0 / 6.0))};
    const double xp = mp_edges(spec.N, spec.alpha).hi;
    return {xp, std::pow(xp, 2.0 / 3.0) * std::pow(N * spec.M(), -1.0 / 6.0)};
}

const PainleveSolution& default_painleve() {
    static const PainleveSolution sol = solve_painleve2();
    return sol;
}

}  // namespace eigenstrata

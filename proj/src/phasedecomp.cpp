#include "eigenstrata/phasedecomp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "parallel.hpp"

namespace eigenstrata {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> zeros_for(const EnsembleSpec& spec, int n) {
    return spec.gaussian() ? oscillator_zeros(n) : laguerre_zeros(n, spec.alpha);
}

std::vector<WaveState> states_for(const EnsembleSpec& spec, int n, const std::vector<double>& xs) {
    if (spec.gaussian()) return oscillator_second(n, xs);
    std::vector<WaveState> out(xs.size());
    detail::parallel_for(xs.size(), [&](std::size_t i) { out[i] = laguerre_second(n, spec.alpha, xs[i]); });
    return out;
}

}  // namespace

Band split_band(const EnsembleSpec& spec) {
    if (spec.gaussian()) return {0.0, 2.0 * std::sqrt(2.0 * spec.N + 1.0)};
    const double c = std::sqrt(static_cast<double>(spec.M()) / spec.N);
    const double xp = spec.N * (c + 1.0) * (c + 1.0);
    return {1e-3, 2.0 * xp};
}

PhaseAmplitude phase_from_state(const EnsembleSpec& spec, int n, double x, const WaveState& w,
                                const std::vector<double>& zeros) {
    PhaseAmplitude p;
    const double A2 = w.value * w.value + w.tilde_value * w.tilde_value;
    p.A = std::sqrt(A2);
    p.A_prime = (w.value * w.derivative + w.tilde_value * w.tilde_derivative) / p.A;
    const long m = std::upper_bound(zeros.begin(), zeros.end(), x) - zeros.begin();
    double centre;
    if (spec.gaussian()) {
        p.theta_prime = kOscillatorWronskian / A2;
        centre = -n * kPi + m * kPi;  // interval (-n pi - pi/2 + m pi, ... + pi)
    } else {
        p.theta_prime = kLaguerreScaledWronskian / (x * A2);
        centre = m * kPi;  // interval (-pi/2 + m pi, pi/2 + m pi)
    }
    const double raw = std::atan2(w.tilde_value, w.value);
    p.theta = raw + 2.0 * kPi * std::round((centre - raw) / (2.0 * kPi));
    return p;
}

std::vector<PhaseAmplitude> phase_amplitude(const EnsembleSpec& spec, int n,
                                            const std::vector<double>& x_grid, bool check_grid) {
    validate(spec);
    if (!spec.gaussian() && spec.alpha < 2) fail(ErrorKind::AlphaOutOfRange, "phase form needs alpha >= 2");
    auto zeros = zeros_for(spec, n);
    auto st = states_for(spec, n, x_grid);
    std::vector<PhaseAmplitude> out(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) out[i] = phase_from_state(spec, n, x_grid[i], st[i], zeros);
    if (check_grid) {
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (x_grid[i] <= x_grid[i - 1]) fail(ErrorKind::GridTooCoarse, "grid must be increasing");
            if (std::abs(out[i].theta - out[i - 1].theta) >= 0.5 * kPi)
                fail(ErrorKind::GridTooCoarse, "phase step above pi/2 near x=" + std::to_string(x_grid[i]));
        }
    }
    return out;
}

namespace {

void check_band(const EnsembleSpec& spec, double x) {
    Band b = split_band(spec);
    const bool ok = spec.gaussian() ? std::abs(x) <= b.hi : (x >= b.lo && x <= b.hi);
    if (!ok) fail(ErrorKind::DomainError, "x=" + std::to_string(x) + " outside the split band");
}

std::vector<GoeAuxiliary> goe_aux(int N, const std::vector<double>& xs, const std::vector<PhaseAmplitude>& pN) {
    auto ext = oscillator_second_ext(N, xs);
    const double shift = goe_integral_shift(N);
    std::vector<GoeAuxiliary> out(xs.size());
    detail::parallel_for(xs.size(), [&](std::size_t i) {
        GoeAuxiliary g;
        g.I = gue_integral_term(N, xs[i]) + shift;
        g.I_tilde = ext.tilde_integral[i];
        g.theta_N = pN[i].theta;
        const double c = std::cos(g.theta_N), s = std::sin(g.theta_N);
        g.Q1 = g.I * c + g.I_tilde * s;
        g.Q2 = g.I * s - g.I_tilde * c;
        out[i] = g;
    });
    return out;
}

std::vector<DensitySplit> split_impl(const EnsembleSpec& spec, const std::vector<double>& xs, bool with_gamma) {
    validate(spec);
    const int N = spec.N;
    if (N < 2) fail(ErrorKind::InvalidSpec, "split needs N >= 2");
    for (double x : xs) check_band(spec, x);
    auto pN = phase_amplitude(spec, N, xs);
    auto pM = phase_amplitude(spec, N - 1, xs);
    std::vector<GoeAuxiliary> aux;
    const bool goe = spec.kind == Ensemble::GOE && with_gamma;
    if (goe) aux = goe_aux(N, xs, pN);

    std::vector<DensitySplit> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto& a = pN[i];
        const auto& b = pM[i];
        const double D = a.A_prime / a.A - b.A_prime / b.A;
        const double E = a.theta_prime - b.theta_prime;
        const double S = a.theta_prime + b.theta_prime;
        const double dm = a.theta - b.theta, sm = a.theta + b.theta;
        DensitySplit d;
        d.phase_sum = sm;
        if (spec.gaussian()) {
            const double pre = std::sqrt(N / 8.0) * a.A * b.A;
            d.rho_s = pre * (D * std::cos(dm) - S * std::sin(dm));
            double Dx = D, Ex = E;
            if (goe) {
                const auto& g = aux[i];
                d.rho_s += std::sqrt(N / 8.0) * b.A * (g.Q1 * std::cos(dm) + g.Q2 * std::sin(dm));
                Dx += g.Q1 / a.A;
                Ex -= g.Q2 / a.A;
            }
            d.B = pre * std::hypot(Dx, Ex);
            d.theta_shift = std::atan2(Ex, Dx);
            if (d.theta_shift < -0.5 * kPi) d.theta_shift += 2.0 * kPi;
            d.rho_f = d.B * std::cos(sm + d.theta_shift);
        } else {
            const double al = spec.alpha;
            const double pre = std::sqrt(N * (N + al) / 4.0) * a.A * b.A;
            d.rho_s = pre * (-D * std::cos(dm) + S * std::sin(dm));
            d.B = pre * std::hypot(D, E);
            d.theta_shift = std::atan2(-E, D);
            if (d.theta_shift > 0.5 * kPi) d.theta_shift -= 2.0 * kPi;
            d.rho_f = -d.B * std::cos(sm - d.theta_shift);
        }
        out[i] = d;
    }
    return out;
}

}  // namespace

std::vector<DensitySplit> split_density_grid(const EnsembleSpec& spec, const std::vector<double>& x_grid) {
    return split_impl(spec, x_grid, true);
}

std::vector<DensitySplit> split_density_grid_no_gamma(const EnsembleSpec& spec, const std::vector<double>& x_grid) {
    return split_impl(spec, x_grid, false);
}

DensitySplit split_density(const EnsembleSpec& spec, double x) { return split_impl(spec, {x}, true)[0]; }

std::vector<GoeAuxiliary> goe_q_functions_grid(int N, const std::vector<double>& x_grid) {
    if (N < 2) fail(ErrorKind::InvalidSpec, "Q functions need N >= 2");
    auto pN = phase_amplitude(EnsembleSpec::goe(N), N, x_grid);
    return goe_aux(N, x_grid, pN);
}

GoeAuxiliary goe_q_functions(int N, double x) { return goe_q_functions_grid(N, {x})[0]; }

}  // namespace eigenstrata

#include "eigenstrata/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"

namespace eigenstrata {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

// (1/4pi)[-4 sqrt(a b) atan(...) + (a+b) acos(...) + 2 sqrt((b-x)(x-a))], counts from a to x
double laguerre_type_count(double a, double b, double x) {
    if (x <= a) return 0.0;
    if (x >= b) x = b;
    const double r = std::sqrt(std::max(0.0, (b - x) * (x - a)));
    const double at = std::atan2(std::sqrt(std::max(0.0, b * (x - a))), std::sqrt(std::max(0.0, a * (b - x))));
    return (-4.0 * std::sqrt(std::max(0.0, a * b)) * at + (a + b) * std::acos(clamp1((a + b - 2.0 * x) / (b - a))) +
            2.0 * r) /
           (4.0 * kPi);
}

}  // namespace

ClassicalRegion oscillator_region(int n) {
    const double e = 2.0 * n + 1.0, r = std::sqrt(e);
    return {-r, r, [e](double x) { return std::sqrt(std::max(0.0, e - x * x)); }};
}

ClassicalRegion laguerre_region(int n, int alpha) {
    if (alpha < 1) fail(ErrorKind::DomainError, "Laguerre region needs alpha >= 1");
    const double b = 2.0 * n + alpha + 1.0;
    // Langer form: alpha^2 where the plain reduction has alpha^2 - 1
    const double d = std::sqrt(b * b - static_cast<double>(alpha) * alpha);
    const double x1 = b - d, x2 = b + d;
    return {x1, x2, [x1, x2](double x) { return std::sqrt(std::max(0.0, (x - x1) * (x2 - x))) / (2.0 * x); }};
}

double oscillator_action(int n, double x) {
    const double e = 2.0 * n + 1.0, r = std::sqrt(e);
    const double u = clamp1(x / r);
    return e / (2.0 * kPi) * (std::asin(u) + u * std::sqrt(std::max(0.0, 1.0 - u * u)));
}

double laguerre_action(int n, int alpha, double x) {
    auto reg = laguerre_region(n, alpha);
    return laguerre_type_count(reg.x_lo, reg.x_hi, x);
}

double wkb_oscillator_amplitude(int n, double x) {
    return std::sqrt(2.0 / kPi) * std::pow(std::max(0.0, 2.0 * n + 1.0 - x * x), -0.25);
}

double wkb_wavefunction(const ClassicalRegion& region, int n, double x, WaveKind kind, int alpha) {
    if (!(x > region.x_lo && x < region.x_hi))
        fail(ErrorKind::TurningPointProximity, "x outside the classical region");
    const double p = region.momentum(x);
    const double lambda = 2.0 * kPi / p;
    if (x - region.x_lo < lambda || region.x_hi - x < lambda)
        fail(ErrorKind::TurningPointProximity, "x within one wavelength of a turning point");
    if (kind == WaveKind::Oscillator)
        return wkb_oscillator_amplitude(n, x) * std::cos((oscillator_action(n, x) - 0.5 * n) * kPi);
    const double amp = std::sqrt(2.0 / kPi) * std::pow((region.x_hi - x) * (x - region.x_lo), -0.25);
    return amp * std::cos(kPi * laguerre_action(n, alpha, x) - 0.25 * kPi);
}

double semicircle(int N, double x) {
    const double r2 = 2.0 * N - x * x;
    return r2 > 0 ? std::sqrt(r2) / kPi : 0.0;
}

MpEdges mp_edges(int N, int alpha) {
    const double c = std::sqrt(static_cast<double>(N + alpha) / N);
    return {N * (c - 1.0) * (c - 1.0), N * (c + 1.0) * (c + 1.0)};
}

double marchenko_pastur(int N, int alpha, double x) {
    if (!(x > 0.0)) return 0.0;
    auto e = mp_edges(N, alpha);
    const double v = (e.hi - x) * (x - e.lo);
    return v > 0 ? std::sqrt(v) / (2.0 * kPi * x) : 0.0;
}

Support leading_support(const EnsembleSpec& spec) {
    if (spec.gaussian()) {
        const double r = std::sqrt(2.0 * spec.N);
        return {-r, r};
    }
    auto e = mp_edges(spec.N, spec.alpha);
    return {e.lo, e.hi};
}

double leading_density(const EnsembleSpec& spec, double x) {
    return spec.gaussian() ? semicircle(spec.N, x) : marchenko_pastur(spec.N, spec.alpha, x);
}

double counting_xi(const EnsembleSpec& spec, double x) {
    validate(spec);
    const double N = spec.N;
    if (spec.gaussian()) {
        const double r = std::sqrt(2.0 * N);
        if (x <= -r) return -0.5 * N;
        if (x >= r) return 0.5 * N;
        const double u = x / r;
        return N / kPi * (std::asin(u) + u * std::sqrt(1.0 - u * u));
    }
    auto e = mp_edges(spec.N, spec.alpha);
    if (x <= e.lo) return 0.0;
    if (x >= e.hi) return N;
    return laguerre_type_count(e.lo, e.hi, x);
}

double xi_inverse(const EnsembleSpec& spec, double xi) {
    auto s = leading_support(spec);
    double a = s.lo, b = s.hi;
    for (int i = 0; i < 200 && b - a > 1e-15 * (1.0 + std::abs(b)); ++i) {
        const double m = 0.5 * (a + b);
        if (counting_xi(spec, m) < xi)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

namespace {

void refuse_edge(const EnsembleSpec& spec, double x, double lead, double envelope) {
    if (!(lead > 0.0) || envelope > 0.5 * lead)
        fail(ErrorKind::EdgeSingularity,
             std::string(to_string(spec.kind)) + " asymptotic form diverges near x=" + std::to_string(x));
}

}  // namespace

double asymptotic_density(const EnsembleSpec& spec, double x) {
    validate(spec);
    const double N = spec.N;
    const double lead = leading_density(spec, x);
    const double xi = counting_xi(spec, x);
    switch (spec.kind) {
    case Ensemble::GUE: {
        const double amp = std::sqrt(2.0 * N) / (2.0 * kPi * kPi * kPi * lead * lead);
        refuse_edge(spec, x, lead, amp);
        return lead - amp * std::cos((N - 2.0 * xi) * kPi);
    }
    case Ensemble::GOE: {
        const double s2n = std::sqrt(2.0 * N);
        const double smooth = 1.0 / (2.0 * kPi * kPi * lead);
        const double a1 = s2n / (2.0 * std::pow(kPi, 5) * std::pow(lead, 4));
        const double a2 = 3.0 * x * s2n / (8.0 * std::pow(kPi, 6) * std::pow(lead, 5));
        refuse_edge(spec, x, lead, smooth + std::abs(a1) + std::abs(a2));
        const double ph = (2.0 * xi - 0.5 * N) * kPi;
        return lead - smooth + a1 * std::cos(ph) + a2 * std::sin(ph);
    }
    case Ensemble::Wishart: {
        auto e = mp_edges(spec.N, spec.alpha);
        const double amp = (e.hi - e.lo) / (16.0 * kPi * kPi * kPi * x * x * lead * lead);
        refuse_edge(spec, x, lead, amp);
        return lead - amp * std::cos(2.0 * kPi * xi);
    }
    }
    return 0.0;
}

double unfolded_density(const EnsembleSpec& spec, double x) {
    asymptotic_density(spec, x);  // same edge refusal
    return density(spec, x) / leading_density(spec, x);
}

}  // namespace eigenstrata

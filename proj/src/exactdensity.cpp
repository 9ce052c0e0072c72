#include "eigenstrata/exactdensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/specfn.hpp"

namespace eigenstrata {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

double gue_density(int N, double x) {
    auto a = oscillator_pair(N, x);      // phi_N, phi_{N-1}
    auto b = oscillator_pair(N - 1, x);  // phi_{N-1}, phi_{N-2}
    const double dN = -x * a.cur + std::sqrt(2.0 * N) * a.prev;
    const double dN1 = -x * b.cur + std::sqrt(2.0 * (N - 1)) * b.prev;
    return std::sqrt(0.5 * N) * (dN * a.prev - a.cur * dN1);
}

double wishart_density(int N, int alpha, double x) {
    if (!(x > 0.0)) fail(ErrorKind::DomainError, "Wishart density needs x > 0");
    auto a = laguerre_pair(N, alpha, x);      // psi_N, psi_{N-1}
    auto b = laguerre_pair(N - 1, alpha, x);  // psi_{N-1}, psi_{N-2}
    const double al = alpha;
    const double dN = (0.5 * (2.0 * N + al - x) * a.cur - std::sqrt(N * (N + al)) * a.prev) / x;
    const double dN1 =
        (0.5 * (2.0 * (N - 1) + al - x) * b.cur - std::sqrt((N - 1.0) * (N - 1.0 + al)) * b.prev) / x;
    return std::sqrt(N * (N + al)) * (a.cur * dN1 - a.prev * dN);
}

}  // namespace

double density(const EnsembleSpec& spec, double x) {
    validate(spec);
    switch (spec.kind) {
    case Ensemble::GUE: return gue_density(spec.N, x);
    case Ensemble::GOE: return gue_density(spec.N, x) + goe_gamma(spec.N, x);
    case Ensemble::Wishart: return wishart_density(spec.N, spec.alpha, x);
    }
    return 0.0;
}

double gue_kernel_sum(int N, double x) {
    double s = 0.0;
    for (int n = 0; n < N; ++n) {
        double p = oscillator_fn(n, x);
        s += p * p;
    }
    return s;
}

double gue_n2_density(double x) { return std::exp(-x * x) / kSqrtPi * (1.0 + 2.0 * x * x); }

double goe_n2_density(double x) {
    return std::exp(-x * x) / kSqrtPi +
           x / std::numbers::sqrt2 * std::exp(-0.5 * x * x) * std::erf(x / std::numbers::sqrt2);
}

// the smallest eigenvalue is the mirror image of the largest
double gue_n2_extreme(double x, Extreme which) {
    if (which == Extreme::Smallest) x = -x;
    const double e = std::exp(-x * x);
    return e / (2.0 * kSqrtPi) * ((1.0 + 2.0 * x * x) * std::erfc(-x) + 2.0 * x * e / kSqrtPi);
}

double goe_n2_extreme(double x, Extreme which) {
    if (which == Extreme::Smallest) x = -x;
    return std::numbers::sqrt2 * x * std::exp(-0.5 * x * x) / 4.0 * std::erfc(-x / std::numbers::sqrt2) +
           std::exp(-x * x) / (2.0 * kSqrtPi);
}

double gue_integral_term(int N, double x) {
    if (N < 1) fail(ErrorKind::DomainError, "N must be positive");
    if (x == 0.0) return 0.0;
    // fixed panels shorter than half a wavelength; the adaptive driver
    // misreports its error on very short intervals
    const int m = std::max(1, static_cast<int>(std::ceil(std::abs(x) / 0.5)));
    const double w = x / m;
    double v = 0.0, err = 0.0;
    for (int i = 0; i < m; ++i) {
        double e = 0.0;
        v += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [N](double t) { return oscillator_fn(N, t); }, i * w, (i + 1) * w, 0, 0.0, &e);
        err += e;
    }
    if (!std::isfinite(v) || err > 1e-10) fail(ErrorKind::QuadratureNotConverged, "I_N quadrature");
    return v;
}

double gue_integral_series(int N, double x) {
    const double p2 = 2.0 * N + 1.0 - x * x;
    auto p = oscillator_pair(N, x);
    const double d = -x * p.cur + std::sqrt(2.0 * N) * p.prev;
    return -d / p2 + 2.0 * x * p.cur / (p2 * p2);
}

double oscillator_total_integral(int n) {
    if (n % 2) return 0.0;
    // sqrt(2) pi^{1/4} sqrt((2m)!)/(2^m m!), built by ratios
    double c = std::numbers::sqrt2 * std::pow(std::numbers::pi, 0.25);
    for (int m = 0; 2 * m < n; ++m) c *= std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
    return c;
}

double oscillator_half_integral(int n) {
    if (n % 2 == 0) return 0.5 * oscillator_total_integral(n);
    // integrate phi_k' = sqrt(k/2) phi_{k-1} - sqrt((k+1)/2) phi_{k+1} over (0, inf)
    double h = std::numbers::sqrt2 * std::pow(std::numbers::pi, -0.25);  // h_1
    for (int k = 2; k < n; k += 2) {
        h = (std::sqrt(0.5 * k) * h + oscillator_fn(k, 0.0)) / std::sqrt(0.5 * (k + 1));
    }
    return h;
}

double goe_integral_shift(int N) {
    if (N % 2 == 0) return 0.0;
    return -oscillator_half_integral(N) + 1.0 / (std::sqrt(0.5 * N) * oscillator_total_integral(N - 1));
}

double goe_gamma(int N, double x) {
    const double phim = oscillator_fn(N - 1, x);
    return std::sqrt(0.5 * N) * phim * (gue_integral_term(N, x) + goe_integral_shift(N));
}

}  // namespace eigenstrata

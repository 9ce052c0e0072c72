#include "eigenstrata/specfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/tridiag.hpp"

namespace eigenstrata {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBig = 1e200;
constexpr double kLogBig = 460.51701859880913680;  // ln(1e200)

// value * exp(logscale) without intermediate overflow
double unscale(double v, double logscale) {
    if (v == 0.0) return 0.0;
    return std::copysign(std::exp(std::log(std::abs(v)) + logscale), v);
}

}  // namespace

// ---------------------------------------------------------------------------
// oscillator functions

OscPair oscillator_pair(int n, double x) {
    const double c0 = std::pow(kPi, -0.25);
    double s = -0.5 * x * x;
    double p0 = c0;
    if (n == 0) return {unscale(p0, s), 0.0};
    double p1 = std::numbers::sqrt2 * x * p0;
    for (int k = 2; k <= n; ++k) {
        double p2 = std::sqrt(2.0 / k) * x * p1 - std::sqrt((k - 1.0) / k) * p0;
        p0 = p1;
        p1 = p2;
        if (std::abs(p1) > kBig) {
            p0 /= kBig;
            p1 /= kBig;
            s += kLogBig;
        }
    }
    return {unscale(p1, s), unscale(p0, s)};
}

double oscillator_fn(int n, double x) { return oscillator_pair(n, x).cur; }

double oscillator_derivative(int n, double x) {
    auto p = oscillator_pair(n, x);
    return -x * p.cur + std::sqrt(2.0 * n) * p.prev;
}

namespace {

// phi_0 .. phi_n at x, underflowing to zero where tiny
std::vector<double> oscillator_all(int n, double x) {
    std::vector<double> out(n + 1);
    double s = -0.5 * x * x;
    double p0 = std::pow(kPi, -0.25);
    out[0] = unscale(p0, s);
    if (n == 0) return out;
    double p1 = std::numbers::sqrt2 * x * p0;
    out[1] = unscale(p1, s);
    for (int k = 2; k <= n; ++k) {
        double p2 = std::sqrt(2.0 / k) * x * p1 - std::sqrt((k - 1.0) / k) * p0;
        p0 = p1;
        p1 = p2;
        if (std::abs(p1) > kBig) {
            p0 /= kBig;
            p1 /= kBig;
            s += kLogBig;
        }
        out[k] = unscale(p1, s);
    }
    return out;
}

using State3 = std::array<double, 3>;

}  // namespace

OscillatorSecondExt oscillator_second_ext(int n, const std::vector<double>& x_grid, double rtol) {
    if (n < 0) fail(ErrorKind::DomainError, "negative oscillator index");
    const double phi0 = oscillator_fn(n, 0.0);
    const double dphi0 = oscillator_derivative(n, 0.0);
    State3 y{};
    if (n % 2 == 0) {
        if (std::abs(phi0) < 1e-300) fail(ErrorKind::DegenerateInitCondition, "phi_n(0) underflows");
        y = {0.0, 2.0 / (kPi * phi0), 0.0};
    } else {
        if (std::abs(dphi0) < 1e-300) fail(ErrorKind::DegenerateInitCondition, "phi_n'(0) underflows");
        y = {-2.0 / (kPi * dphi0), 0.0, 0.0};
    }
    const double itilde0 = -y[1] / (2.0 * n + 1.0);
    y[2] = itilde0;

    std::vector<double> ax;
    ax.reserve(x_grid.size() + 1);
    ax.push_back(0.0);
    for (double x : x_grid) ax.push_back(std::abs(x));
    std::sort(ax.begin(), ax.end());
    ax.erase(std::unique(ax.begin(), ax.end()), ax.end());

    std::vector<State3> sol(ax.size());
    const double e = 2.0 * n + 1.0;
    auto rhs = [e](const State3& s, State3& ds, double t) {
        ds[0] = s[1];
        ds[1] = (t * t - e) * s[0];
        ds[2] = s[0];
    };
    namespace ode = boost::numeric::odeint;
    if (ax.size() == 1) {
        sol[0] = y;
    } else {
        std::size_t idx = 0;
        auto stepper = ode::make_dense_output(rtol * 1e-3, rtol, ode::runge_kutta_dopri5<State3>());
        ode::integrate_times(stepper, rhs, y, ax.begin(), ax.end(), 1e-3,
                             [&](const State3& s, double) { sol[idx++] = s; });
    }

    OscillatorSecondExt out;
    out.states.resize(x_grid.size());
    out.tilde_integral.resize(x_grid.size());
    const double par = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        auto it = std::lower_bound(ax.begin(), ax.end(), std::abs(x));
        const State3& s = sol[static_cast<std::size_t>(it - ax.begin())];
        auto p = oscillator_pair(n, x);
        WaveState w;
        w.value = p.cur;
        w.derivative = -x * p.cur + std::sqrt(2.0 * n) * p.prev;
        if (x >= 0) {
            w.tilde_value = s[0];
            w.tilde_derivative = s[1];
            out.tilde_integral[i] = s[2];
        } else {
            w.tilde_value = -par * s[0];
            w.tilde_derivative = par * s[1];
            out.tilde_integral[i] = itilde0 + par * (s[2] - itilde0);
        }
        out.states[i] = w;
    }
    return out;
}

std::vector<WaveState> oscillator_second(int n, const std::vector<double>& x_grid) {
    return oscillator_second_ext(n, x_grid).states;
}

std::vector<double> oscillator_zeros(int n) {
    if (n <= 0) return {};
    std::vector<double> d(n, 0.0), e(n - 1);
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(k / 2.0);
    return sturm_eigenvalues(d, e, 1e-15 * std::sqrt(2.0 * n + 1.0));
}

// ---------------------------------------------------------------------------
// Laguerre functions

LagPair laguerre_pair(int n, int alpha, double x) {
    if (x < 0) fail(ErrorKind::DomainError, "Laguerre function needs x >= 0");
    const double a = alpha;
    if (x == 0.0) {
        if (alpha > 0) return {0.0, 0.0};
        return {1.0, n > 0 ? 1.0 : 0.0};
    }
    double s = -0.5 * x + 0.5 * a * std::log(x) - 0.5 * std::lgamma(a + 1.0);
    double p0 = 1.0;
    if (n == 0) return {unscale(p0, s), 0.0};
    double p1 = (1.0 + a - x) * p0 / std::sqrt(1.0 + a);
    for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + a + 1.0 - x) * p1 - std::sqrt(k * (k + a)) * p0) /
                    std::sqrt((k + 1.0) * (k + 1.0 + a));
        p0 = p1;
        p1 = p2;
        if (std::abs(p1) > kBig) {
            p0 /= kBig;
            p1 /= kBig;
            s += kLogBig;
        }
    }
    return {unscale(p1, s), unscale(p0, s)};
}

double laguerre_fn(int n, int alpha, double x) { return laguerre_pair(n, alpha, x).cur; }

double laguerre_derivative(int n, int alpha, double x) {
    if (x == 0.0) {
        if (alpha == 0) return -0.5 - n;
        if (alpha == 2) return 0.5 * std::sqrt((n + 1.0) * (n + 2.0));
        if (alpha > 2) return 0.0;
        fail(ErrorKind::DomainError, "psi' is singular at 0 for alpha = 1");
    }
    auto p = laguerre_pair(n, alpha, x);
    return (0.5 * (2.0 * n + alpha - x) * p.cur - std::sqrt(n * (n + static_cast<double>(alpha))) * p.prev) / x;
}

namespace {

struct LagIntegrals {
    double re_g = 0.0, im_g = 0.0, im_gd = 0.0, h = 0.0, hd = 0.0;
};

void check_quad(double val, double err, double l1, const char* what) {
    if (!std::isfinite(val) || err > 1e-9 * std::max(l1, 1e-300) + 1e-14)
        fail(ErrorKind::QuadratureNotConverged, what);
}

LagIntegrals laguerre_integrals(int n, int alpha, double x, bool want_re) {
    using cd = std::complex<double>;
    const cd I(0.0, 1.0);
    const double a = alpha;
    auto f = [&](cd u) -> cd {
        return std::exp(static_cast<double>(n) * std::log(1.0 - I * u) -
                        (n + a + 1.0) * std::log(1.0 + I * u) + I * x * u / 2.0);
    };
    // real axis up to R, then straight up from R; R^2 >= 4n/x keeps the
    // algebraic growth on the vertical leg below the exp(-x t/2) decay
    const double R = std::max(4.0, std::sqrt(4.0 * (n + 1.0) / x) + 1.0);
    auto seg = [&](cd u, bool deriv) { return deriv ? f(u) * (0.5 * I * u) : f(u); };
    auto leg = [&](double t, bool deriv) { return I * seg(cd(R, t), deriv); };

    namespace bq = boost::math::quadrature;
    const double tol = 1e-12;
    auto gk = [&](auto fn) {
        double err = 0, l1 = 0;
        double v = bq::gauss_kronrod<double, 31>::integrate(fn, 0.0, R, 15, tol, &err, &l1);
        check_quad(v, err, l1, "real-axis segment");
        return v;
    };
    bq::exp_sinh<double> es;
    auto tail = [&](auto fn) {
        double err = 0, l1 = 0;
        double v = es.integrate(fn, tol, &err, &l1);
        check_quad(v, err, l1, "vertical leg");
        return v;
    };

    LagIntegrals out;
    out.im_g = gk([&](double u) { return seg(cd(u, 0.0), false).imag(); }) +
               tail([&](double t) { return leg(t, false).imag(); });
    out.im_gd = gk([&](double u) { return seg(cd(u, 0.0), true).imag(); }) +
                tail([&](double t) { return leg(t, true).imag(); });
    if (want_re)
        out.re_g = gk([&](double u) { return seg(cd(u, 0.0), false).real(); }) +
                   tail([&](double t) { return leg(t, false).real(); });

    const double m = 2.0 * n + a + 1.0;
    auto h = [&](double t) {
        const double lc = t + std::log1p(std::exp(-2.0 * t)) - std::numbers::ln2;
        return std::exp((a - 1.0) * lc + 0.5 * x * std::tanh(t) - m * t);
    };
    out.h = tail(h);
    out.hd = tail([&](double t) { return h(t) * 0.5 * std::tanh(t); });
    return out;
}

double laguerre_prefactor(int n, int alpha, double x) {
    const double a = alpha;
    double lk = a * std::numbers::ln2 - std::log(kPi) - 0.5 * a * std::log(x) +
                0.5 * (std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0));
    return (n % 2 ? -1.0 : 1.0) * std::exp(lk);
}

}  // namespace

WaveState laguerre_second(int n, int alpha, double x) {
    if (alpha <= 1) fail(ErrorKind::AlphaOutOfRange, "second Laguerre solution needs alpha >= 2");
    if (!(x > 0.0)) fail(ErrorKind::DomainError, "second Laguerre solution needs x > 0");
    auto I = laguerre_integrals(n, alpha, x, false);
    const double K = laguerre_prefactor(n, alpha, x);
    auto p = laguerre_pair(n, alpha, x);
    WaveState w;
    w.value = p.cur;
    w.derivative = (0.5 * (2.0 * n + alpha - x) * p.cur - std::sqrt(n * (n + static_cast<double>(alpha))) * p.prev) / x;
    w.tilde_value = K * (I.im_g + I.h);
    w.tilde_derivative = -(alpha / (2.0 * x)) * w.tilde_value + K * (I.im_gd + I.hd);
    return w;
}

double laguerre_from_integral(int n, int alpha, double x) {
    if (alpha <= 1) fail(ErrorKind::AlphaOutOfRange, "integral representation needs alpha >= 2");
    if (!(x > 0.0)) fail(ErrorKind::DomainError, "integral representation needs x > 0");
    auto I = laguerre_integrals(n, alpha, x, true);
    return laguerre_prefactor(n, alpha, x) * I.re_g;
}

std::vector<double> laguerre_zeros(int n, int alpha) {
    if (n <= 0) return {};
    std::vector<double> d(n), e(n - 1);
    for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(k * (k + static_cast<double>(alpha)));
    return sturm_eigenvalues(d, e, 1e-15 * (4.0 * n + 2.0 * alpha + 2.0));
}

// ---------------------------------------------------------------------------

double counting_fn_gue(int N, double x) {
    if (N < 1) fail(ErrorKind::DomainError, "N must be positive");
    auto phi = oscillator_all(N, x);
    double jm2 = 0.0, jm1 = 0.5 * erf(x);
    double total = jm1;
    for (int n = 1; n < N; ++n) {
        double j = -(x / n) * phi[n - 1] * phi[n - 1] + jm1 / n + ((n - 1.0) / n) * jm2;
        total += j;
        jm2 = jm1;
        jm1 = j;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Airy: Maclaurin series on [-7, 5], asymptotic expansions outside

namespace {

constexpr double kAi0 = 0.35502805388781723926;   // Ai(0)
constexpr double kAip0 = 0.25881940379280679840;  // -Ai'(0)

void airy_series(double x, double& ai, double& aip) {
    const double x3 = x * x * x;
    // f = sum a_k x^{3k}, g = sum b_k x^{3k+1}
    double a = 1.0, b = x;
    double f = 1.0, g = x;
    double fp = 0.0, gp = 1.0;
    for (int k = 0; k < 400; ++k) {
        double an = a * x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        double bn = b * x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        // derivatives of the new terms: d/dx of an = 3(k+1) an / x, d/dx of bn = (3k+4) bn / x
        double dan = (x != 0.0) ? 3.0 * (k + 1) * an / x : 0.0;
        double dbn = (x != 0.0) ? (3.0 * k + 4.0) * bn / x : 0.0;
        f += an;
        g += bn;
        fp += dan;
        gp += dbn;
        a = an;
        b = bn;
        double scale = std::abs(f) + std::abs(g) + std::abs(fp) + std::abs(gp);
        if (std::abs(an) + std::abs(bn) + std::abs(dan) + std::abs(dbn) < 1e-18 * scale && k > 2) break;
    }
    ai = kAi0 * f - kAip0 * g;
    aip = kAi0 * fp - kAip0 * gp;
}

// u_k and v_k coefficients of the Airy asymptotic series
struct AiryCoef {
    std::array<double, 40> u{}, v{};
    AiryCoef() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 0; k + 1 < 40; ++k) {
            u[k + 1] = u[k] * (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0) /
                       (216.0 * (k + 1.0) * (2.0 * k + 1.0));
            v[k + 1] = -(6.0 * k + 7.0) / (6.0 * k + 5.0) * u[k + 1];
        }
    }
};

const AiryCoef& airy_coef() {
    static const AiryCoef c;
    return c;
}

// sum_k (-1)^k c_{start+2k} z^{-(start+2k)} (step 2) or all k (step 1), truncated at the smallest term
double asym_sum(const std::array<double, 40>& c, double z, int start, int step) {
    double sum = 0.0, last = INFINITY;
    int sign = 1;
    for (int k = start; k < 40; k += step) {
        double t = c[k] / std::pow(z, k);
        if (std::abs(t) > last) break;
        sum += sign * t;
        last = std::abs(t);
        if (last < 1e-18 * std::abs(sum)) break;
        sign = -sign;
    }
    return sum;
}

void airy_asym(double x, double& ai, double& aip) {
    const auto& c = airy_coef();
    const double sp = std::sqrt(kPi);
    if (x > 0) {
        const double z = 2.0 / 3.0 * x * std::sqrt(x);
        const double e = std::exp(-z);
        const double q = std::pow(x, 0.25);
        ai = e / (2.0 * sp * q) * asym_sum(c.u, z, 0, 1);
        aip = -q * e / (2.0 * sp) * asym_sum(c.v, z, 0, 1);
    } else {
        const double y = -x;
        const double z = 2.0 / 3.0 * y * std::sqrt(y);
        const double q = std::pow(y, 0.25);
        const double cm = std::cos(z - kPi / 4.0), sm = std::sin(z - kPi / 4.0);
        ai = (cm * asym_sum(c.u, z, 0, 2) + sm * asym_sum(c.u, z, 1, 2)) / (sp * q);
        aip = q / sp * (sm * asym_sum(c.v, z, 0, 2) - cm * asym_sum(c.v, z, 1, 2));
    }
}

void airy_both(double x, double& ai, double& aip) {
    if (x >= -7.0 && x <= 5.0)
        airy_series(x, ai, aip);
    else
        airy_asym(x, ai, aip);
}

}  // namespace

double airy(double x) {
    double a, ap;
    airy_both(x, a, ap);
    return a;
}

double airy_prime(double x) {
    double a, ap;
    airy_both(x, a, ap);
    return ap;
}

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

}  // namespace eigenstrata

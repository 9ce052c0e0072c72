#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/specfn.hpp"

using namespace eigenstrata;
using boost::math::quadrature::gauss_kronrod;

namespace {
double integrate(auto f, double a, double b) { return gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-11); }
}  // namespace

TEST_CASE("leading densities integrate to N") {
    CHECK(integrate([](double x) { return semicircle(20, x); }, -std::sqrt(40.0), std::sqrt(40.0)) ==
          doctest::Approx(20.0).epsilon(1e-8));
    auto e = mp_edges(20, 4);
    CHECK(e.lo == doctest::Approx(std::pow(std::sqrt(20.0) - std::sqrt(24.0), 2)).epsilon(0.05));
    CHECK(integrate([](double x) { return marchenko_pastur(20, 4, x); }, e.lo, e.hi) == doctest::Approx(20.0).epsilon(1e-6));
}

TEST_CASE("counting coordinate and its inverse") {
    for (const auto& spec : {EnsembleSpec::gue(20), EnsembleSpec::wishart(20, 4)}) {
        auto s = leading_support(spec);
        for (double t : {0.1, 0.4, 0.77}) {
            const double x = s.lo + t * (s.hi - s.lo);
            CHECK(xi_inverse(spec, counting_xi(spec, x)) == doctest::Approx(x).epsilon(1e-10));
        }
    }
    CHECK(counting_xi(EnsembleSpec::gue(20), 0.0) == doctest::Approx(0.0).scale(1e-12));
}

TEST_CASE("WKB oscillator at the origin") {
    CHECK(std::abs(wkb_wavefunction(oscillator_region(20), 20, 0.0, WaveKind::Oscillator) - oscillator_fn(20, 0.0)) <
          0.03 * std::abs(oscillator_fn(20, 0.0)));
    CHECK(wkb_oscillator_amplitude(20, 0.0) == doctest::Approx(std::sqrt(2.0 / M_PI) * std::pow(41.0, -0.25)));
}

TEST_CASE("WKB oscillator away from the turning points") {
    const int n = 30;
    auto r = oscillator_region(n);
    for (double x : {0.0, 1.3, 4.0}) {
        CHECK(std::abs(wkb_wavefunction(r, n, x, WaveKind::Oscillator) - oscillator_fn(n, x)) <
              0.02 * wkb_oscillator_amplitude(n, x));
    }
    CHECK_THROWS_AS(wkb_wavefunction(r, n, r.x_hi - 0.01, WaveKind::Oscillator), Error);
}

TEST_CASE("WKB Laguerre inside the classical region") {
    {
        const int n = 15, a = 2;
        auto r = laguerre_region(n, a);
        const double x = 0.5 * (r.x_lo + r.x_hi);
        const double exact = laguerre_fn(n, a, x);
        CHECK(std::abs(wkb_wavefunction(r, n, x, WaveKind::Laguerre, a) - exact) < 0.05 * std::abs(exact));
    }
    const int n = 30, a = 4;
    auto r = laguerre_region(n, a);
    CHECK(r.momentum(r.x_lo) == doctest::Approx(0.0));
    CHECK(laguerre_action(n, a, r.x_hi) == doctest::Approx(n + 0.5).epsilon(1e-10));
    for (double t : {0.2, 0.5, 0.8}) {
        const double x = r.x_lo + t * (r.x_hi - r.x_lo);
        const double env = std::sqrt(2.0 / M_PI) * std::pow((r.x_hi - x) * (x - r.x_lo), -0.25);
        CHECK(std::abs(wkb_wavefunction(r, n, x, WaveKind::Laguerre, a) - laguerre_fn(n, a, x)) < 0.05 * env);
    }
}

TEST_CASE("oscillator action counts zeros") {
    const int n = 15;
    auto z = oscillator_zeros(n);
    // about half the zeros lie on each side of the origin
    CHECK(oscillator_action(n, z.back()) == doctest::Approx(n / 2.0).epsilon(0.1));
}

TEST_CASE("asymptotic density is close to the exact density in the bulk") {
    const auto gue = EnsembleSpec::gue(20);
    for (double x : {0.0, 1.7, -3.2})
        CHECK(std::abs(asymptotic_density(gue, x) - density(gue, x)) < 0.03 * leading_density(gue, x));
    const auto w = EnsembleSpec::wishart(20, 4);
    for (double x : {20.0, 45.0})
        CHECK(std::abs(asymptotic_density(w, x) - density(w, x)) < 0.05 * leading_density(w, x));
    CHECK(unfolded_density(gue, 0.0) == doctest::Approx(density(gue, 0.0) / semicircle(20, 0.0)));
}

TEST_CASE("edge singularity is reported") {
    const auto gue = EnsembleSpec::gue(20);
    CHECK_THROWS_AS(asymptotic_density(gue, std::sqrt(40.0) - 1e-3), Error);
}

TEST_CASE("semicircle and Marchenko-Pastur spot values") {
    CHECK(semicircle(20, 0.0) == doctest::Approx(std::sqrt(40.0) / M_PI));
    CHECK(semicircle(20, std::sqrt(40.0)) == 0.0);
    CHECK(semicircle(20, 7.0) == 0.0);
    auto e = mp_edges(10, 0);
    CHECK(e.lo == doctest::Approx(0.0));
    CHECK(e.hi == doctest::Approx(40.0));
    // MP peak: derivative root, compare with a dense scan
    double best = 0, xbest = 0;
    auto m = mp_edges(20, 4);
    for (int i = 1; i < 200000; ++i) {
        const double x = m.lo + (m.hi - m.lo) * i / 200000.0;
        if (marchenko_pastur(20, 4, x) > best) best = marchenko_pastur(20, 4, x), xbest = x;
    }
    const double h = 1e-4;
    CHECK(std::abs(marchenko_pastur(20, 4, xbest + h) - marchenko_pastur(20, 4, xbest - h)) < 1e-6);
}

TEST_CASE("counting coordinate spot values") {
    const auto g = EnsembleSpec::gue(20);
    CHECK(counting_xi(g, std::sqrt(40.0)) == doctest::Approx(10.0).epsilon(1e-12));
    const auto w = EnsembleSpec::wishart(20, 4);
    auto e = mp_edges(20, 4);
    CHECK(counting_xi(w, e.hi) - counting_xi(w, e.lo) == doctest::Approx(20.0).epsilon(1e-6 / 20));
    for (double x : {-2.0, 3.0}) {
        const double h = 1e-5;
        CHECK((counting_xi(g, x + h) - counting_xi(g, x - h)) / (2 * h) == doctest::Approx(semicircle(20, x)).epsilon(1e-6));
    }
}

TEST_CASE("asymptotic density accuracy over the support") {
    const auto g = EnsembleSpec::gue(20);
    const double r = std::sqrt(40.0);
    for (int i = 0; i <= 80; ++i) {
        const double x = -0.8 * r + 1.6 * r * i / 80;
        CHECK(std::abs(asymptotic_density(g, x) / density(g, x) - 1) < 1e-2);
    }
    const auto w = EnsembleSpec::wishart(20, 4);
    auto e = mp_edges(20, 4);
    const double c = 0.5 * (e.lo + e.hi), half = 0.35 * (e.hi - e.lo);
    for (int i = 0; i <= 70; ++i) {
        const double x = c - half + 2 * half * i / 70;
        CHECK(std::abs(asymptotic_density(w, x) / density(w, x) - 1) < 2e-2);
    }
}

TEST_CASE("unfolded density averages to one") {
    for (const auto& spec : {EnsembleSpec::gue(20), EnsembleSpec::wishart(20, 4)}) {
        const double a = spec.gaussian() ? -5.0 : 2.0, b = spec.gaussian() ? 5.0 : 12.0;
        const int n = 20000;
        double s = 0;
        for (int i = 0; i < n; ++i) s += unfolded_density(spec, xi_inverse(spec, a + (b - a) * (i + 0.5) / n));
        CHECK(s / n == doctest::Approx(1.0).epsilon(1e-3));
    }
}

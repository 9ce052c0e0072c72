#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eigenstrata/asymptotics.hpp"
#include "eigenstrata/errors.hpp"
#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/gaussdecomp.hpp"

using namespace eigenstrata;

namespace {
std::vector<double> grid(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}
double trapz(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return s;
}
const DecompGrid& gue20() {
    static const DecompGrid g = [] {
        const double L = std::sqrt(40.0) + 4.5;
        return decompose_grid(EnsembleSpec::gue(20), grid(-L, L, 2001), DecompMode::Exact);
    }();
    return g;
}
}  // namespace

TEST_CASE("component centres and index conventions") {
    const auto g = EnsembleSpec::gue(20);
    CHECK(eigen_component(g, 1).nu_k == doctest::Approx(9.5));
    CHECK(eigen_component(g, 20).nu_k == doctest::Approx(-9.5));
    CHECK(largest_component(g) == 1);
    CHECK(ascending_rank(g, 1) == 20);
    const auto w = EnsembleSpec::wishart(20, 4);
    CHECK(eigen_component(w, 1).nu_k == doctest::Approx(0.5));
    CHECK(largest_component(w) == 20);
    CHECK(ascending_rank(w, 3) == 3);
    CHECK_THROWS_AS(eigen_component(g, 21), Error);
}

TEST_CASE("bulk-mode coordinates for GUE") {
    const auto g = EnsembleSpec::gue(20);
    auto c = scaled_coords(g, 0.0, DecompMode::Bulk);
    CHECK(c.sigma2 == doctest::Approx(3.0 / (2 * M_PI * M_PI) * std::log(2.0 * std::cbrt(20.0))).epsilon(1e-10));
    CHECK(c.sigma2 == doctest::Approx(0.2571).epsilon(1e-3));
    for (double x : {-3.0, 1.2, 4.4}) CHECK(scaled_coords(g, x, DecompMode::Bulk).nu == doctest::Approx(counting_xi(g, x)));
}

TEST_CASE("exact-mode coordinates at the centre") {
    const auto g = EnsembleSpec::gue(20);
    auto c = scaled_coords(g, 0.0, DecompMode::Exact);
    CHECK(std::abs(c.nu) < 1e-6);
    CHECK(std::abs(c.sigma2 - 0.2571) < 0.05 * 0.2571);
}

TEST_CASE("inflection points") {
    auto p = inflection_points(EnsembleSpec::gue(20));
    CHECK(p.x_right == doctest::Approx(-p.x_left).epsilon(1e-8));
    CHECK(p.x_right < std::sqrt(40.0));
    CHECK(p.x_right > 0.85 * std::sqrt(40.0));
    CHECK(inflection_points(EnsembleSpec::wishart(20, 4)).x_left > 0.0);
}

TEST_CASE("components sum to the density in the bulk") {
    const auto& g = gue20();
    const auto spec = EnsembleSpec::gue(20);
    double worst = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        if (!in_bulk_band(spec, g.x[i])) continue;
        double s = 0;
        for (const auto& c : g.components) s += c[i];
        worst = std::max(worst, std::abs(s - g.rho[i]) / g.rho[i]);
    }
    CHECK(worst < 0.03);
}

// interior components hold unit mass; the ones next to the edges come out
// about 2% light, which also pulls the total below N - 0.05 (see README)
TEST_CASE("component masses") {
    const auto& g = gue20();
    for (int k = 1; k <= 20; ++k) {
        CAPTURE(k);
        CHECK(trapz(g.x, g.components[k - 1]) == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("total component mass is N") {
    for (const auto& spec : {EnsembleSpec::gue(20), EnsembleSpec::goe(20), EnsembleSpec::wishart(20, 4)}) {
        const std::string kind = to_string(spec.kind);
        CAPTURE(kind);
        const auto sup = leading_support(spec);
        auto xs = spec.gaussian() ? grid(-sup.hi - 4.5, sup.hi + 4.5, 2001)
                                  : grid(1e-3, sup.hi + 12 * std::cbrt(sup.hi), 2001);
        auto g = decompose_grid(spec, xs, DecompMode::Exact);
        double total = 0;
        for (const auto& c : g.components) total += trapz(g.x, c);
        CHECK(std::abs(total - 20.0) < 0.05);
    }
}

TEST_CASE("k=10 component peaks where xi = 1/2") {
    const auto& g = gue20();
    const auto& c = g.components[9];
    const auto it = std::max_element(c.begin(), c.end());
    const double xpk = g.x[it - c.begin()];
    CHECK(counting_xi(EnsembleSpec::gue(20), xpk) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("inflated variance breaks completeness") {
    const auto spec = EnsembleSpec::gue(20);
    const double L = std::sqrt(40.0) + 4.5;
    auto g = decompose_grid(spec, grid(-L, L, 1001), DecompMode::Exact, 1.5);
    double worst = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        if (!in_bulk_band(spec, g.x[i])) continue;
        double s = 0;
        for (const auto& c : g.components) s += c[i];
        worst = std::max(worst, std::abs(s - g.rho[i]) / g.rho[i]);
    }
    CHECK(worst > 0.03);
}

TEST_CASE("Poisson summation identity") {
    auto a = poisson_sum_check(0.5, 0.0, 40, 3);
    CHECK(std::abs(a.lhs - a.rhs) < 1e-6);
    auto b = poisson_sum_check(2.0, 0.3, 40, 3);
    CHECK(b.rhs == doctest::Approx(1.0).epsilon(1e-8));
    for (double nu : {-5.0, -1.3, 0.25, 4.9}) {
        auto c = poisson_sum_check(0.4, nu, 40, 3);
        CHECK(std::abs(c.lhs - c.rhs) < 1e-6);
        CHECK(c.remainder <= c.remainder_bound + 1e-15);
    }
    const double s = 0.4;
    CHECK(std::exp(-2 * M_PI * M_PI * s * s * 4) / std::exp(-2 * M_PI * M_PI * s * s) ==
          doctest::Approx(std::exp(-6 * M_PI * M_PI * s * s)));
}

#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/tracywidom.hpp"

using namespace eigenstrata;

TEST_CASE("Hastings-McLeod solution") {
    const auto& sol = default_painleve();
    std::size_t i4 = 0;
    while (sol.s_grid[i4] < 4.0 - 1e-9) ++i4;
    CHECK(sol.q[i4] == doctest::Approx(boost::math::airy_ai(4.0)).epsilon(1e-6).scale(1e-6));
    for (double q : sol.q) CHECK(q > 0.0);
    CHECK(std::exp(-sol.I2.back()) >= 1.0 - 1e-8);
    // q ~ sqrt(-s/2) for large negative s
    CHECK(sol.q.front() == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("distribution functions") {
    const auto& sol = default_painleve();
    CHECK(tw_cdf(sol, -1.77, 2) == doctest::Approx(0.5).epsilon(0.04));
    for (int beta : {1, 2}) {
        CHECK(tw_cdf(sol, sol.s_grid.front(), beta) < 1e-6);
        CHECK(tw_cdf(sol, sol.s_grid.back(), beta) > 1 - 1e-6);
        double mass = 0;
        for (std::size_t i = 1; i < sol.s_grid.size(); ++i) {
            const double a = sol.s_grid[i - 1], b = sol.s_grid[i];
            mass += (b - a) / 6 * (tw_density(sol, a, beta) + 4 * tw_density(sol, 0.5 * (a + b), beta) + tw_density(sol, b, beta));
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
    for (std::size_t i = 0; i < sol.s_grid.size(); i += 37) {
        const double s = sol.s_grid[i];
        const double f1 = tw_cdf(sol, s, 1), f2 = tw_cdf(sol, s, 2);
        CHECK(std::abs(f1 * f1 - f2 * std::exp(-sol.mu[i])) < 1e-10);
    }
    CHECK_THROWS_AS(tw_cdf(sol, 11.0, 2), Error);
}

TEST_CASE("cumulants") {
    const auto& sol = default_painleve();
    auto c2 = tw_cumulants(sol, 2);
    CHECK(c2.mean == doctest::Approx(-1.77109).epsilon(5e-4 / 1.77109));
    CHECK(std::abs(c2.std_dev - 0.9018) < 2e-3);
    CHECK(std::abs(c2.skewness - 0.224) < 5e-3);
    CHECK(std::abs(c2.excess_kurtosis - 0.093) < 5e-3);
    auto c1 = tw_cumulants(sol, 1);
    CHECK(std::abs(c1.mean + 1.20653) < 5e-4);
    CHECK(std::abs(c1.skewness - 0.293) < 5e-3);
    CHECK(std::abs(c1.excess_kurtosis - 0.165) < 5e-3);
}

TEST_CASE("short grid is rejected for cumulants") {
    auto sol = solve_painleve2(-8.0, 6.0);
    CHECK_THROWS_AS(tw_cumulants(sol, 1), Error);
    CHECK_THROWS_AS(solve_painleve2(-8.0, 5.0), Error);
}

TEST_CASE("edge scaling") {
    auto e = edge_scaling(EnsembleSpec::gue(20));
    CHECK(e.center == doctest::Approx(6.32456).epsilon(1e-6));
    CHECK(std::abs(e.scale - 0.429) < 1e-3);
    CHECK(edge_scaling(EnsembleSpec::wishart(10, 0)).center == doctest::Approx(40.0));
    CHECK(edge_scaling(EnsembleSpec::gue(80)).scale < e.scale);
}

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/orderstats.hpp"

using namespace eigenstrata;
using boost::math::quadrature::gauss_kronrod;

namespace {
double integrate(auto f, double a, double b) { return gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-12); }
}  // namespace

TEST_CASE("uniform rank densities are normalised and have the closed-form moments") {
    for (int N : {2, 7, 20}) {
        for (int n : {0, 1, N / 2, N - 1}) {
            OrderStatSpec s{N, n};
            const double h = N / 2.0;
            CHECK(integrate([&](double t) { return beta_rank_density(s, t); }, -h, h) ==
                  doctest::Approx(1.0).epsilon(1e-10));
            auto m = rank_moments(s);
            const double mean = integrate([&](double t) { return t * beta_rank_density(s, t); }, -h, h);
            const double var =
                integrate([&](double t) { return (t - mean) * (t - mean) * beta_rank_density(s, t); }, -h, h);
            CHECK(m.mean == doctest::Approx(mean).epsilon(1e-9));
            CHECK(m.variance == doctest::Approx(var).epsilon(1e-9));
        }
    }
}

TEST_CASE("bulk mean approximation") {
    OrderStatSpec s{40, 10};
    CHECK(rank_mean_bulk(s) == doctest::Approx(9.5));
    CHECK(std::abs(rank_moments(s).mean - rank_mean_bulk(s)) < 1.0);
}

TEST_CASE("rank out of range") {
    CHECK_THROWS_AS(beta_rank_density({5, 5}, 0.0), Error);
    CHECK_THROWS_AS(beta_rank_density({5, -1}, 0.0), Error);
}

TEST_CASE("edge limit densities integrate to one") {
    for (int n : {0, 1, 4})
        CHECK(integrate([&](double y) { return edge_limit_density(n, y); }, -60.0, 0.0) ==
              doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Gumbel law") {
    CHECK(integrate(gumbel_density, -10.0, 40.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)));
    const double h = 1e-5;
    CHECK((gumbel_cdf(0.3 + h) - gumbel_cdf(0.3 - h)) / (2 * h) == doctest::Approx(gumbel_density(0.3)).epsilon(1e-8));
}

TEST_CASE("mapped rank density for Gaussian parents") {
    const int N = 10;
    auto map = gaussian_map(N);
    CHECK(integrate(map.density, -10.0, 10.0) == doctest::Approx(N).epsilon(1e-10));
    // largest of N: N f(x) F(x)^{N-1}
    const double x = 1.1;
    const double F = 0.5 * std::erfc(-x);
    const double f = std::exp(-x * x) / std::sqrt(M_PI);
    CHECK(mapped_rank_density(map, {N, 0}, x) == doctest::Approx(N * f * std::pow(F, N - 1)).epsilon(1e-9));
    CHECK(integrate([&](double v) { return mapped_rank_density(map, {N, 3}, v); }, -8.0, 8.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Gumbel variable is monotone and matches the tail form") {
    CHECK(gumbel_variable(100, 2.0) > gumbel_variable(100, 1.5));
    CHECK(gumbel_variable(100, 2.0) == doctest::Approx(-std::log(50.0 * std::erfc(2.0))));
}

TEST_CASE("mapped ranks sum to the parent density") {
    auto map = gaussian_map(20);
    for (double x : {0.0, 1.0, 2.0}) {
        double s = 0;
        for (int n = 0; n < 20; ++n) s += mapped_rank_density(map, {20, n}, x);
        CHECK(s == doctest::Approx(20.0 / std::sqrt(M_PI) * std::exp(-x * x)).epsilon(1e-10));
    }
    auto m2 = gaussian_map(2);
    const double x = 0.6, f = std::exp(-x * x) / std::sqrt(M_PI), F = 0.5 * std::erfc(-x);
    CHECK(mapped_rank_density(m2, {2, 0}, x) == doctest::Approx(2 * f * F).epsilon(1e-12));
    CHECK(mapped_rank_density(m2, {2, 1}, x) == doctest::Approx(2 * f * (1 - F)).epsilon(1e-12));
}

TEST_CASE("uniform ranks are complete") {
    for (double t : {-4.9, -1.0, 0.3, 4.2}) {
        double s = 0;
        for (int n = 0; n < 10; ++n) s += beta_rank_density({10, n}, t);
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Gumbel mode at zero") {
    const double h = 1e-4;
    CHECK(std::abs(gumbel_density(h) - gumbel_density(-h)) < 1e-8);
    CHECK(gumbel_density(0.0) > gumbel_density(0.1));
}

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <cmath>
#include <numbers>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/specfn.hpp"

using namespace eigenstrata;

TEST_CASE("oscillator functions match Hermite polynomials") {
    for (int n : {0, 1, 5, 19}) {
        const double norm = 1.0 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi));
        for (double x : {-2.3, 0.0, 0.7, 3.1}) {
            const double ref = norm * boost::math::hermite(n, x) * std::exp(-x * x / 2);
            CHECK(oscillator_fn(n, x) == doctest::Approx(ref).epsilon(1e-11));
        }
    }
}

TEST_CASE("oscillator functions are orthonormal") {
    auto ip = [](int a, int b) {
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double x) { return oscillator_fn(a, x) * oscillator_fn(b, x); }, -12.0, 12.0, 10, 1e-12);
    };
    CHECK(ip(7, 7) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ip(7, 8)) < 1e-10);
    CHECK(std::abs(ip(4, 6)) < 1e-10);
}

TEST_CASE("oscillator pair and derivative agree with finite differences") {
    const int n = 9;
    const double x = 1.3, h = 1e-5;
    auto p = oscillator_pair(n, x);
    CHECK(p.cur == doctest::Approx(oscillator_fn(n, x)).epsilon(1e-14));
    CHECK(p.prev == doctest::Approx(oscillator_fn(n - 1, x)).epsilon(1e-14));
    const double fd = (oscillator_fn(n, x + h) - oscillator_fn(n, x - h)) / (2 * h);
    CHECK(oscillator_derivative(n, x) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("oscillator second solution has constant Wronskian") {
    std::vector<double> xs;
    for (int i = -40; i <= 40; ++i) xs.push_back(0.1 * i);
    for (int n : {4, 5, 20}) {
        auto st = oscillator_second(n, xs);
        REQUIRE(st.size() == xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            CHECK(st[i].value == doctest::Approx(oscillator_fn(n, xs[i])).epsilon(1e-10).scale(1.0));
            CHECK(st[i].wronskian() == doctest::Approx(kOscillatorWronskian).epsilon(1e-8));
        }
    }
}

TEST_CASE("oscillator zeros") {
    auto z = oscillator_zeros(6);
    REQUIRE(z.size() == 6);
    for (std::size_t i = 0; i < z.size(); ++i) {
        CHECK(std::abs(oscillator_fn(6, z[i])) < 1e-12);
        CHECK(z[i] == doctest::Approx(-z[z.size() - 1 - i]).epsilon(1e-12));
    }
}

TEST_CASE("Laguerre functions match Boost Laguerre polynomials") {
    const int n = 6, a = 3;
    for (double x : {0.4, 2.0, 9.5, 20.0}) {
        const double norm = std::sqrt(std::tgamma(n + 1.0) / std::tgamma(n + a + 1.0));
        const double ref = norm * std::pow(x, a / 2.0) * std::exp(-x / 2) * boost::math::laguerre(n, a, x);
        CHECK(laguerre_fn(n, a, x) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("Laguerre second solution: scaled Wronskian and integral cross-check") {
    for (int a : {2, 4}) {
        for (int n : {3, 19}) {
            for (double x : {0.5, 5.0, 30.0, 70.0}) {
                auto w = laguerre_second(n, a, x);
                CHECK(x * w.wronskian() == doctest::Approx(kLaguerreScaledWronskian).epsilon(1e-9));
                CHECK(laguerre_from_integral(n, a, x) ==
                      doctest::Approx(laguerre_fn(n, a, x)).epsilon(1e-8).scale(1e-3));
            }
        }
    }
}

TEST_CASE("Laguerre second solution rejects small alpha") {
    CHECK_THROWS_AS(laguerre_second(3, 1, 1.0), Error);
    try {
        laguerre_second(3, 1, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AlphaOutOfRange);
    }
}

TEST_CASE("Airy functions match Boost on both sides of the seam") {
    for (double x : {-12.0, -7.5, -6.9, -5.0, -1.0, 0.0, 2.0, 4.99, 5.01, 9.0}) {
        const double ai = boost::math::airy_ai(x), aip = boost::math::airy_ai_prime(x);
        CHECK(std::abs(airy(x) - ai) <= 1e-11 + 1e-10 * std::abs(ai));
        CHECK(std::abs(airy_prime(x) - aip) <= 1e-11 + 1e-10 * std::abs(aip));
    }
}

TEST_CASE("counting function reaches N/2 at large x") {
    CHECK(counting_fn_gue(20, 0.0) == doctest::Approx(0.0));
    CHECK(counting_fn_gue(20, 12.0) == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(eigenstrata::erf(0.5) == doctest::Approx(std::erf(0.5)));
    CHECK(eigenstrata::erfc(3.0) == doctest::Approx(std::erfc(3.0)));
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "eigenstrata/exactdensity.hpp"
#include "eigenstrata/montecarlo.hpp"
#include "eigenstrata/tridiag.hpp"

using namespace eigenstrata;

TEST_CASE("tridiagonal eigenvalues") {
    auto a = tridiag_eigenvalues({2, 2, 2}, {0, 0});
    for (double v : a) CHECK(v == doctest::Approx(2.0));
    auto b = tridiag_eigenvalues({0, 0}, {1});
    CHECK(b[0] == doctest::Approx(-1.0));
    CHECK(b[1] == doctest::Approx(1.0));
    std::mt19937_64 g(3);
    std::normal_distribution<double> n01;
    std::vector<double> d(50), e(49);
    for (auto& v : d) v = n01(g);
    for (auto& v : e) v = n01(g);
    auto ev = tridiag_eigenvalues(d, e);
    CHECK(std::accumulate(ev.begin(), ev.end(), 0.0) == doctest::Approx(std::accumulate(d.begin(), d.end(), 0.0)).epsilon(1e-9));
    CHECK(std::is_sorted(ev.begin(), ev.end()));
}

TEST_CASE("sampling is deterministic and thread independent") {
    auto a = sample_ensemble(EnsembleSpec::gue(8), 11, 500);
    auto b = sample_ensemble(EnsembleSpec::gue(8), 11, 500);
    CHECK(a.eigenvalues == b.eigenvalues);
    auto c = sample_ensemble(EnsembleSpec::gue(8), 12, 500);
    CHECK(a.eigenvalues != c.eigenvalues);
    auto head = sample_ensemble(EnsembleSpec::gue(8), 11, 10);
    CHECK(std::equal(head.eigenvalues.begin(), head.eigenvalues.end(), a.eigenvalues.begin()));
}

TEST_CASE("ensemble sanity") {
    auto w = sample_ensemble(EnsembleSpec::wishart(6, 2), 5, 20000);
    for (int i = 0; i < w.count; ++i) CHECK_UNARY(w.row(i)[0] > 0.0);
    for (const auto& spec : {EnsembleSpec::gue(5), EnsembleSpec::goe(5)}) {
        auto s = sample_ensemble(spec, 9, 100000);
        double sum = 0, sq = 0;
        for (int i = 0; i < s.count; ++i) {
            double t = 0;
            for (int j = 0; j < spec.N; ++j) t += s.row(i)[j];
            sum += t;
            sq += t * t;
        }
        const double mean = sum / s.count, se = std::sqrt((sq / s.count - mean * mean) / s.count);
        CHECK(std::abs(mean) < 3 * se);
    }
}

TEST_CASE("N=2 largest eigenvalue against the closed form") {
    auto s = sample_ensemble(EnsembleSpec::gue(2), 21, 100000);
    auto top = rank_values(s, 2);
    std::vector<double> xs, f;
    for (int i = 0; i <= 4000; ++i) {
        xs.push_back(-8 + 16.0 * i / 4000);
        f.push_back(gue_n2_extreme(xs.back(), Extreme::Largest));
    }
    CHECK(ks_statistic(top, grid_cdf(xs, f)) < 0.01);
}

TEST_CASE("rank histograms partition the level histogram") {
    auto s = sample_ensemble(EnsembleSpec::goe(4), 2, 2000);
    std::vector<double> all(s.eigenvalues);
    auto h = histogram(all, 40);
    std::vector<double> counts(40, 0.0);
    for (int k = 1; k <= 4; ++k) {
        auto v = rank_values(s, k);
        for (double x : v) {
            auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), x);
            long b = std::clamp<long>(it - h.bin_edges.begin() - 1, 0, 39);
            counts[b] += 1;
        }
    }
    for (int b = 0; b < 40; ++b) CHECK(counts[b] == doctest::Approx(static_cast<double>(h.counts[b])));
    auto d = h.density();
    double area = 0;
    for (int b = 0; b < 40; ++b) area += d[b] * (h.bin_edges[b + 1] - h.bin_edges[b]);
    CHECK(area == doctest::Approx(1.0));
}

TEST_CASE("KS statistic calibration") {
    std::mt19937_64 g(17);
    std::uniform_real_distribution<double> u;
    std::vector<double> v(10000);
    for (auto& x : v) x = u(g);
    std::sort(v.begin(), v.end());
    auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_statistic(v, cdf) < 1.63 / 100.0);
    CHECK(ks_statistic(v, [](double x) { return std::clamp(x - 0.1, 0.0, 1.0); }) == doctest::Approx(0.1).epsilon(0.15));
    std::vector<double> small(v.begin(), v.begin() + 1000);
    std::shuffle(v.begin(), v.end(), g);
    std::vector<double> w(v.begin(), v.begin() + 1000);
    std::sort(w.begin(), w.end());
    CHECK(ks_statistic(w, cdf) < 0.06);
}

TEST_CASE("3x3 GOE: dense and tridiagonal samplers agree") {
    const double a[3][3] = {{2, 0, 0}, {0, -1, 0}, {0, 0, 5}};
    auto e = symmetric3_eigenvalues(a);
    CHECK(e[0] == doctest::Approx(-1.0));
    CHECK(e[2] == doctest::Approx(5.0));
    auto dense = dense_goe3_eigenvalues(4, 100000);
    auto tri = sample_ensemble(EnsembleSpec::goe(3), 4, 100000);
    std::sort(dense.begin(), dense.end());
    std::vector<double> t(tri.eigenvalues);
    std::sort(t.begin(), t.end());
    GridCdf emp;
    for (std::size_t i = 0; i < t.size(); i += 10) {
        emp.x.push_back(t[i]);
        emp.F.push_back(static_cast<double>(i) / t.size());
    }
    emp.x.push_back(t.back() + 1e-9);
    emp.F.push_back(1.0);
    CHECK(ks_statistic(dense, emp) < 0.01);
}

TEST_CASE("iid Gaussian maxima") {
    auto m = iid_gaussian_maxima(100, std::sqrt(0.5), 3, 20000);
    REQUIRE(m.size() == 20000);
    double mean = std::accumulate(m.begin(), m.end(), 0.0) / m.size();
    CHECK(mean > 1.5);
    CHECK(mean < 2.2);
}

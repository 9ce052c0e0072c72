#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eigenstrata/ensemble.hpp"

namespace eigenstrata {

struct SampleBatch {
    EnsembleSpec spec;
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<double> eigenvalues;  // count x N, each row ascending

    const double* row(int i) const { return eigenvalues.data() + static_cast<std::size_t>(i) * spec.N; }
};

// Tridiagonal (Gaussian) / bidiagonal (Wishart) models; sample i draws from
// a generator keyed by (seed, i) only, so the batch does not depend on threading.
SampleBatch sample_ensemble(const EnsembleSpec& spec, std::uint64_t seed, int count);

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off);

// k-th smallest eigenvalue across the batch, sorted
std::vector<double> rank_values(const SampleBatch& batch, int k);

struct RankHistogram {
    int k = 1;
    std::vector<double> bin_edges;
    std::vector<long long> counts;

    // count / (total * width) per bin
    std::vector<double> density() const;
};

// bins = 0 selects Freedman-Diaconis
RankHistogram rank_histogram(const SampleBatch& batch, int k, int bins = 0);
RankHistogram histogram(const std::vector<double>& values, int bins = 0);

double ks_statistic(const std::vector<double>& sorted_sample, const std::function<double(double)>& model_cdf);

// piecewise-linear CDF from a density on an ascending grid (trapezoid, not renormalised)
struct GridCdf {
    std::vector<double> x;
    std::vector<double> F;
    double operator()(double v) const;
};
GridCdf grid_cdf(const std::vector<double>& x, const std::vector<double>& density);

// maximum of N independent N(0, sd^2) draws, one per sample
std::vector<double> iid_gaussian_maxima(int N, double sd, std::uint64_t seed, int count);

// dense 3x3 GOE samples, eigenvalues from the characteristic cubic; small-N oracle
std::vector<double> dense_goe3_eigenvalues(std::uint64_t seed, int count);
std::vector<double> symmetric3_eigenvalues(const double a[3][3]);

}  // namespace eigenstrata

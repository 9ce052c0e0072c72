#include "eigenstrata/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/tridiag.hpp"
#include "parallel.hpp"

namespace eigenstrata {

namespace {

std::mt19937_64 keyed_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

double chi(std::mt19937_64& g, double dof) { return std::sqrt(std::chi_squared_distribution<double>(dof)(g)); }

void sample_one(const EnsembleSpec& spec, std::mt19937_64& g, double* out) {
    const int N = spec.N;
    std::vector<double> d(N), e(N > 1 ? N - 1 : 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    switch (spec.kind) {
    case Ensemble::GUE:
        for (int i = 0; i < N; ++i) d[i] = normal(g) * (0.5 * std::numbers::sqrt2);
        for (int i = 0; i + 1 < N; ++i) e[i] = 0.5 * chi(g, 2.0 * (N - 1 - i));
        break;
    case Ensemble::GOE:
        for (int i = 0; i < N; ++i) d[i] = normal(g);
        for (int i = 0; i + 1 < N; ++i) e[i] = chi(g, N - 1 - i) * (0.5 * std::numbers::sqrt2);
        break;
    case Ensemble::Wishart: {
        // lower bidiagonal B, eigenvalues of B B^T
        std::vector<double> b(N), c(N > 1 ? N - 1 : 0);
        for (int i = 0; i < N; ++i) b[i] = chi(g, 2.0 * (spec.M() - i)) * (0.5 * std::numbers::sqrt2);
        for (int i = 0; i + 1 < N; ++i) c[i] = chi(g, 2.0 * (N - 1 - i)) * (0.5 * std::numbers::sqrt2);
        for (int i = 0; i < N; ++i) d[i] = b[i] * b[i] + (i > 0 ? c[i - 1] * c[i - 1] : 0.0);
        for (int i = 0; i + 1 < N; ++i) e[i] = b[i] * c[i];
        break;
    }
    }
    auto ev = sturm_eigenvalues(d, e);
    std::copy(ev.begin(), ev.end(), out);
}

}  // namespace

SampleBatch sample_ensemble(const EnsembleSpec& spec, std::uint64_t seed, int count) {
    validate(spec);
    if (count < 1) fail(ErrorKind::InvalidSpec, "sample count must be positive");
    SampleBatch b;
    b.spec = spec;
    b.seed = seed;
    b.count = count;
    b.eigenvalues.assign(static_cast<std::size_t>(count) * spec.N, 0.0);
    detail::parallel_for(count, [&](std::size_t i) {
        auto g = keyed_engine(seed, i);
        sample_one(spec, g, b.eigenvalues.data() + i * spec.N);
    });
    return b;
}

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off) {
    return sturm_eigenvalues(diag, off);
}

std::vector<double> rank_values(const SampleBatch& batch, int k) {
    if (k < 1 || k > batch.spec.N) fail(ErrorKind::RankOutOfRange, "rank " + std::to_string(k));
    std::vector<double> v(batch.count);
    for (int i = 0; i < batch.count; ++i) v[i] = batch.row(i)[k - 1];
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> RankHistogram::density() const {
    long long total = 0;
    for (auto c : counts) total += c;
    std::vector<double> d(counts.size(), 0.0);
    if (total == 0) return d;
    for (std::size_t i = 0; i < counts.size(); ++i)
        d[i] = counts[i] / (static_cast<double>(total) * (bin_edges[i + 1] - bin_edges[i]));
    return d;
}

RankHistogram histogram(const std::vector<double>& values, int bins) {
    RankHistogram h;
    if (values.empty()) return h;
    std::vector<double> v(values);
    std::sort(v.begin(), v.end());
    const double lo = v.front(), hi = v.back();
    if (bins <= 0) {
        const std::size_t n = v.size();
        const double iqr = v[(3 * n) / 4] - v[n / 4];
        const double w = 2.0 * iqr * std::pow(static_cast<double>(n), -1.0 / 3.0);
        bins = w > 0 ? static_cast<int>(std::ceil((hi - lo) / w)) : 1;
        bins = std::clamp(bins, 1, 10000);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    h.bin_edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) h.bin_edges[i] = lo + span * i / bins;
    h.counts.assign(bins, 0);
    for (double x : v) {
        int j = static_cast<int>((x - lo) / span * bins);
        h.counts[std::clamp(j, 0, bins - 1)]++;
    }
    return h;
}

RankHistogram rank_histogram(const SampleBatch& batch, int k, int bins) {
    auto h = histogram(rank_values(batch, k), bins);
    h.k = k;
    return h;
}

double ks_statistic(const std::vector<double>& s, const std::function<double(double)>& cdf) {
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double F = cdf(s[i]);
        d = std::max({d, (i + 1) / n - F, F - i / n});
    }
    return d;
}

GridCdf grid_cdf(const std::vector<double>& x, const std::vector<double>& density) {
    GridCdf g;
    g.x = x;
    g.F.assign(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        g.F[i] = g.F[i - 1] + 0.5 * (density[i] + density[i - 1]) * (x[i] - x[i - 1]);
    return g;
}

double GridCdf::operator()(double v) const {
    if (x.empty()) return 0.0;
    if (v <= x.front()) return 0.0;
    if (v >= x.back()) return F.back();
    const std::size_t i = std::upper_bound(x.begin(), x.end(), v) - x.begin();
    const double t = (v - x[i - 1]) / (x[i] - x[i - 1]);
    return F[i - 1] + t * (F[i] - F[i - 1]);
}

std::vector<double> iid_gaussian_maxima(int N, double sd, std::uint64_t seed, int count) {
    if (N < 1 || count < 1) fail(ErrorKind::InvalidSpec, "N and count must be positive");
    std::vector<double> out(count);
    detail::parallel_for(count, [&](std::size_t i) {
        auto g = keyed_engine(seed, i);
        std::normal_distribution<double> normal(0.0, sd);
        double m = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < N; ++j) m = std::max(m, normal(g));
        out[i] = m;
    });
    return out;
}

std::vector<double> symmetric3_eigenvalues(const double a[3][3]) {
    // trigonometric solution of the characteristic cubic
    const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) + (a[2][2] - q) * (a[2][2] - q) +
                      2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) return {q, q, q};
    double b[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
    const double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                        b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                        b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double phi = std::acos(std::clamp(0.5 * detb, -1.0, 1.0)) / 3.0;
    const double l1 = q + 2.0 * p * std::cos(phi);
    const double l3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {l3, 3.0 * q - l1 - l3, l1};
}

std::vector<double> dense_goe3_eigenvalues(std::uint64_t seed, int count) {
    std::vector<double> out(static_cast<std::size_t>(count) * 3);
    detail::parallel_for(count, [&](std::size_t i) {
        auto g = keyed_engine(seed, i);
        std::normal_distribution<double> normal(0.0, 1.0);
        double a[3][3];
        for (int r = 0; r < 3; ++r) {
            a[r][r] = normal(g);
            for (int c = r + 1; c < 3; ++c) a[r][c] = a[c][r] = normal(g) * (0.5 * std::numbers::sqrt2);
        }
        auto ev = symmetric3_eigenvalues(a);
        std::copy(ev.begin(), ev.end(), out.begin() + 3 * i);
    });
    return out;
}

}  // namespace eigenstrata

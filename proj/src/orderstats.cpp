#include "eigenstrata/orderstats.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eigenstrata/errors.hpp"
#include "eigenstrata/specfn.hpp"

namespace eigenstrata {

namespace {

void check_rank(const OrderStatSpec& s) {
    if (s.N < 1 || s.n < 0 || s.n > s.N - 1)
        fail(ErrorKind::RankOutOfRange, "rank " + std::to_string(s.n) + " for N=" + std::to_string(s.N));
}

// log of N!/(n!(N-n-1)!) / N
double log_prefactor(int N, int n) {
    return std::lgamma(N + 1.0) - std::lgamma(n + 1.0) - std::lgamma(N - n + 0.0) - std::log(N + 0.0);
}

double rank_weight(int N, int n, double u) {
    // u = t/N in (-1/2, 1/2)
    const double hi = 0.5 - u, lo = 0.5 + u;
    if (hi < 0 || lo < 0) return 0.0;
    double l = log_prefactor(N, n);
    if (n > 0) {
        if (hi == 0) return 0.0;
        l += n * std::log(hi);
    }
    if (N - n - 1 > 0) {
        if (lo == 0) return 0.0;
        l += (N - n - 1) * std::log(lo);
    }
    return std::exp(l);
}

}  // namespace

double beta_rank_density(const OrderStatSpec& spec, double t) {
    check_rank(spec);
    if (std::abs(t) > 0.5 * spec.N) return 0.0;
    return rank_weight(spec.N, spec.n, t / spec.N);
}

RankMoments rank_moments(const OrderStatSpec& spec) {
    check_rank(spec);
    const double N = spec.N, n = spec.n;
    return {N * (N - 1.0 - 2.0 * n) / (2.0 * (N + 1.0)),
            (n + 1.0) * (N - n) * N * N / ((N + 2.0) * (N + 1.0) * (N + 1.0))};
}

double rank_mean_bulk(const OrderStatSpec& spec) {
    check_rank(spec);
    return 0.5 * (spec.N - 1.0) - spec.n;
}

double edge_limit_density(int n, double y) {
    if (y > 0) return 0.0;
    if (y == 0) return n == 0 ? 1.0 : 0.0;
    return std::exp(n * std::log(-y) + y - std::lgamma(n + 1.0));
}

double gumbel_density(double z) { return std::exp(-std::exp(-z) - z); }
double gumbel_cdf(double z) { return std::exp(-std::exp(-z)); }

double mapped_rank_density(const DensityMap& map, const OrderStatSpec& spec, double x) {
    check_rank(spec);
    const double u = map.cumulative(x) / spec.N;
    return map.density(x) * rank_weight(spec.N, spec.n, u);
}

DensityMap gaussian_map(int N) {
    return {[N](double x) { return N / std::sqrt(std::numbers::pi) * std::exp(-x * x); },
            [N](double x) { return 0.5 * N * eigenstrata::erf(x); }};
}

double gumbel_variable(int N, double x) { return -std::log(0.5 * N * eigenstrata::erfc(x)); }

}  // namespace eigenstrata

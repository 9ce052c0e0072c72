#pragma once

#include <functional>

namespace eigenstrata {

// N i.i.d. variables; rank n counts down from the largest (n = 0 is the maximum)
struct OrderStatSpec {
    int N = 1;
    int n = 0;
};

struct DensityMap {
    std::function<double(double)> density;     // total density, integrates to N
    std::function<double(double)> cumulative;  // t(x) = integral_0^x density
};

struct RankMoments {
    double mean = 0.0;
    double variance = 0.0;
};

// density of the (n+1)-th largest of N uniforms on (-N/2, N/2); RankOutOfRange
double beta_rank_density(const OrderStatSpec& spec, double t);

RankMoments rank_moments(const OrderStatSpec& spec);

// large-N bulk approximation of the mean, (N-1)/2 - n
double rank_mean_bulk(const OrderStatSpec& spec);

// y^n e^y / n! in the edge variable y = t - N/2 (y <= 0)
double edge_limit_density(int n, double y);

double gumbel_density(double z);
double gumbel_cdf(double z);

double mapped_rank_density(const DensityMap& map, const OrderStatSpec& spec, double x);

// Gaussian parents: N independent N(0, 1/2) variables, density (N/sqrt(pi)) e^{-x^2}
DensityMap gaussian_map(int N);

// z = -ln[(N/2) erfc(x)], the Gumbel variable for the largest of N such Gaussians
double gumbel_variable(int N, double x);

}  // namespace eigenstrata

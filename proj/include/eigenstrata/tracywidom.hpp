#pragma once

#include <vector>

#include "eigenstrata/ensemble.hpp"

namespace eigenstrata {

// Hastings-McLeod solution sampled on an ascending grid, with the tail
// integrals I2(s) = int_s^inf (x-s) q^2 and mu(s) = int_s^inf q carried along.
// J = -dI2/ds = int_s^inf q^2.
struct PainleveSolution {
    std::vector<double> s_grid;
    std::vector<double> q;
    std::vector<double> q_prime;
    std::vector<double> I2;
    std::vector<double> J;
    std::vector<double> mu;
};

// Integrates backward from s_max. Throws DomainError on bad arguments and
// BlowUp when q leaves the positive branch or exceeds 1e6.
PainleveSolution solve_painleve2(double s_min = -8.0, double s_max = 10.0, double tol = 1e-12,
                                 double step = 0.01);

// OutOfGrid outside [s_min, s_max]; beta is 1 or 2
double tw_cdf(const PainleveSolution& sol, double s, int beta);
double tw_density(const PainleveSolution& sol, double s, int beta);

struct Cumulants {
    double mean = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

// InsufficientGrid if the grid misses more than 1e-9 of the mass
Cumulants tw_cumulants(const PainleveSolution& sol, int beta);

// x = center + scale * s for the largest eigenvalue
struct EdgeScaling {
    double center = 0.0;
    double scale = 1.0;
};
EdgeScaling edge_scaling(const EnsembleSpec& spec);

// shared default solution (s in [-8, 10]), computed once
const PainleveSolution& default_painleve();

}  // namespace eigenstrata

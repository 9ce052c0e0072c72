#pragma once

#include <functional>

#include "eigenstrata/ensemble.hpp"

namespace eigenstrata {

enum class WaveKind { Oscillator, Laguerre };

struct ClassicalRegion {
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::function<double(double)> momentum;
};

ClassicalRegion oscillator_region(int n);
ClassicalRegion laguerre_region(int n, int alpha);

// Throws TurningPointProximity within one local wavelength of either turning point.
// alpha is only read for WaveKind::Laguerre.
double wkb_wavefunction(const ClassicalRegion& region, int n, double x, WaveKind kind, int alpha = 0);

// WKB envelope sqrt(2/pi) (2n+1-x^2)^{-1/4} of the oscillator function
double wkb_oscillator_amplitude(int n, double x);

// action (1/pi) integral_0^x p of the n-th oscillator level
double oscillator_action(int n, double x);
// (1/pi) integral_{x1}^x p for the Laguerre level
double laguerre_action(int n, int alpha, double x);

double semicircle(int N, double x);
double marchenko_pastur(int N, int alpha, double x);

struct MpEdges {
    double lo = 0.0;
    double hi = 0.0;
};
MpEdges mp_edges(int N, int alpha);

// leading density of the ensemble (semicircle or Marchenko-Pastur)
double leading_density(const EnsembleSpec& spec, double x);

double counting_xi(const EnsembleSpec& spec, double x);

// inverse of counting_xi on the open support
double xi_inverse(const EnsembleSpec& spec, double xi);

// closed-form leading + first fluctuating term; EdgeSingularity when the
// correction envelope exceeds half of the leading density
double asymptotic_density(const EnsembleSpec& spec, double x);

// exact density / leading density (same domain checks as asymptotic_density)
double unfolded_density(const EnsembleSpec& spec, double x);

// support of the leading density
struct Support {
    double lo = 0.0;
    double hi = 0.0;
};
Support leading_support(const EnsembleSpec& spec);

}  // namespace eigenstrata

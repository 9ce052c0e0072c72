#pragma once

#include <vector>

namespace eigenstrata {

// value/derivative of a basis function and of its second solution at one x
struct WaveState {
    double value = 0.0;
    double derivative = 0.0;
    double tilde_value = 0.0;
    double tilde_derivative = 0.0;

    double wronskian() const { return value * tilde_derivative - derivative * tilde_value; }
};

constexpr double kOscillatorWronskian = 0.63661977236758134308;  // 2/pi

// --- oscillator (weighted Hermite) functions -------------------------------

double oscillator_fn(int n, double x);

// phi_n and phi_{n-1} from a single recurrence pass (prev = 0 for n = 0)
struct OscPair {
    double cur = 0.0;
    double prev = 0.0;
};
OscPair oscillator_pair(int n, double x);

double oscillator_derivative(int n, double x);

// Second solution on an arbitrary grid, integrated outward from 0 and
// extended to negative x by parity. Throws DegenerateInitCondition.
std::vector<WaveState> oscillator_second(int n, const std::vector<double>& x_grid);

// Same integration, also carrying Itilde(x) with Itilde' = phitilde,
// Itilde(0) = -phitilde'(0)/(2n+1).
struct OscillatorSecondExt {
    std::vector<WaveState> states;
    std::vector<double> tilde_integral;
};
OscillatorSecondExt oscillator_second_ext(int n, const std::vector<double>& x_grid,
                                          double rtol = 1e-12);

// zeros of phi_n, ascending
std::vector<double> oscillator_zeros(int n);

// --- weighted Laguerre functions -------------------------------------------

double laguerre_fn(int n, int alpha, double x);

struct LagPair {
    double cur = 0.0;
    double prev = 0.0;
};
LagPair laguerre_pair(int n, int alpha, double x);

// needs x > 0 unless alpha == 0 or alpha >= 2
double laguerre_derivative(int n, int alpha, double x);

// Second solution from the integral representation (alpha >= 2, x > 0).
// Throws AlphaOutOfRange, DomainError, QuadratureNotConverged.
WaveState laguerre_second(int n, int alpha, double x);

// psi_n rebuilt from the cosine-kernel integral; only used as a cross-check
double laguerre_from_integral(int n, int alpha, double x);

// x * W(psi, psitilde); equals 1/pi
constexpr double kLaguerreScaledWronskian = 0.31830988618379067154;

std::vector<double> laguerre_zeros(int n, int alpha);

// --- counting function and scalar special functions ------------------------

// integral of sum_{n<N} phi_n^2 from 0 to x
double counting_fn_gue(int N, double x);

double airy(double x);
double airy_prime(double x);
double erf(double x);
double erfc(double x);

}  // namespace eigenstrata

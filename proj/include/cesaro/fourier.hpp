#pragma once

#include <functional>
#include <map>
#include <optional>

#include "cesaro/remainder.hpp"

namespace cesaro {

// Distributional Fourier transform entry: regular part plus a point mass at
// the origin.  Integer-frequency coefficient evaluation (n != 0) uses only
// the regular part.
struct DistributionalFT {
  std::function<Complex(double)> regular;
  Complex delta_weight;
};

DistributionalFT ft_log_abs();    // -1/(2|xi|) + gamma * delta_0
DistributionalFT ft_one();        // delta_0
DistributionalFT ft_heaviside();  // 1/(2 pi i xi) + delta_0 / 2

// Fourier coefficient of the period-1 bidirectional sum of the summand:
//   Log:   a_n = -1/n for n > 0, 0 otherwise
//   Power: a_n = e^{-i pi s/2} (2 pi)^s n^{s-1} / Gamma(s) for n >= 1 (Re s > 1)
Complex fourier_coeff_closed_form(const SummandKind& kind, std::optional<Complex> s, long n);

// Log coefficient assembled from the three distributional table entries
// (cross-check of the closed form).
Complex fourier_log_coeff_assembled(long n);

struct FourierCoefficientTable {
  SummandKind kind;
  std::optional<Complex> s_param;
  std::map<long, Complex> coeffs;
  long n_range = 0;
};

FourierCoefficientTable build_fourier_table(const SummandKind& kind, std::optional<Complex> s,
                                            long n_range);

// R_{+,0,-}[ln](z0) for Im(z0) > 0:  i pi (z0 - 1/2) + ln 2 + ln sin(pi z0),
// reduced to the period-1 representative; cross-checked against the Fourier
// series -sum e^{2 pi i n z0}/n before returning.
Complex bidirectional_log_closed_form(Complex z0);
Complex bidirectional_log_series(Complex z0, int terms = 512);

// |R_{+,0}[ln](z0) + R_{+,0}[ln](1-z0) - ln 2 - ln sin(pi z0)| via ln Gamma.
double verify_log_reflection(Complex z0);

// |zeta(1-s) - 2^{1-s} pi^{-s} cos(pi s/2) Gamma(s) zeta(s)| / (1 + |zeta(1-s)|)
double zeta_functional_equation_residual(Complex s);

// Cesaro value of sum (-1)^n n^{s-1}: (2^s - 1) zeta(1-s); the alternating
// harmonic case s = 0 returns its classical value -ln 2.
Complex alternating_series_clim(Complex s);

}  // namespace cesaro

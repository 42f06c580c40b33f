#pragma once

#include <vector>

#include "cesaro/expansion.hpp"

namespace cesaro {

// One term coeff * w^rho * (ln w)^m of a partial-sum asymptotic expansion in
// the parameter variable w = last summand location (w = z0 + spacing*k on the
// positive ray).  Coefficients are carried wide: the constant extraction
// subtracts coeff * w^rho at finite w, so coefficient representation error is
// amplified by |w|^Re(rho).
struct ParameterTerm {
  WideComplex coeff;
  Complex rho;
  int log_power = 0;

  Complex coeff_narrow() const {
    return {static_cast<double>(coeff.real()), static_cast<double>(coeff.imag())};
  }
};

struct GeometricLimit {
  // Generalised Cesaro limit contributed by the terms (constant slot).
  Complex value = 0.0;
  // Net coefficients of residual pure (ln z)^j, j >= 1.  Must vanish for the
  // limit to exist; a nonzero entry is the eigenvalue-1 obstruction.
  std::vector<Complex> log_obstruction;
  // Pure geometric power-log terms removed before averaging.
  AsymptoticExpansion stripped;
  // Formal averaging power needed (max alpha degree met at a growing slot).
  int averaging_power = 0;

  void merge(const GeometricLimit& other);
  double obstruction_norm() const;
};

// Exact generalised Cesaro limit of t -> coeff * w(t)^rho * (ln w(t))^m along
// a ray with unit direction d and summand spacing r, stripping eigenfunctions
// of the geometric variable z:
//
//   w = z - d*alpha,  alpha = t - r*floor(t/r) in [0, r).
//
// Expanding in alpha, the zero-mean periodic components average to zero, the
// alpha-means of terms with a nonzero z-power are stripped, and only the
// z^0 slot contributes: its ln-free part is the limit, its ln-carrying part
// the obstruction.
GeometricLimit clim_power_log(Complex coeff, Complex rho, int log_power, Complex d_unit,
                              double spacing);

// Same limit but stripping in the arc-length parameter t instead of the
// geometric variable (w = t + (z0 - d*alpha) on a positive horizontal ray).
// This is the wrong-variable variant: for ray bases off the origin it leaves
// residual pure-log terms.  Positive real rays only.
GeometricLimit clim_power_log_arclength(Complex coeff, Complex rho, int log_power, Complex z0,
                                        double spacing);

GeometricLimit clim_parameter_terms(const std::vector<ParameterTerm>& terms, Complex d_unit,
                                    double spacing, bool strip_in_arc_length = false,
                                    Complex z0 = 0.0);

// Coefficients of d^i/dw^i [w^rho ln^m w] = w^(rho-i) * sum_j out[j] ln^j w.
std::vector<Complex> power_log_derivative_coeffs(Complex rho, int log_power, int order);

}  // namespace cesaro

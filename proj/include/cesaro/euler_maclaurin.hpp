#pragma once

#include <vector>

#include "cesaro/bernoulli.hpp"
#include "cesaro/clim_algebra.hpp"
#include "cesaro/expansion.hpp"

namespace cesaro {

// Asymptotic expansion of a partial sum sum_{j=1}^{k} f(z0 + sign*spacing*j):
//
//   sum = [parameter terms in w] + constant + o(1),   w = z0 + sign*spacing*k.
//
// smooth_part holds the strippable geometric projection (alpha-means folded),
// constant the generalised limit contribution (the C_{z0}-style constant plus
// the exact sawtooth averages), correction_terms the Bernoulli tail as it
// appears in the constant-extraction formula.
struct EMExpansion {
  AsymptoticExpansion smooth_part;
  Complex constant = 0.0;  // k-independent fold (the C_{z0}-style constant)
  std::vector<std::pair<int, Complex>> correction_terms;
  int truncation_order = 0;

  std::vector<ParameterTerm> parameter_terms;  // expansion of the sum in w
  Complex limit_value = 0.0;                   // constant + averaged sawtooth slots
  int averaging_power = 0;
};

struct EMOptions {
  int k = 48;      // terms summed when extracting the constant
  int order = 8;   // Bernoulli correction pairs retained
};

// Euler-Maclaurin expansion of sum_{j<=k} ln(z0 + j).
EMExpansion em_log_expansion(Complex z0, int order, int k = 48);

// Euler-Maclaurin expansion of sum_{j<=k} (z0 + j)^(-s);  s = 1 is the
// harmonic case and is rejected (the leading term is logarithmic).
EMExpansion em_power_expansion(Complex z0, Complex s, int order, int k = 48);

// Regeometrised series of one parameter term: w^rho ln^m w with w = z - d*alpha
// expanded through alpha^(depth-1); alpha-carrying terms are kept explicitly.
struct RegeometrizedSeries {
  AsymptoticExpansion expansion;   // geometric, alpha_power-bearing terms
  double remainder_bound = 0.0;    // |next coefficient|
  Complex remainder_power = 0.0;   // z-power of the first dropped term
};

RegeometrizedSeries binomial_regeometrize(const ParameterTerm& term, Complex z0, int depth,
                                          Complex d_unit = Complex(1.0, 0.0));

// Alpha-free projection with sawtooth means folded in: the strip set the
// working recipe removes before averaging.  Constant slots are excluded.
AsymptoticExpansion alpha_mean_fold(const AsymptoticExpansion& series, double spacing = 1.0);

// Summand values f(z0 + sign*spacing*j), j = 1..k, plus the evaluation used
// by the constant extraction.  The constant is an O(1) difference of values
// that grow polynomially in k, so everything is carried in wide precision.
struct SummandSeries {
  std::vector<ParameterTerm> parameter_terms;
  std::vector<WideComplex> values;  // j = 1..k
  Complex w;                        // z0 + sign*spacing*k
};

// Compensated evaluation of constant = sum values - parameter terms at w.
Complex em_constant_from_series(const SummandSeries& series);

// Parameter terms of sum_{j<=k} f(z0 + u*j) in w = z0 + u*k for the two
// summand families; u is the signed spacing.  Constant slots are folded out.
std::vector<ParameterTerm> em_parameter_terms_log(double u, int order);
std::vector<ParameterTerm> em_parameter_terms_power(Complex s, double u, int order);

// Magnitude of the first dropped Bernoulli correction at w (tail heuristic).
double em_tail_estimate_log(double u, int order, Complex w);
double em_tail_estimate_power(Complex s, double u, int order, Complex w);

}  // namespace cesaro

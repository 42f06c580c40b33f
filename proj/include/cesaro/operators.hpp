#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

// Registered test function with analytic derivative and, where available,
// antiderivative from 0.  power_at_zero is the leading exponent near the
// origin (integrability bookkeeping under scaling).
struct CorpusFunction {
  std::string id;
  std::function<Complex(double)> f;
  std::function<Complex(double)> df;
  std::function<Complex(double)> antiderivative;  // may be empty
  double power_at_zero = 0.0;
  double wavelength = 0.0;  // oscillation scale, 0 = none
};

const std::vector<CorpusFunction>& operator_corpus();
const CorpusFunction& corpus_fn(const std::string& id);

struct OperatorSample {
  std::string fn_id;  // empty when the values do not come from the corpus
  std::vector<double> grid;
  std::vector<Complex> values;
};

OperatorSample make_sample(const std::string& fn_id, std::vector<double> grid);

// P^{-1} = z d/dz + 1 applied on the grid (analytic derivative when the
// sample is corpus-backed, else a 5-point finite-difference stencil).
OperatorSample apply_P_inverse(const OperatorSample& sample);

enum class GeneratorKind { Dilation, Scaling };

// H_D = z d/dz or H_S = z ln(z) d/dz on the grid.
OperatorSample apply_generator(const OperatorSample& sample, GeneratorKind which);

// Averaging of a corpus function: P^n[f](t) by cumulative panel quadrature.
Complex average_corpus(const std::string& fn_id, int n, double t);

// |Clim of the r-dilated summand lattice - homogeneity-adjusted original|.
// Registered cases: zeta-s0, zeta-s2, zeta-sm1, log-gamma, gamma-mult-n2.
double dilation_invariance_check(const std::string& case_id, double r, Complex z0);

std::vector<std::string> dilation_case_names();

// |P o S_r [f](t) - qtilde(P) o S_r o P [f](t)| with S_r[f](t) = f(t^r) and
// qtilde(P) = 1 + (1 - e^{-r})(P - 1).
double scaling_commutation_residual(const std::string& fn_id, double r, double t);

// n-fold variant: P^n o S_r = qtilde(P)^n o S_r o P^n, n in {1, 2, 3}.
double scaling_commutation_power_residual(const std::string& fn_id, double r, double t, int n);

// qtilde evaluated at the fixed point P = 1; identically 1 by construction.
double qtilde_at_one(double r);

}  // namespace cesaro

#pragma once

#include "cesaro/remainder.hpp"

namespace cesaro {

struct HurwitzResult {
  Complex value;
  Complex s;
  Complex z0;
  int strip_index = 0;  // unit continuation strips crossed below Re(s) = 1
};

struct GammaResult {
  Complex log_value;  // ln Gamma(z0 + 1), analytic continuation
  Complex value;      // exp(log_value)
  Complex c_z0;       // the extracted expansion constant
  int k_used = 0;
  int order_used = 0;
};

// zeta_H(z0; s) = sum_{n>=1} (z0+n)^(-s) in the generalised Cesaro sense;
// reduces to the classical sum for Re(s) > 1 and to zeta(s) at z0 = 0.
HurwitzResult hurwitz_zeta(Complex z0, Complex s);

Complex riemann_zeta(Complex s);

// b_n(z) = zeta(1-n) - zeta_H(z; 1-n); at positive integer z this is the
// power sum 1^(n-1) + ... + z^(n-1).
Complex b_polynomial(int n, Complex z);

// |central difference of b_n at z - (n-1)(b_{n-1}(z) - zeta(2-n))|
double b_derivative_residual(int n, Complex z, double h);

// ln Gamma(z0+1) via the accelerated constant extraction:
//   C = sum_{j<=k} ln(z0+j) - (z0+k+1/2)ln(z0+k) + (z0+k)
//       - 1/12 w^-1 + 1/360 w^-3 - 1/1260 w^-5      (terms per order)
// and log_value = ln(2 pi)/2 - C.
GammaResult log_gamma(Complex z0, int k = 64, int order = 3);

Complex gamma_fn(Complex z0);  // Gamma(z0), poles rejected

// Order-0 constant extraction pushed to the k -> infinity limit by
// extrapolation over checkpoints k_max/4, k_max/2, k_max.
Complex log_gamma_plain_extrapolated(Complex z0, long k_max);

// Staircase p-sum of the first log-derivative picture: (1/h)ln j - H_{j-1}
// on [j, j+h), -H_j on [j+h, j+1); averaged exactly at T.  Tends to minus the
// Euler-Mascheroni constant as T grows and h shrinks.
Complex gamma_staircase_derivative(double h, double T);

PSumTrace staircase_trace(double h, double T);
// All summands parked at the integers: the wrong-geometry variant whose
// average log-diverges.
PSumTrace staircase_naive_trace(double T);

// Euler-Mascheroni constant from the staircase at reference resolution,
// extrapolated over T; cached.
double euler_gamma_staircase();

// Taylor coefficient of ln Gamma(z+1) around 0: -gamma for n = 1,
// (-1)^n zeta(n)/n for n >= 2.
Complex gamma_taylor_coeff(int n);

// integral_{-1}^{0} zeta_H(z; s) dz; the lone singular summand is integrated
// in closed form and the shifted smooth remainder by composite quadrature.
Complex hurwitz_integral_identity(Complex s, int quad_points);

// sum_{j=1}^{p-1} zeta_H(-j/p; s) for prime p; equals (p^s - 1) zeta(s).
Complex hurwitz_prime_special_value(int p, Complex s);

// Wrong-variable control: the ln Gamma parameter expansion stripped in the
// arc-length variable.  Throws NotCesaroSummable for z0 off the origin.
void log_gamma_arclength_control(Complex z0);

bool is_prime(long p);

}  // namespace cesaro

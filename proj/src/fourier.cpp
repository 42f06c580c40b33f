#include "cesaro/fourier.hpp"

#include <cmath>

#include "cesaro/special.hpp"

namespace cesaro {

DistributionalFT ft_log_abs() {
  return {[](double xi) { return Complex(-0.5 / std::abs(xi), 0.0); },
          Complex(euler_gamma_staircase(), 0.0)};
}

DistributionalFT ft_one() {
  return {[](double) { return Complex(0.0, 0.0); }, Complex(1.0, 0.0)};
}

DistributionalFT ft_heaviside() {
  return {[](double xi) { return 1.0 / (2.0 * kPi * Complex(0.0, 1.0) * xi); },
          Complex(0.5, 0.0)};
}

Complex fourier_log_coeff_assembled(long n) {
  if (n == 0) throw DomainError("n = 0 carries the point mass; handled separately");
  // ln z = ln|z| + i pi (1 - u(z)) on the real line
  Complex ipi(0.0, kPi);
  double xi = static_cast<double>(n);
  return ft_log_abs().regular(xi) + ipi * ft_one().regular(xi) - ipi * ft_heaviside().regular(xi);
}

Complex fourier_coeff_closed_form(const SummandKind& kind, std::optional<Complex> s, long n) {
  switch (kind.tag) {
    case SummandKind::Tag::Log:
      if (n > 0) return Complex(-1.0 / static_cast<double>(n), 0.0);
      return 0.0;  // a_0 = 0 by the elementary averaging computation
    case SummandKind::Tag::Power: {
      Complex sv = s.value_or(kind.param);
      if (sv.real() <= 1.0 && n == 0)
        throw DomainError("n = 0 coefficient excluded for Re(s) <= 1");
      if (n < 0) return 0.0;
      if (n == 0) return 0.0;
      Complex phase = std::exp(Complex(0.0, -kPi / 2.0) * sv);
      Complex amp = std::exp(sv * std::log(Complex(2.0 * kPi, 0.0)));
      Complex npow = std::exp((sv - 1.0) * std::log(static_cast<double>(n)));
      return phase * amp * npow / gamma_fn(sv);
    }
    default:
      throw MisuseError("coefficients exist for Log and Power summands only");
  }
}

FourierCoefficientTable build_fourier_table(const SummandKind& kind, std::optional<Complex> s,
                                            long n_range) {
  FourierCoefficientTable table;
  table.kind = kind;
  table.s_param = s;
  table.n_range = n_range;
  for (long n = -n_range; n <= n_range; ++n) {
    if (n == 0 && kind.tag == SummandKind::Tag::Power &&
        s.value_or(kind.param).real() <= 1.0)
      continue;
    table.coeffs[n] = fourier_coeff_closed_form(kind, s, n);
  }
  return table;
}

Complex bidirectional_log_series(Complex z0, int terms) {
  if (z0.imag() <= 0.0) throw DomainError("series valid in the upper half-plane");
  Complex q = std::exp(2.0 * kPi * Complex(0.0, 1.0) * z0);
  Complex qn = 1.0;
  Complex acc = 0.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    acc -= qn / static_cast<double>(n);
  }
  return acc;
}

Complex bidirectional_log_closed_form(Complex z0) {
  if (z0.imag() <= 0.0)
    throw DomainError("closed form analysed for Im(z0) > 0; conjugate for the lower half-plane");
  // reduce to the period-1 representative with Re in (0, 1]
  double shift = std::floor(z0.real());
  Complex zr = z0 - shift;
  if (zr.real() == 0.0) zr += 1.0;
  Complex ipi(0.0, kPi);
  Complex value = ipi * (zr - 0.5) + std::log(2.0) + std::log(std::sin(kPi * zr));
  // the geometric series |e^{2 pi i z0}| < 1 guard and the route agreement
  Complex series = std::log(1.0 - std::exp(2.0 * kPi * Complex(0.0, 1.0) * zr));
  if (std::abs(value - series) > 1e-10 * (1.0 + std::abs(value)))
    throw NotCesaroSummable("closed form and Fourier series disagree",
                            "difference " + std::to_string(std::abs(value - series)));
  return value;
}

double verify_log_reflection(Complex z0) {
  if (z0.imag() < 0.0) throw DomainError("analysed domain is Im(z0) >= 0");
  if (is_nonpositive_integer(z0) || is_nonpositive_integer(1.0 - z0))
    throw PoleError("Gamma pole on the evaluation path");
  // R_{+,0}[ln](w) = ln(2 pi)/2 - ln Gamma(w)
  Complex lhs = (0.5 * kLn2Pi - log_gamma(z0 - 1.0).log_value) +
                (0.5 * kLn2Pi - log_gamma(-z0).log_value);
  Complex rhs = std::log(2.0) + std::log(std::sin(kPi * z0));
  return std::abs(lhs - rhs);
}

double zeta_functional_equation_residual(Complex s) {
  if (std::abs(s) < kIntSnapEps || std::abs(s - 1.0) < kIntSnapEps)
    throw DomainError("excluded points 0 and 1");
  Complex lhs = riemann_zeta(1.0 - s);
  Complex rhs = std::exp((1.0 - s) * std::log(2.0)) * std::exp(-s * std::log(kPi)) *
                std::cos(kPi * s / 2.0) * gamma_fn(s) * riemann_zeta(s);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

Complex alternating_series_clim(Complex s) {
  if (std::abs(s - 1.0) < kIntSnapEps) throw PoleError("excluded point s = 1");
  if (std::abs(s) < kIntSnapEps) return Complex(-std::log(2.0), 0.0);
  // even/odd split with the factor-2 dilation: (2^s - 1) zeta(1-s)
  return (std::exp(s * std::log(2.0)) - 1.0) * riemann_zeta(1.0 - s);
}

}  // namespace cesaro

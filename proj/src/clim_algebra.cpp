#include "cesaro/clim_algebra.hpp"

#include <cmath>

namespace cesaro {

void GeometricLimit::merge(const GeometricLimit& other) {
  value += other.value;
  if (log_obstruction.size() < other.log_obstruction.size())
    log_obstruction.resize(other.log_obstruction.size(), 0.0);
  for (size_t j = 0; j < other.log_obstruction.size(); ++j)
    log_obstruction[j] += other.log_obstruction[j];
  for (const auto& t : other.stripped.terms()) stripped.add(t);
  averaging_power = std::max(averaging_power, other.averaging_power);
}

double GeometricLimit::obstruction_norm() const {
  double acc = 0.0;
  for (const auto& c : log_obstruction) acc += std::abs(c);
  return acc;
}

std::vector<Complex> power_log_derivative_coeffs(Complex rho, int log_power, int order) {
  // D(0) = delta at ln^m; D(i+1)[j] = (rho - i) D(i)[j] + (j+1) D(i)[j+1]
  std::vector<Complex> d(static_cast<size_t>(log_power) + 1, 0.0);
  d[static_cast<size_t>(log_power)] = 1.0;
  for (int i = 0; i < order; ++i) {
    std::vector<Complex> next(d.size(), 0.0);
    for (size_t j = 0; j < d.size(); ++j) {
      next[j] += (rho - static_cast<double>(i)) * d[j];
      if (j + 1 < d.size()) next[j] += static_cast<double>(j + 1) * d[j + 1];
    }
    d.swap(next);
  }
  return d;
}

namespace {

// Shared assembly: expand w^rho ln^m w around w = z (or w = t) to alpha order
// i_max, project the sawtooth means, and classify each emitted term.
// offset_moments[i] = mean over one period of the i-th power of the offset
// (w = base_variable + offset), already divided by i!.
GeometricLimit assemble(Complex coeff, Complex rho, int log_power,
                        const std::vector<Complex>& offset_moments, bool record_stripped) {
  GeometricLimit out;
  long rho_int = -1;
  bool integer_rho = false;
  {
    long n;
    if (nearest_nonneg_int(rho, n)) {
      integer_rho = true;
      rho_int = n;
    }
  }
  int i_max = static_cast<int>(offset_moments.size()) - 1;
  for (int i = 0; i <= i_max; ++i) {
    if (std::abs(offset_moments[static_cast<size_t>(i)]) == 0.0) continue;
    std::vector<Complex> d = power_log_derivative_coeffs(rho, log_power, i);
    Complex sigma = rho - static_cast<double>(i);
    Complex factor = coeff * offset_moments[static_cast<size_t>(i)];
    bool sigma_zero = integer_rho && rho_int == i;
    for (size_t j = 0; j < d.size(); ++j) {
      Complex c = factor * d[j];
      if (std::abs(c) < kCoeffEps) continue;
      if (sigma_zero) {
        if (j == 0) {
          out.value += c;
        } else {
          if (out.log_obstruction.size() < j) out.log_obstruction.resize(j, 0.0);
          out.log_obstruction[j - 1] += c;
        }
      } else if (record_stripped && sigma.real() > -1e-9) {
        out.stripped.add({c, sigma, static_cast<int>(j), 0});
        if (sigma.real() > 1e-9) out.averaging_power = std::max(out.averaging_power, i);
      }
    }
    // polynomial case terminates exactly
    if (integer_rho && log_power == 0 && i >= rho_int) break;
  }
  return out;
}

int alpha_depth(Complex rho) {
  double re = rho.real();
  int d = re <= 0.0 ? 0 : static_cast<int>(std::ceil(re));
  return d + 1;  // one past the last slot that can reach z-power 0
}

}  // namespace

GeometricLimit clim_power_log(Complex coeff, Complex rho, int log_power, Complex d_unit,
                              double spacing) {
  if (spacing <= 0.0) throw DomainError("summand spacing must be positive");
  int i_max = alpha_depth(rho);
  // offset = -d*alpha: moment_i = (-d)^i * mean(alpha^i) / i! with
  // mean(alpha^i) = spacing^i / (i+1)
  std::vector<Complex> moments(static_cast<size_t>(i_max) + 1);
  Complex p = 1.0;
  double fact = 1.0;
  for (int i = 0; i <= i_max; ++i) {
    moments[static_cast<size_t>(i)] = p / (fact * (i + 1.0));
    p *= -d_unit * spacing;
    fact *= (i + 1.0);
  }
  GeometricLimit out = assemble(coeff, rho, log_power, moments, true);
  // formal averaging power: residual alpha-degree at growing slots
  long n;
  if (nearest_nonneg_int(rho, n) && n >= 1)
    out.averaging_power = std::max(out.averaging_power, static_cast<int>(n));
  return out;
}

GeometricLimit clim_power_log_arclength(Complex coeff, Complex rho, int log_power, Complex z0,
                                        double spacing) {
  if (spacing <= 0.0) throw DomainError("summand spacing must be positive");
  int i_max = alpha_depth(rho);
  // offset = z0 - alpha: moment_i = mean((z0 - alpha)^i) / i!
  std::vector<Complex> moments(static_cast<size_t>(i_max) + 1);
  for (int i = 0; i <= i_max; ++i) {
    Complex acc = 0.0;
    double binom = 1.0;
    Complex z0pow = 1.0;
    // sum_l C(i,l) z0^(i-l) (-1)^l spacing^l/(l+1)
    std::vector<Complex> z0_powers(static_cast<size_t>(i) + 1);
    z0pow = 1.0;
    for (int l = 0; l <= i; ++l) {
      z0_powers[static_cast<size_t>(l)] = z0pow;
      z0pow *= z0;
    }
    binom = 1.0;
    double sp = 1.0;
    for (int l = 0; l <= i; ++l) {
      acc += binom * z0_powers[static_cast<size_t>(i - l)] * ((l % 2 == 0) ? 1.0 : -1.0) * sp /
             (l + 1.0);
      binom = binom * (i - l) / (l + 1.0);
      sp *= spacing;
    }
    double fact = 1.0;
    for (int q = 2; q <= i; ++q) fact *= q;
    moments[static_cast<size_t>(i)] = acc / fact;
  }
  GeometricLimit out = assemble(coeff, rho, log_power, moments, true);
  out.stripped.set_geometric(false);
  long n;
  if (nearest_nonneg_int(rho, n) && n >= 1)
    out.averaging_power = std::max(out.averaging_power, static_cast<int>(n));
  return out;
}

GeometricLimit clim_parameter_terms(const std::vector<ParameterTerm>& terms, Complex d_unit,
                                    double spacing, bool strip_in_arc_length, Complex z0) {
  GeometricLimit out;
  for (const auto& t : terms) {
    Complex c = t.coeff_narrow();
    GeometricLimit g = strip_in_arc_length
                           ? clim_power_log_arclength(c, t.rho, t.log_power, z0, spacing)
                           : clim_power_log(c, t.rho, t.log_power, d_unit, spacing);
    out.merge(g);
  }
  return out;
}

}  // namespace cesaro

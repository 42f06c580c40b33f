#include "cesaro/euler_maclaurin.hpp"

#include <cmath>

namespace cesaro {

namespace {

Complex falling_factorial(Complex a, int m) {
  Complex acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= (a - static_cast<double>(i));
  return acc;
}

WideComplex falling_factorial_wide(Complex a, int m) {
  WideComplex acc = 1.0L;
  WideComplex aw(a.real(), a.imag());
  for (int i = 0; i < m; ++i) acc *= (aw - static_cast<WideReal>(i));
  return acc;
}

WideComplex eval_power_log_wide(Complex w, Complex rho, int m) {
  WideComplex ww(w.real(), w.imag());
  WideComplex lw = std::log(ww);
  WideComplex v;
  long n;
  if (nearest_nonneg_int(rho, n)) {
    v = 1.0L;
    for (long q = 0; q < n; ++q) v *= ww;
  } else {
    v = std::exp(WideComplex(rho.real(), rho.imag()) * lw);
  }
  for (int i = 0; i < m; ++i) v *= lw;
  return v;
}

// Neumaier-compensated accumulator over long doubles, per component.
struct Accumulator {
  WideReal sum = 0.0L, comp = 0.0L;
  void add(WideReal x) {
    WideReal t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  WideReal total() const { return sum + comp; }
};

struct ComplexAccumulator {
  Accumulator re, im;
  void add(WideComplex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  Complex total() const {
    return {static_cast<double>(re.total()), static_cast<double>(im.total())};
  }
};

// k-independent w^0 ln^0 slots belong to the folded constant, not the
// parameter expansion.
void drop_constant_slots(std::vector<ParameterTerm>& terms) {
  std::erase_if(terms, [](const ParameterTerm& t) {
    long n;
    return t.log_power == 0 && nearest_nonneg_int(t.rho, n) && n == 0;
  });
}

}  // namespace

std::vector<ParameterTerm> em_parameter_terms_log(double u, int order) {
  std::vector<ParameterTerm> terms;
  // integral term (w ln w - w)/u, half-term (1/2) ln w
  WideReal uw = u;
  terms.push_back({WideComplex(1.0L / uw), 1.0, 1});
  terms.push_back({WideComplex(-1.0L / uw), 1.0, 0});
  terms.push_back({WideComplex(0.5L), 0.0, 1});
  const auto& B = BernoulliTable::standard();
  WideReal upow = uw;  // u^(2r-1)
  for (int r = 1; r <= order; ++r) {
    // B_2r/(2r)! * u^(2r-1) * f^(2r-1)(w), f^(m)(w) = (-1)^(m-1) (m-1)! w^(-m)
    WideReal coeff = B.value_wide(2 * r) / (2.0L * r * (2.0L * r - 1.0L)) * upow;
    terms.push_back({WideComplex(coeff), Complex(1.0 - 2.0 * r), 0});
    upow *= uw * uw;
  }
  drop_constant_slots(terms);
  return terms;
}

std::vector<ParameterTerm> em_parameter_terms_power(Complex s, double u, int order) {
  if (std::abs(s - 1.0) < kIntSnapEps)
    throw DomainError("harmonic exponent: leading term is logarithmic");
  std::vector<ParameterTerm> terms;
  WideComplex sw(s.real(), s.imag());
  WideReal uw = u;
  terms.push_back({WideComplex(1.0L) / (uw * (WideComplex(1.0L) - sw)), 1.0 - s, 0});
  terms.push_back({WideComplex(0.5L), -s, 0});
  const auto& B = BernoulliTable::standard();
  WideReal fact = 2.0L;  // (2r)!
  WideReal upow = uw;
  for (int r = 1; r <= order; ++r) {
    WideComplex coeff =
        B.value_wide(2 * r) / fact * falling_factorial_wide(-s, 2 * r - 1) * upow;
    terms.push_back({coeff, -s - (2.0 * r - 1.0), 0});
    fact *= (2.0L * r + 1.0L) * (2.0L * r + 2.0L);
    upow *= uw * uw;
  }
  drop_constant_slots(terms);
  return terms;
}

double em_tail_estimate_log(double u, int order, Complex w) {
  const auto& B = BernoulliTable::standard();
  int r = order + 1;
  if (2 * r > B.max_index()) r = B.max_index() / 2;
  double coeff = std::abs(B.value(2 * r)) / (2.0 * r * (2.0 * r - 1.0)) *
                 std::pow(std::abs(u), 2 * r - 1);
  return coeff * std::pow(std::abs(w), 1.0 - 2.0 * r);
}

double em_tail_estimate_power(Complex s, double u, int order, Complex w) {
  const auto& B = BernoulliTable::standard();
  int r = order + 1;
  if (2 * r > B.max_index()) r = B.max_index() / 2;
  double fact = 1.0;
  for (int i = 2; i <= 2 * r; ++i) fact *= i;
  double coeff = std::abs(B.value(2 * r)) / fact *
                 std::abs(falling_factorial(-s, 2 * r - 1)) * std::pow(std::abs(u), 2 * r - 1);
  return coeff * std::pow(std::abs(w), -s.real() - (2.0 * r - 1.0));
}

namespace {

EMExpansion finish_expansion(SummandSeries series, int order) {
  EMExpansion em;
  em.truncation_order = order;
  em.parameter_terms = series.parameter_terms;
  em.constant = em_constant_from_series(series);

  GeometricLimit lim = clim_parameter_terms(em.parameter_terms, Complex(1.0, 0.0), 1.0);
  if (lim.obstruction_norm() > 1e-9)
    throw NotCesaroSummable("parameter expansion leaves a pure-log residual");
  em.limit_value = em.constant + lim.value;
  em.smooth_part = lim.stripped;
  em.smooth_part.set_geometric(true);
  em.averaging_power = lim.averaging_power;

  const auto& B = BernoulliTable::standard();
  for (int r = 1; r <= order; ++r)
    em.correction_terms.push_back({r, Complex(-B.value(2 * r) / (2.0 * r * (2.0 * r - 1.0)))});
  return em;
}

}  // namespace

Complex em_constant_from_series(const SummandSeries& series) {
  ComplexAccumulator acc;
  for (const WideComplex& v : series.values) acc.add(v);
  for (const auto& term : series.parameter_terms)
    acc.add(-term.coeff * eval_power_log_wide(series.w, term.rho, term.log_power));
  return acc.total();
}

EMExpansion em_log_expansion(Complex z0, int order, int k) {
  if (is_negative_integer(z0))
    throw PoleError("logarithm summand hits a pole at j = -z0");
  if (order < 0 || order > 12) throw DomainError("correction order out of range");
  if (k < 4) throw DomainError("constant extraction needs k >= 4");
  SummandSeries series;
  series.parameter_terms = em_parameter_terms_log(1.0, order);
  series.values.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    Complex base = z0 + static_cast<double>(j);
    series.values.push_back(std::log(WideComplex(base.real(), base.imag())));
  }
  series.w = z0 + static_cast<double>(k);
  return finish_expansion(std::move(series), order);
}

EMExpansion em_power_expansion(Complex z0, Complex s, int order, int k) {
  if (order < 0 || order > 12) throw DomainError("correction order out of range");
  if (k < 4) throw DomainError("constant extraction needs k >= 4");
  long neg_pow;
  bool polynomial = nearest_nonneg_int(-s, neg_pow);
  if (!polynomial && is_negative_integer(z0))
    throw PoleError("summand (z0+j)^(-s) hits a pole at j = -z0");
  if (polynomial && order < static_cast<int>(neg_pow / 2 + 1))
    order = static_cast<int>(neg_pow / 2 + 1);
  SummandSeries series;
  series.parameter_terms = em_parameter_terms_power(s, 1.0, order);
  series.values.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    Complex base = z0 + static_cast<double>(j);
    WideComplex wb(base.real(), base.imag());
    if (polynomial) {
      WideComplex v = 1.0L;
      for (long q = 0; q < neg_pow; ++q) v *= wb;
      series.values.push_back(v);
    } else {
      series.values.push_back(std::exp(-WideComplex(s.real(), s.imag()) * std::log(wb)));
    }
  }
  series.w = z0 + static_cast<double>(k);
  return finish_expansion(std::move(series), order);
}

RegeometrizedSeries binomial_regeometrize(const ParameterTerm& term, Complex z0, int depth,
                                          Complex d_unit) {
  (void)z0;  // the expansion coefficients do not depend on the base point
  if (depth < 1) throw DomainError("regeometrisation depth must be >= 1");
  RegeometrizedSeries out;
  out.expansion.set_geometric(true);
  double fact = 1.0;
  Complex dp = 1.0;
  for (int i = 0; i < depth; ++i) {
    std::vector<Complex> d = power_log_derivative_coeffs(term.rho, term.log_power, i);
    for (size_t j = 0; j < d.size(); ++j) {
      Complex c = term.coeff_narrow() * dp / fact * d[j];
      if (std::abs(c) >= kCoeffEps)
        out.expansion.add({c, term.rho - static_cast<double>(i), static_cast<int>(j), i});
    }
    dp *= -d_unit;
    fact *= (i + 1.0);
  }
  std::vector<Complex> d = power_log_derivative_coeffs(term.rho, term.log_power, depth);
  double mag = 0.0;
  for (const auto& c : d) mag += std::abs(term.coeff_narrow() * c);
  for (int q = 2; q <= depth; ++q) mag /= q;
  out.remainder_bound = mag;
  out.remainder_power = term.rho - static_cast<double>(depth);
  return out;
}

AsymptoticExpansion alpha_mean_fold(const AsymptoticExpansion& series, double spacing) {
  AsymptoticExpansion out;
  out.set_geometric(series.geometric());
  for (const auto& t : series.terms()) {
    double mean = std::pow(spacing, t.alpha_power) / (t.alpha_power + 1.0);
    AsymptoticTerm folded{t.coeff * mean, t.power, t.log_power, 0};
    if (!folded.is_constant()) out.add(folded);
  }
  return out;
}

}  // namespace cesaro

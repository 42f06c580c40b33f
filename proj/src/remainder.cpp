#include "cesaro/remainder.hpp"

#include <cmath>

namespace cesaro {

namespace {

bool polynomial_power(const SummandKind& f, long& n) {
  return f.tag == SummandKind::Tag::Power && nearest_nonneg_int(-f.param, n);
}

// j >= 1 with z0 + u*j == 0, if any
bool pole_index(Complex z0, double u, long& j) {
  Complex v = -z0 / u;
  if (std::abs(v.imag()) > kIntSnapEps) return false;
  double r = std::round(v.real());
  if (r < 0.5 || std::abs(v.real() - r) > kIntSnapEps) return false;
  j = static_cast<long>(r);
  return true;
}

void check_included_points(const SummandKind& f, Complex z0, double u, bool include_zero) {
  long n;
  if (polynomial_power(f, n) || f.tag == SummandKind::Tag::Const) return;
  long j;
  if (pole_index(z0, u, j))
    throw PoleError("summand pole at included point j = " + std::to_string(j));
  if (include_zero && std::abs(z0) < kIntSnapEps)
    throw PoleError("summand pole at the base point itself");
}

CesaroOutcome outcome_from_expansion(const EMExpansion& em, double tail) {
  CesaroOutcome out;
  out.limit = em.limit_value;
  out.averaging_power = em.averaging_power;
  out.stripped = em.smooth_part;
  out.tail_estimate = tail;
  return out;
}

}  // namespace

Complex SummandKind::operator()(Complex z) const {
  switch (tag) {
    case Tag::Const:
      return param;
    case Tag::Log:
      if (z == 0.0) throw PoleError("log of zero");
      return std::log(z);
    default: {
      long n;
      if (nearest_nonneg_int(-param, n)) {
        Complex v = 1.0;
        for (long q = 0; q < n; ++q) v *= z;
        return v;
      }
      if (z == 0.0) throw PoleError("zero base with non-polynomial exponent");
      return std::exp(-param * std::log(z));
    }
  }
}

EMExpansion remainder_expansion(const SummandKind& f, Complex z0, double sign, double spacing,
                                const RemainderOptions& opt) {
  double u = sign * spacing;
  check_included_points(f, z0, u, false);
  SummandSeries series;
  int order = opt.order;
  int k = opt.k;
  long n = 0;
  bool polynomial = polynomial_power(f, n);
  if (polynomial) {
    if (order < static_cast<int>(n / 2 + 1)) order = static_cast<int>(n / 2 + 1);
    // the expansion is exact for polynomial summands; small k keeps the
    // subtracted magnitudes (and hence rounding amplification) small
    k = std::min(k, std::max(12, static_cast<int>(n) + 4));
  }
  switch (f.tag) {
    case SummandKind::Tag::Const:
      // sum of c is c*k = c*(w - z0)/u
      series.parameter_terms = {{WideComplex(f.param.real(), f.param.imag()) / WideReal(u),
                                 1.0, 0}};
      break;
    case SummandKind::Tag::Log:
      series.parameter_terms = em_parameter_terms_log(u, order);
      break;
    default:
      series.parameter_terms = em_parameter_terms_power(f.param, u, order);
      break;
  }
  series.values.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    Complex base = z0 + u * static_cast<double>(j);
    WideComplex wb(base.real(), base.imag());
    switch (f.tag) {
      case SummandKind::Tag::Const:
        series.values.push_back(WideComplex(f.param.real(), f.param.imag()));
        break;
      case SummandKind::Tag::Log:
        series.values.push_back(std::log(wb));
        break;
      default:
        if (polynomial) {
          WideComplex v = 1.0L;
          for (long q = 0; q < n; ++q) v *= wb;
          series.values.push_back(v);
        } else {
          series.values.push_back(
              std::exp(-WideComplex(f.param.real(), f.param.imag()) * std::log(wb)));
        }
        break;
    }
  }
  series.w = z0 + u * static_cast<double>(k);

  if (opt.strip_in_arc_length && sign < 0.0)
    throw MisuseError("arc-length stripping is a positive-ray diagnostic");
  EMExpansion em;
  em.truncation_order = order;
  em.parameter_terms = series.parameter_terms;
  em.constant = em_constant_from_series(series);
  GeometricLimit lim =
      clim_parameter_terms(em.parameter_terms, Complex(sign > 0 ? 1.0 : -1.0, 0.0), spacing,
                           opt.strip_in_arc_length, z0);
  if (lim.obstruction_norm() > 1e-9)
    throw NotCesaroSummable("remainder expansion leaves a pure-log residual",
                            "net ln coefficient " + std::to_string(lim.obstruction_norm()));
  em.limit_value = em.constant + lim.value;
  em.smooth_part = lim.stripped;
  em.averaging_power = lim.averaging_power;
  return em;
}

CesaroOutcome remainder_sum_spaced(const SummandKind& f, Complex z0, double spacing,
                                   bool negative, const RemainderOptions& opt) {
  double sign = negative ? -1.0 : 1.0;
  EMExpansion em = remainder_expansion(f, z0, sign, spacing, opt);
  double tail = 0.0;
  if (f.tag == SummandKind::Tag::Log)
    tail = em_tail_estimate_log(sign * spacing, em.truncation_order, z0 + sign * spacing * opt.k);
  else if (f.tag == SummandKind::Tag::Power)
    tail = em_tail_estimate_power(f.param, sign * spacing, em.truncation_order,
                                  z0 + sign * spacing * opt.k);
  return outcome_from_expansion(em, tail);
}

CesaroOutcome remainder_sum(const SummandKind& f, Complex z0, DirectionSpec dir,
                            const RemainderOptions& opt) {
  switch (dir) {
    case DirectionSpec::Plus:
      return remainder_sum_spaced(f, z0, 1.0, false, opt);
    case DirectionSpec::Minus:
      return remainder_sum_spaced(f, z0, 1.0, true, opt);
    case DirectionSpec::PlusZero: {
      check_included_points(f, z0, 1.0, true);
      CesaroOutcome out = remainder_sum_spaced(f, z0, 1.0, false, opt);
      out.limit += f(z0);
      return out;
    }
    case DirectionSpec::MinusZero: {
      check_included_points(f, z0, -1.0, true);
      CesaroOutcome out = remainder_sum_spaced(f, z0, 1.0, true, opt);
      out.limit += f(z0);
      return out;
    }
    default: {
      CesaroOutcome plus0 = remainder_sum(f, z0, DirectionSpec::PlusZero, opt);
      CesaroOutcome minus = remainder_sum(f, z0, DirectionSpec::Minus, opt);
      CesaroOutcome out;
      out.limit = plus0.limit + minus.limit;
      out.averaging_power = std::max(plus0.averaging_power, minus.averaging_power);
      out.stripped = plus0.stripped;
      for (const auto& t : minus.stripped.terms()) out.stripped.add(t);
      out.tail_estimate = plus0.tail_estimate + minus.tail_estimate;
      return out;
    }
  }
}

Complex finite_sum(const SummandKind& f, Complex upper, const RemainderOptions& opt) {
  CesaroOutcome at_zero = remainder_sum(f, 0.0, DirectionSpec::Plus, opt);
  CesaroOutcome at_upper = remainder_sum(f, upper, DirectionSpec::Plus, opt);
  return at_zero.limit - at_upper.limit;
}

namespace {

// ln of the summand as another supported summand, scaled:  ln(z^-s) = -s ln z,
// ln(c) = const.  Returns the scale applied to the Log case.
SummandKind log_of(const SummandKind& f, Complex& scale) {
  scale = 1.0;
  switch (f.tag) {
    case SummandKind::Tag::Const:
      return SummandKind::constant(std::log(f.param));
    case SummandKind::Tag::Power:
      scale = -f.param;
      return SummandKind::log();
    default:
      throw MisuseError("remainder product of a log summand is not supported");
  }
}

}  // namespace

Complex remainder_product(const SummandKind& f, Complex z0, DirectionSpec dir,
                          const RemainderOptions& opt) {
  Complex scale;
  SummandKind lf = log_of(f, scale);
  CesaroOutcome sum = remainder_sum(lf, z0, dir, opt);
  return std::exp(scale * sum.limit);
}

Complex finite_product(const SummandKind& f, Complex upper, const RemainderOptions& opt) {
  Complex scale;
  SummandKind lf = log_of(f, scale);
  return std::exp(scale * finite_sum(lf, upper, opt));
}

PSumTrace remainder_trace(const SummandKind& f, Complex z0, bool negative, int count,
                          double spacing) {
  double u = (negative ? -1.0 : 1.0) * spacing;
  check_included_points(f, z0, u, false);
  std::vector<Complex> values;
  values.reserve(static_cast<size_t>(count));
  for (int j = 1; j <= count; ++j) values.push_back(f(z0 + u * static_cast<double>(j)));
  Ray ray(z0, negative ? RayDirection::NegReal : RayDirection::PosReal);
  return partial_sum_trace(ray, values, spacing);
}

}  // namespace cesaro

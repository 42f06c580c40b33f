#include "cesaro/trace.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

void AsymptoticExpansion::add(const AsymptoticTerm& term) {
  if (term.log_power < 0 || term.alpha_power < 0)
    throw MisuseError("negative log/alpha power in expansion term");
  for (auto& t : terms_) {
    if (t.log_power == term.log_power && t.alpha_power == term.alpha_power &&
        std::abs(t.power - term.power) < kIntSnapEps) {
      t.coeff += term.coeff;
      if (std::abs(t.coeff) < kCoeffEps) {
        terms_.erase(terms_.begin() + (&t - terms_.data()));
      }
      return;
    }
  }
  if (std::abs(term.coeff) >= kCoeffEps) terms_.push_back(term);
}

Complex AsymptoticExpansion::evaluate(Complex z, double alpha) const {
  Complex acc = 0.0;
  for (const auto& t : terms_) {
    Complex v = t.coeff;
    if (t.power != 0.0) v *= std::pow(z, t.power);
    if (t.log_power > 0) {
      Complex lz = std::log(z);
      for (int m = 0; m < t.log_power; ++m) v *= lz;
    }
    for (int a = 0; a < t.alpha_power; ++a) v *= alpha;
    acc += v;
  }
  return acc;
}

AsymptoticExpansion AsymptoticExpansion::dilated(double r) const {
  AsymptoticExpansion out;
  out.set_geometric(geometric_);
  double lr = std::log(r);
  for (const auto& t : terms_) {
    Complex rp = std::pow(Complex(r, 0.0), t.power);
    // (ln(rz))^m = sum_l C(m,l) (ln r)^(m-l) (ln z)^l
    double binom = 1.0;
    for (int l = t.log_power; l >= 0; --l) {
      double lr_pow = std::pow(lr, t.log_power - l);
      out.add({t.coeff * rp * binom * lr_pow, t.power, l, t.alpha_power});
      binom = binom * l / static_cast<double>(t.log_power - l + 1);
    }
  }
  return out;
}

AsymptoticExpansion AsymptoticExpansion::scaled(Complex factor) const {
  AsymptoticExpansion out;
  out.set_geometric(geometric_);
  for (auto t : terms_) {
    t.coeff *= factor;
    out.add(t);
  }
  return out;
}

AsymptoticExpansion AsymptoticExpansion::plus(const AsymptoticExpansion& other) const {
  if (geometric_ != other.geometric_)
    throw MisuseError("adding expansions in different variables");
  AsymptoticExpansion out = *this;
  for (const auto& t : other.terms_) out.add(t);
  return out;
}

Complex principal_log_sided(Complex z, int side) {
  if (side != 0 && z.imag() == 0.0 && z.real() < 0.0)
    return {std::log(-z.real()), side > 0 ? kPi : -kPi};
  return std::log(z);
}

Complex power_log_antiderivative(Complex z, Complex power, int log_power, int side) {
  if (z == 0.0) {
    // limit as z -> 0 of the expressions below; finite for Re(power) > -1
    if (power.real() <= -1.0) throw DomainError("antiderivative singular at contour origin");
    return 0.0;
  }
  Complex lz = principal_log_sided(z, side);
  if (std::abs(power + 1.0) < kIntSnapEps) {
    // integral of ln^m z / z = ln^{m+1} z / (m+1)
    Complex acc = 1.0;
    for (int i = 0; i <= log_power; ++i) acc *= lz;
    return acc / static_cast<double>(log_power + 1);
  }
  // integral z^p ln^m z dz = z^{p+1} sum_{l=0}^{m} (-1)^l m!/(m-l)! ln^{m-l} z / (p+1)^{l+1}
  Complex zp1 = std::exp((power + 1.0) * lz);
  Complex acc = 0.0;
  double fact = 1.0;  // m!/(m-l)!
  Complex denom = power + 1.0;
  for (int l = 0; l <= log_power; ++l) {
    Complex lnpow = 1.0;
    for (int i = 0; i < log_power - l; ++i) lnpow *= lz;
    acc += ((l % 2 == 0) ? 1.0 : -1.0) * fact * lnpow / denom;
    fact *= static_cast<double>(log_power - l);
    denom *= (power + 1.0);
  }
  return zp1 * acc;
}

PSumTrace::PSumTrace(Ray ray, std::vector<Jump> jumps) : ray_(ray), jumps_(std::move(jumps)) {
  for (size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i].t < 0.0) throw DomainError("trace jump at negative arc length");
    if (i > 0 && jumps_[i].t <= jumps_[i - 1].t)
      throw DomainError("trace jumps must be strictly increasing");
  }
  build_prefix();
}

void PSumTrace::build_prefix() {
  prefix_.resize(jumps_.size());
  WideComplex acc = 0.0L;
  for (size_t i = 0; i < jumps_.size(); ++i) {
    prefix_[i] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    if (i + 1 < jumps_.size()) {
      WideReal len = static_cast<WideReal>(jumps_[i + 1].t) - static_cast<WideReal>(jumps_[i].t);
      acc += WideComplex(jumps_[i].value.real(), jumps_[i].value.imag()) * len;
    }
  }
}

Complex PSumTrace::value(double t) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t,
                             [](double x, const Jump& j) { return x < j.t; });
  if (it == jumps_.begin()) return 0.0;  // empty sum before the first jump
  return std::prev(it)->value;
}

Complex PSumTrace::prefix_integral(double t) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t,
                             [](double x, const Jump& j) { return x < j.t; });
  if (it == jumps_.begin()) return 0.0;
  size_t i = static_cast<size_t>(std::prev(it) - jumps_.begin());
  return prefix_[i] + jumps_[i].value * (t - jumps_[i].t);
}

PSumTrace PSumTrace::scaled(Complex factor) const {
  std::vector<Jump> j = jumps_;
  for (auto& e : j) e.value *= factor;
  return PSumTrace(ray_, std::move(j));
}

PSumTrace PSumTrace::plus(const PSumTrace& other) const {
  if (ray_.base != other.ray_.base || ray_.direction != other.ray_.direction)
    throw MisuseError("adding traces on different rays");
  std::vector<Jump> merged;
  merged.reserve(jumps_.size() + other.jumps_.size());
  size_t a = 0, b = 0;
  while (a < jumps_.size() || b < other.jumps_.size()) {
    double ta = a < jumps_.size() ? jumps_[a].t : 1e308;
    double tb = b < other.jumps_.size() ? other.jumps_[b].t : 1e308;
    double t = std::min(ta, tb);
    if (ta <= t) ++a;
    if (tb <= t) ++b;
    Complex va = a > 0 ? jumps_[a - 1].value : Complex(0.0);
    Complex vb = b > 0 ? other.jumps_[b - 1].value : Complex(0.0);
    merged.push_back({t, va + vb});
  }
  return PSumTrace(ray_, std::move(merged));
}

Complex apply_P_exact(const PSumTrace& trace, double t) {
  if (t <= 0.0) throw DomainError("averaging operator requires t > 0");
  return trace.prefix_integral(t) / t;
}

Complex eigenvalue_of_P(Complex power) {
  if (std::abs(power + 1.0) < kIntSnapEps)
    throw DomainError("z^-1 is not an eigenfunction of the averaging operator");
  return 1.0 / (power + 1.0);
}

PSumTrace constant_trace(const Ray& ray, Complex value, double horizon) {
  (void)horizon;
  return PSumTrace(ray, {{0.0, value}});
}

PSumTrace partial_sum_trace(const Ray& ray, const std::vector<Complex>& values, double spacing) {
  if (spacing <= 0.0) throw DomainError("summand spacing must be positive");
  std::vector<PSumTrace::Jump> jumps;
  jumps.reserve(values.size());
  WideComplex acc = 0.0L;
  for (size_t j = 0; j < values.size(); ++j) {
    acc += WideComplex(values[j].real(), values[j].imag());
    jumps.push_back({spacing * static_cast<double>(j + 1),
                     Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()))});
  }
  return PSumTrace(ray, std::move(jumps));
}

}  // namespace cesaro

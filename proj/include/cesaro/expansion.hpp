#pragma once

#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

// One term a * z^power * (ln z)^log_power, optionally carrying a sawtooth
// factor alpha^alpha_power (alpha = arc length past the last summand).
// Terms with alpha_power > 0 arise from re-expanding parameter-variable
// powers in the geometric variable; only alpha-free terms are eigenfunction
// candidates and may be stripped.
struct AsymptoticTerm {
  Complex coeff;
  Complex power;
  int log_power = 0;
  int alpha_power = 0;

  bool is_constant() const {
    return log_power == 0 && alpha_power == 0 && std::abs(power) < kIntSnapEps;
  }
};

class AsymptoticExpansion {
 public:
  AsymptoticExpansion() = default;
  AsymptoticExpansion(std::vector<AsymptoticTerm> terms, bool geometric)
      : geometric_(geometric) {
    for (const auto& t : terms) add(t);
  }

  // Merges on the (power, log_power, alpha_power) key; drops coefficients
  // below kCoeffEps.
  void add(const AsymptoticTerm& term);

  const std::vector<AsymptoticTerm>& terms() const { return terms_; }
  bool geometric() const { return geometric_; }
  void set_geometric(bool g) { geometric_ = g; }
  bool empty() const { return terms_.empty(); }

  bool alpha_free() const {
    for (const auto& t : terms_)
      if (t.alpha_power != 0) return false;
    return true;
  }

  // Evaluate sum of terms at geometric point z with sawtooth value alpha.
  Complex evaluate(Complex z, double alpha = 0.0) const;

  // Image under z -> r z: a z^p ln^m z picks up r^p and the ln r binomial
  // cascade onto lower log powers.
  AsymptoticExpansion dilated(double r) const;

  AsymptoticExpansion scaled(Complex factor) const;
  AsymptoticExpansion plus(const AsymptoticExpansion& other) const;

 private:
  std::vector<AsymptoticTerm> terms_;
  bool geometric_ = true;
};

// Principal-branch log with an explicit side for points on the negative real
// axis: side > 0 gives +i*pi, side < 0 gives -i*pi, side == 0 the std value.
Complex principal_log_sided(Complex z, int side);

// Antiderivative in z of z^power (ln z)^log_power (principal branch).
Complex power_log_antiderivative(Complex z, Complex power, int log_power, int side = 0);

}  // namespace cesaro

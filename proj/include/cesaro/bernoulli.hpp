#pragma once

#include <cstdint>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

// Exact rational with 64-bit numerator/denominator, gcd-reduced, 128-bit
// intermediates.  Covers Bernoulli numbers through B_30 comfortably
// (B_30 = 8615841276005/14322).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Bernoulli numbers B_0..B_max_index as exact rationals (B_1 = -1/2 in the
// recursive convention; the Euler-Maclaurin assembly only consumes the even
// ones plus the explicit half-term).
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_index = 30);

  const Rational& exact(int n) const { return values_.at(static_cast<size_t>(n)); }
  double value(int n) const { return exact(n).to_double(); }
  long double value_wide(int n) const {
    const Rational& r = exact(n);
    return static_cast<long double>(r.num) / static_cast<long double>(r.den);
  }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }

  // Shared table for the default range [0, 30].
  static const BernoulliTable& standard();

 private:
  std::vector<Rational> values_;
};

// Exact binomial coefficient C(n, k) as a rational (integer-valued).
Rational binomial_rational(int n, int k);

// Generalised binomial coefficient C(rho, i) = rho(rho-1)...(rho-i+1)/i!.
Complex binomial_general(Complex rho, int i);

}  // namespace cesaro

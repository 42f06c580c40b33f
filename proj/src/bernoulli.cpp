#include "cesaro/bernoulli.hpp"

#include <numeric>
#include <stdexcept>

namespace cesaro {

namespace {

std::int64_t checked_narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) { n /= g; d /= g; }
  num = n;
  den = d;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  // reduce in 128-bit before narrowing
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 a = abs128(n), b = abs128(d);
  while (b) { __int128 t = a % b; a = b; b = t; }
  if (a > 1) { n /= a; d /= a; }
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }

Rational Rational::operator*(const Rational& o) const {
  Rational x(num, o.den);      // cross-reduce
  Rational y(o.num, den);
  __int128 n = static_cast<__int128>(x.num) * y.num;
  __int128 d = static_cast<__int128>(x.den) * y.den;
  return Rational(checked_narrow(n), checked_narrow(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::domain_error("rational division by zero");
  return *this * Rational(o.den, o.num);
}

BernoulliTable::BernoulliTable(int max_index) {
  // B_n from the recursion sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
  values_.reserve(static_cast<size_t>(max_index) + 1);
  values_.push_back(Rational(1));
  for (int n = 1; n <= max_index; ++n) {
    Rational acc(0);
    for (int k = 0; k < n; ++k)
      acc = acc + binomial_rational(n + 1, k) * values_[static_cast<size_t>(k)];
    values_.push_back(-(acc / binomial_rational(n + 1, n)));
  }
}

const BernoulliTable& BernoulliTable::standard() {
  static const BernoulliTable table(30);
  return table;
}

Rational binomial_rational(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i);
    acc /= i;  // exact: product of i consecutive integers divisible by i!
  }
  return Rational(checked_narrow(acc), 1);
}

Complex binomial_general(Complex rho, int i) {
  Complex acc(1.0, 0.0);
  for (int j = 0; j < i; ++j) acc *= (rho - static_cast<double>(j)) / static_cast<double>(j + 1);
  return acc;
}

}  // namespace cesaro

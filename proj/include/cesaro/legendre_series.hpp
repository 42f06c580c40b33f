#pragma once

#include <array>

#include "cesaro/quadrature.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

// Degree-15 Legendre series on [-1, 1]: evaluation, projection from samples
// at the 16 Gauss nodes, and exact segment integrals.  Shared by the iterated
// averaging engines.
namespace legendre {

inline constexpr int kN = 16;
using Series = std::array<Complex, kN>;

inline Complex eval(const Series& c, double x) {
  double pm1 = 1.0, p = x;
  Complex acc = c[0] * pm1 + c[1] * p;
  for (int m = 2; m < kN; ++m) {
    double pn = ((2.0 * m - 1.0) * x * p - (m - 1.0) * pm1) / m;
    acc += c[static_cast<size_t>(m)] * pn;
    pm1 = p;
    p = pn;
  }
  return acc;
}

// Coefficients from samples at the GaussLegendre16 nodes.
inline Series project(const Series& vals) {
  Series c{};
  for (int m = 0; m < kN; ++m) {
    Complex acc = 0.0;
    for (int i = 0; i < kN; ++i) {
      double x = GaussLegendre16::nodes[i];
      double pv;
      if (m == 0) {
        pv = 1.0;
      } else if (m == 1) {
        pv = x;
      } else {
        double pm1 = 1.0, p = x;
        for (int mm = 2; mm <= m; ++mm) {
          double pn = ((2.0 * mm - 1.0) * x * p - (mm - 1.0) * pm1) / mm;
          pm1 = p;
          p = pn;
        }
        pv = p;
      }
      acc += GaussLegendre16::weights[i] * pv * vals[static_cast<size_t>(i)];
    }
    c[static_cast<size_t>(m)] = acc * ((2.0 * m + 1.0) / 2.0);
  }
  return c;
}

// Integral over the whole segment of physical length len.
inline Complex full_integral(const Series& c, double len) { return c[0] * len; }

// Integral from the left edge to local coordinate x in [-1, 1].
inline Complex partial_integral(const Series& c, double len, double x) {
  Complex acc = c[0] * (x + 1.0);
  double pm1 = 1.0, p = x;
  for (int m = 1; m < kN; ++m) {
    double pn = ((2.0 * m + 1.0) * x * p - static_cast<double>(m) * pm1) / (m + 1.0);
    acc += c[static_cast<size_t>(m)] * (pn - pm1) / (2.0 * m + 1.0);
    pm1 = p;
    p = pn;
  }
  return acc * (0.5 * len);
}

}  // namespace legendre

}  // namespace cesaro

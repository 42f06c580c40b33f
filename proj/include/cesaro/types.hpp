#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cesaro {

using Real = double;
using Complex = std::complex<double>;

// Wide scalar used for compensated accumulation of long sums whose value
// cancels down to O(1) against an asymptotic expansion.
using WideReal = long double;
using WideComplex = std::complex<long double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2Pi = 1.837877066409345483560659472811235279;  // ln(2*pi)

// Magnitudes below this are treated as zero when merging expansion terms.
inline constexpr double kCoeffEps = 1e-14;

// Snap tolerance for recognising integer exponents (s passed by the caller
// is exact; this only absorbs representation noise).
inline constexpr double kIntSnapEps = 1e-12;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Summand or evaluation point sits on a pole of the function being summed.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// API misuse that is detectable statically (e.g. stripping an expansion
// that is not in the geometric variable).
struct MisuseError : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed textual input (command-line arguments, config values).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No admissible power of the averaging operator stabilises the residual.
struct NotCesaroSummable : std::runtime_error {
  explicit NotCesaroSummable(const std::string& what, std::string diag = {})
      : std::runtime_error(what), diagnostics(std::move(diag)) {}
  std::string diagnostics;
};

inline bool is_nonpositive_integer(Complex z, double eps = kIntSnapEps) {
  return std::abs(z.imag()) < eps && z.real() < eps &&
         std::abs(z.real() - std::round(z.real())) < eps;
}

inline bool is_negative_integer(Complex z, double eps = kIntSnapEps) {
  return is_nonpositive_integer(z, eps) && z.real() < -0.5;
}

// true if z is (numerically) a non-negative integer
inline bool nearest_nonneg_int(Complex z, long& n, double eps = kIntSnapEps) {
  if (std::abs(z.imag()) >= eps) return false;
  double r = std::round(z.real());
  if (r < -0.5 || std::abs(z.real() - r) >= eps) return false;
  n = static_cast<long>(r);
  return true;
}

}  // namespace cesaro

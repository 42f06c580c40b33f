#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cesaro/remainder.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

std::vector<Complex> sample_bases(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  auto draw = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    Complex z(draw(-3.0, 3.0), draw(-3.0, 3.0));
    if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_CASE("constant remainder sums") {
  for (Complex z0 : sample_bases(11, 5)) {
    Complex v = remainder_sum(SummandKind::constant(1.0), z0, DirectionSpec::Plus).limit;
    CHECK(std::abs(v - (-z0 - 0.5)) < 1e-12);
  }
}

TEST_CASE("linear remainder sums") {
  for (Complex z0 : sample_bases(13, 5)) {
    Complex v = remainder_sum(SummandKind::power(-1.0), z0, DirectionSpec::Plus).limit;
    CHECK(std::abs(v - (-0.5 * z0 * z0 - 0.5 * z0 - 1.0 / 12.0)) < 1e-11);
  }
}

TEST_CASE("bidirectional sums of nonnegative integer powers vanish") {
  for (Complex z0 : sample_bases(17, 10)) {
    for (int n = 0; n <= 3; ++n) {
      Complex v = remainder_sum(SummandKind::power(Complex(-n, 0.0)), z0,
                                DirectionSpec::Bidirectional)
                      .limit;
      CHECK(std::abs(v) < 1e-9);
    }
  }
}

TEST_CASE("finite sums collapse at positive integers") {
  CHECK(std::abs(finite_sum(SummandKind::power(-1.0), 4.0) - Complex(10.0)) < 1e-11);
  CHECK(std::abs(finite_sum(SummandKind::power(-2.0), 3.0) - Complex(14.0)) < 1e-11);
  for (Complex z0 : sample_bases(19, 3))
    CHECK(std::abs(finite_sum(SummandKind::constant(1.0), z0) - z0) < 1e-12);
  // literal collapse across 1..20 for several summands
  for (int k = 1; k <= 20; ++k) {
    Complex direct_lin = 0.0, direct_sq = 0.0, direct_log = 0.0;
    for (int j = 1; j <= k; ++j) {
      direct_lin += static_cast<double>(j);
      direct_sq += static_cast<double>(j) * j;
      direct_log += std::log(static_cast<double>(j));
    }
    CHECK(std::abs(finite_sum(SummandKind::power(-1.0), static_cast<double>(k)) - direct_lin) <
          1e-10 * (1.0 + std::abs(direct_lin)));
    CHECK(std::abs(finite_sum(SummandKind::power(-2.0), static_cast<double>(k)) - direct_sq) <
          1e-10 * (1.0 + std::abs(direct_sq)));
    CHECK(std::abs(finite_sum(SummandKind::log(), static_cast<double>(k)) - direct_log) <
          1e-10 * (1.0 + std::abs(direct_log)));
  }
}

TEST_CASE("remainder products") {
  for (Complex z0 : sample_bases(23, 3)) {
    Complex v = remainder_product(SummandKind::constant(std::exp(1.0)), z0, DirectionSpec::Plus);
    CHECK(std::abs(v - std::exp(-z0 - 0.5)) < 1e-10 * (1.0 + std::abs(v)));
    CHECK(std::abs(remainder_product(SummandKind::constant(1.0), z0, DirectionSpec::Plus) -
                   Complex(1.0)) < 1e-12);
  }
  // identity summand at the origin: sqrt(2 pi)
  Complex root2pi = remainder_product(SummandKind::power(-1.0), 0.0, DirectionSpec::Plus);
  CHECK(std::abs(root2pi - Complex(2.5066282746310002)) < 1e-10);
  CHECK_THROWS_AS(remainder_product(SummandKind::log(), 0.5, DirectionSpec::Plus), MisuseError);
}

TEST_CASE("finite products") {
  CHECK(std::abs(finite_product(SummandKind::power(-1.0), 4.0) - Complex(24.0)) < 1e-9);
  CHECK(std::abs(finite_product(SummandKind::power(-1.0), 0.5) - Complex(0.8862269254527580)) <
        1e-10);
  for (Complex z0 : sample_bases(29, 3)) {
    Complex v = finite_product(SummandKind::constant(std::exp(1.0)), z0);
    CHECK(std::abs(v - std::exp(z0)) < 1e-9 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("shift identity between strict and inclusive sums") {
  const SummandKind kinds[3] = {SummandKind::log(), SummandKind::power(0.5),
                                SummandKind::constant(2.0)};
  for (const auto& f : kinds) {
    for (Complex z0 : sample_bases(31, 4)) {
      Complex strict = remainder_sum(f, z0, DirectionSpec::Plus).limit;
      Complex inclusive = remainder_sum(f, z0 + 1.0, DirectionSpec::PlusZero).limit;
      CHECK(std::abs(strict - inclusive) < 1e-10 * (1.0 + std::abs(strict)));
    }
  }
}

TEST_CASE("bidirectional sums are period-1 in the base point") {
  const SummandKind kinds[2] = {SummandKind::power(Complex(0.5, 0.3)), SummandKind::power(2.0)};
  for (const auto& f : kinds) {
    for (Complex z0 : sample_bases(37, 4)) {
      if (std::abs(z0) < 0.1 || std::abs(z0 + 1.0) < 0.1) continue;
      Complex a = remainder_sum(f, z0, DirectionSpec::Bidirectional).limit;
      Complex b = remainder_sum(f, z0 + 1.0, DirectionSpec::Bidirectional).limit;
      CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("negative-side reflection for integer powers") {
  for (Complex z0 : sample_bases(41, 4)) {
    for (int n = 0; n <= 2; ++n) {
      SummandKind f = SummandKind::power(Complex(-n, 0.0));
      Complex lhs = remainder_sum(f, z0, DirectionSpec::Minus).limit;
      Complex rhs = remainder_sum(f, 1.0 - z0, DirectionSpec::PlusZero).limit;
      if (n % 2 == 1) rhs = -rhs;
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("pole detection at included summand points") {
  CHECK_THROWS_AS(remainder_sum(SummandKind::log(), Complex(-3.0, 0.0), DirectionSpec::Plus),
                  PoleError);
  CHECK_THROWS_AS(remainder_sum(SummandKind::power(0.5), Complex(2.0, 0.0), DirectionSpec::Minus),
                  PoleError);
  CHECK_THROWS_AS(remainder_sum(SummandKind::log(), 0.0, DirectionSpec::PlusZero), PoleError);
  // polynomial summands sail through the lattice zeros
  CHECK_NOTHROW(remainder_sum(SummandKind::power(-2.0), Complex(-3.0, 0.0), DirectionSpec::Plus));
}

TEST_CASE("remainder traces expose the partial sums") {
  Complex z0(0.5, 0.0);
  PSumTrace trace = remainder_trace(SummandKind::power(-1.0), z0, false, 10);
  // partial sums of (z0 + j): after k jumps the value is k z0 + k(k+1)/2
  CHECK(std::abs(trace.value(3.5) - (3.0 * z0 + 6.0)) < 1e-14);
  CHECK(std::abs(trace.value(0.5)) == 0.0);
}

TEST_CASE("inclusive negative direction and the alternative bidirectional split") {
  const SummandKind f = SummandKind::power(Complex(0.7, 0.2));
  for (Complex z0 : sample_bases(43, 3)) {
    if (std::abs(z0) < 0.1) continue;
    Complex minus0 = remainder_sum(f, z0, DirectionSpec::MinusZero).limit;
    Complex minus = remainder_sum(f, z0, DirectionSpec::Minus).limit;
    CHECK(std::abs(minus0 - (f(z0) + minus)) < 1e-12 * (1.0 + std::abs(minus0)));
    // the fixed decomposition PlusZero + Minus agrees with Plus + MinusZero
    Complex fixed = remainder_sum(f, z0, DirectionSpec::Bidirectional).limit;
    Complex alt = remainder_sum(f, z0, DirectionSpec::Plus).limit + minus0;
    CHECK(std::abs(fixed - alt) < 1e-11 * (1.0 + std::abs(fixed)));
  }
}

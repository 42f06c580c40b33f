#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cesaro/clim.hpp"
#include "cesaro/remainder.hpp"
#include "cesaro/special.hpp"
#include "oracles.hpp"


using namespace cesaro;
using doctest::Approx;

namespace {

PSumTrace unit_step_trace(int count) {
  std::vector<Complex> values(static_cast<size_t>(count), Complex(1.0));
  return partial_sum_trace(Ray(0.0, RayDirection::PosReal), values);
}

}  // namespace

TEST_CASE("averaging a unit-step staircase is exact") {
  PSumTrace trace = unit_step_trace(16);
  // value on [k, k+1) is k; at t = 2 the prefix integral is 0*1 + 1*1 = 1
  CHECK(std::abs(apply_P_exact(trace, 2.0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(apply_P_exact(trace, 3.0) - Complex(1.0)) < 1e-15);  // (0+1+2)/3
  CHECK(trace.value(0.5) == Complex(0.0));
  CHECK(trace.value(1.5) == Complex(1.0));
}

TEST_CASE("averaging a constant trace is the identity") {
  Complex c(2.5, -1.0);
  PSumTrace trace = constant_trace(Ray(Complex(0.3, 0.4), RayDirection::PosReal), c, 100.0);
  for (double t : {0.25, 1.0, 7.5, 99.0}) CHECK(std::abs(apply_P_exact(trace, t) - c) < 1e-15);
  CHECK_THROWS_AS(apply_P_exact(trace, 0.0), DomainError);
  CHECK_THROWS_AS(apply_P_exact(trace, -1.0), DomainError);
}

TEST_CASE("prefix integration matches direct partial-sum accumulation") {
  std::mt19937_64 rng(42);
  auto draw = [&] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  const int K = 10000;
  std::vector<Complex> values;
  values.reserve(K);
  for (int j = 0; j < K; ++j) values.emplace_back(draw(), draw());
  PSumTrace trace = partial_sum_trace(Ray(0.0, RayDirection::PosReal), values);
  // P at integer K equals (sum of partial sums S_1..S_{K-1}) / K
  Complex acc = 0.0, total = 0.0;
  for (int j = 0; j < K - 1; ++j) {
    acc += values[static_cast<size_t>(j)];
    total += acc;
  }
  CHECK(std::abs(apply_P_exact(trace, static_cast<double>(K)) -
                 total / static_cast<double>(K)) < 1e-12);
}

TEST_CASE("eigenvalues of the averaging operator") {
  CHECK(eigenvalue_of_P(Complex(1.0)) == Complex(0.5));
  CHECK(eigenvalue_of_P(Complex(0.0)) == Complex(1.0));
  CHECK(std::abs(eigenvalue_of_P(Complex(2.0)) - Complex(1.0 / 3.0)) < 1e-16);
  CHECK_THROWS_AS(eigenvalue_of_P(Complex(-1.0)), DomainError);
}

TEST_CASE("eigen-relation holds numerically on horizontal and vertical rays") {
  // average of z^rho over [0,t] equals eigenvalue * z(t)^rho
  const Complex rhos[4] = {{0.5, 0.0}, {2.0, 0.0}, {1.0, 0.7}, {-0.25, 0.0}};
  for (const Ray& ray : {Ray(0.0, RayDirection::PosReal), Ray(0.0, RayDirection::PosImag)}) {
    for (Complex rho : rhos) {
      AsymptoticExpansion e({{Complex(-1.0), rho, 0, 0}}, true);
      PSumTrace zero(ray, {});
      ResidualSampler sampler = strip_geometric(zero, e);
      double t = 37.5;
      Complex avg = sampler.prefix_integral(t) / t;  // equals +average of z^rho
      Complex z = ray.point(t);
      Complex expect = eigenvalue_of_P(rho) * std::pow(z, rho);
      CHECK(std::abs(avg - expect) < 1e-10 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("stripping nothing returns the trace itself") {
  PSumTrace trace = unit_step_trace(64);
  ResidualSampler sampler = strip_geometric(trace, AsymptoticExpansion({}, true));
  CHECK(sampler.value(10.5) == trace.value(10.5));
  CHECK(sampler.prefix_integral(31.0) == trace.prefix_integral(31.0));
}

TEST_CASE("strip rejects misuse") {
  PSumTrace trace = unit_step_trace(8);
  AsymptoticExpansion in_t({{Complex(1.0), Complex(1.0), 0, 0}}, false);
  CHECK_THROWS_AS(strip_geometric(trace, in_t), MisuseError);
  AsymptoticExpansion with_const({{Complex(1.0), Complex(0.0), 0, 0}}, true);
  CHECK_THROWS_AS(strip_geometric(trace, with_const), MisuseError);
  AsymptoticExpansion with_alpha({{Complex(1.0), Complex(1.0), 0, 1}}, true);
  CHECK_THROWS_AS(strip_geometric(trace, with_alpha), MisuseError);
}

TEST_CASE("clim of the constant-summand residual: strip z, average the sawtooth") {
  Complex z0(0.7, 0.4);
  PSumTrace trace = remainder_trace(SummandKind::constant(1.0), z0, false, 4200);
  AsymptoticExpansion strip({{Complex(1.0), Complex(1.0), 0, 0}}, true);
  ResidualSampler sampler = strip_geometric(trace, strip);
  CesaroOutcome out = clim(sampler, 1);
  CHECK(out.averaging_power == 1);
  CHECK(std::abs(out.limit - (-z0 - 0.5)) < 1e-8);
  CHECK(out.tail_estimate < 1e-2);
}

TEST_CASE("clim of the linear-summand residual needs two averagings") {
  Complex z0(0.25, -0.3);
  PSumTrace trace = remainder_trace(SummandKind::power(-1.0), z0, false, 4200);
  EMExpansion em = remainder_expansion(SummandKind::power(-1.0), z0, 1.0, 1.0, {});
  ResidualSampler sampler = strip_geometric(trace, em.smooth_part);
  CesaroOutcome out = clim(sampler, 3, LimitProbe{64.0, 7, {0.0, 0.36602540378443865,
                                                            0.61803398874989485}, 1e-6});
  Complex expect = -0.5 * z0 * z0 - 0.5 * z0 - 1.0 / 12.0;
  CHECK(std::abs(out.limit - expect) < 1e-6);
  CHECK(out.averaging_power >= 1);
}

TEST_CASE("clim of a constant trace is the constant at power zero") {
  Complex c(0.25, 1.5);
  PSumTrace trace = constant_trace(Ray(0.0, RayDirection::PosReal), c, 5000.0);
  ResidualSampler sampler = strip_geometric(trace, AsymptoticExpansion({}, true));
  CesaroOutcome out = clim(sampler, 4);
  CHECK(out.averaging_power == 0);
  CHECK(std::abs(out.limit - c) < 1e-12);
}

TEST_CASE("pure log residual is not summable") {
  PSumTrace zero(Ray(0.0, RayDirection::PosReal), {});
  AsymptoticExpansion e({{Complex(-1.0), Complex(0.0), 1, 0}}, true);
  ResidualSampler sampler = strip_geometric(zero, e);  // residual = +ln z
  CHECK_THROWS_AS(clim(sampler, 4), NotCesaroSummable);
  try {
    clim(sampler, 4);
  } catch (const NotCesaroSummable& e) {
    CHECK(e.diagnostics.find("ln-growth") != std::string::npos);
  }
}

TEST_CASE("clim is linear on convergent samplers") {
  std::mt19937_64 rng(7);
  auto draw = [&] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  Complex a(draw(), draw()), b(draw(), draw());
  Complex z0(0.4, 0.2);
  PSumTrace tf = remainder_trace(SummandKind::constant(1.0), z0, false, 4200);
  AsymptoticExpansion strip({{Complex(1.0), Complex(1.0), 0, 0}}, true);
  ResidualSampler f = strip_geometric(tf, strip);
  PSumTrace cg = constant_trace(tf.ray(), Complex(-0.5, 0.25), 5000.0);
  ResidualSampler g = strip_geometric(cg, AsymptoticExpansion({}, true));
  Complex lf = clim(f, 2).limit, lg = clim(g, 2).limit;
  Complex combined = clim(combine(a, f, b, g), 2).limit;
  CHECK(std::abs(combined - (a * lf + b * lg)) < 1e-8);
}

TEST_CASE("clim outcomes are deterministic") {
  Complex z0(0.1, 0.9);
  PSumTrace trace = remainder_trace(SummandKind::constant(1.0), z0, false, 4200);
  AsymptoticExpansion strip({{Complex(1.0), Complex(1.0), 0, 0}}, true);
  CesaroOutcome a = clim(strip_geometric(trace, strip), 2);
  CesaroOutcome b = clim(strip_geometric(trace, strip), 2);
  CHECK(a.limit == b.limit);
  CHECK(a.averaging_power == b.averaging_power);
  CHECK(a.tail_estimate == b.tail_estimate);
}

TEST_CASE("geometric versus arc-length stripping for a complex base") {
  // log-gamma p-sum at z0 = i: stripping z ln z - z in the geometric variable
  // converges to the expansion constant; the same strip in t log-diverges
  Complex z0(0.0, 1.0);
  PSumTrace trace = remainder_trace(SummandKind::log(), z0, false, 4200);
  AsymptoticExpansion strip(
      {{Complex(1.0), Complex(1.0), 1, 0}, {Complex(-1.0), Complex(1.0), 0, 0}}, true);
  LimitProbe probe;
  probe.tolerance = 1e-4;
  CesaroOutcome out = clim(strip_geometric(trace, strip), 3, probe);
  Complex c_expected = 0.5 * kLn2Pi - log_gamma(z0).log_value;
  CHECK(std::abs(out.limit - c_expected) < 1e-4);
  CHECK_THROWS_AS(clim(strip_arclength(trace, strip), 3, probe), NotCesaroSummable);
}

TEST_CASE("strip of the zero-base log-gamma trace recovers half ln 2 pi") {
  PSumTrace trace = remainder_trace(SummandKind::log(), 0.0, false, 4200);
  AsymptoticExpansion strip(
      {{Complex(1.0), Complex(1.0), 1, 0}, {Complex(-1.0), Complex(1.0), 0, 0}}, true);
  LimitProbe probe;
  probe.tolerance = 1e-4;
  CesaroOutcome out = clim(strip_geometric(trace, strip), 3, probe);
  CHECK(std::abs(out.limit - 0.5 * kLn2Pi) < 1e-4);
  CHECK(std::abs(out.limit.real() - 0.918939) < 1e-4);
}

TEST_CASE("degenerate strip terms at a ray through the origin are rejected") {
  PSumTrace zero(Ray(0.0, RayDirection::PosReal), {});
  AsymptoticExpansion e({{Complex(1.0), Complex(-1.5), 0, 0}}, true);
  CHECK_THROWS_AS(strip_geometric(zero, e), DomainError);
}

TEST_CASE("vertical rays crossing the branch cut integrate consistently") {
  // base in the lower-left quadrant, heading up: crosses the negative real
  // axis; the split antiderivative must match plain quadrature of the
  // principal-branch samples
  Ray ray(Complex(-2.0, -1.0), RayDirection::PosImag);
  AsymptoticExpansion e({{Complex(1.0), Complex(0.5, 0.3), 0, 0}}, true);
  PSumTrace zero(ray, {});
  ResidualSampler s = strip_geometric(zero, e);
  double T = 3.0;  // crossing sits at t = 1
  Complex rho(0.5, 0.3);
  auto sided = [&](int side) {
    return [&, side](double t) {
      return std::exp(rho * principal_log_sided(ray.point(t), side));
    };
  };
  Complex direct = oracles::simpson(sided(-1), 0.0, 1.0, 1e-13) +
                   oracles::simpson(sided(+1), 1.0, T, 1e-13);
  CHECK(std::abs(-s.prefix_integral(T) - direct) < 1e-10 * (1.0 + std::abs(direct)));
}

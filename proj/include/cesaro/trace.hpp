#pragma once

#include <vector>

#include "cesaro/expansion.hpp"
#include "cesaro/ray.hpp"

namespace cesaro {

// Piecewise-constant partial-sum function along a ray: value 0 before the
// first jump, then jumps[i].value on [jumps[i].t, jumps[i+1].t).
class PSumTrace {
 public:
  struct Jump {
    double t;
    Complex value;
  };

  PSumTrace() = default;
  PSumTrace(Ray ray, std::vector<Jump> jumps);

  const Ray& ray() const { return ray_; }
  const std::vector<Jump>& jumps() const { return jumps_; }

  Complex value(double t) const;

  // Exact prefix integral of the trace over [0, t] (closed-form segment sums,
  // compensated accumulation).
  Complex prefix_integral(double t) const;

  PSumTrace scaled(Complex factor) const;
  // Pointwise sum; both traces must share the same ray.
  PSumTrace plus(const PSumTrace& other) const;

 private:
  Ray ray_;
  std::vector<Jump> jumps_;
  // prefix_[i] = integral of the trace over [0, jumps_[i].t]
  std::vector<Complex> prefix_;
  void build_prefix();
};

// The averaging operator along the contour arc length evaluated exactly:
// (1/t) * integral_0^t trace.  Requires t > 0.
Complex apply_P_exact(const PSumTrace& trace, double t);

// Eigenvalue of the averaging operator on z^power; power = -1 is singular.
Complex eigenvalue_of_P(Complex power);

// Constant-value trace from t = 0 (single jump at 0).
PSumTrace constant_trace(const Ray& ray, Complex value, double horizon);

// Partial sums of `values[j]` with the j-th jump at t = spacing*(j+1),
// i.e. the p-sum of a remainder sum with the given summand spacing.
PSumTrace partial_sum_trace(const Ray& ray, const std::vector<Complex>& values,
                            double spacing = 1.0);

}  // namespace cesaro

#pragma once

#include "cesaro/types.hpp"

namespace cesaro {

enum class RayDirection { PosReal, NegReal, PosImag, NegImag };

// Contour t -> base + t*unit(direction), t >= 0, parametrised by arc length.
struct Ray {
  Complex base;
  RayDirection direction = RayDirection::PosReal;

  Ray() = default;
  Ray(Complex z0, RayDirection dir) : base(normalise(z0)), direction(dir) {}

  Complex unit() const {
    switch (direction) {
      case RayDirection::PosReal: return {1.0, 0.0};
      case RayDirection::NegReal: return {-1.0, 0.0};
      case RayDirection::PosImag: return {0.0, 1.0};
      default: return {0.0, -1.0};
    }
  }

  Complex point(double t) const { return t == 0.0 ? base : base + t * unit(); }

  bool horizontal() const {
    return direction == RayDirection::PosReal || direction == RayDirection::NegReal;
  }

 private:
  // Kill negative zeros so that points on the real axis take the principal
  // branch limit from above (Im = +0).
  static Complex normalise(Complex z) {
    double re = z.real() == 0.0 ? 0.0 : z.real();
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return {re, im};
  }
};

}  // namespace cesaro

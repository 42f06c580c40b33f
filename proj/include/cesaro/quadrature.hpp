#pragma once

#include <functional>

#include "cesaro/types.hpp"

namespace cesaro {

// Adaptive Gauss-Kronrod (G7/K15) on a real interval, complex integrand.
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_depth = 40);

// Composite fixed-order Gauss-Legendre with `panels` equal panels of
// `nodes_per_panel` points (nodes_per_panel in {8, 16, 32}).
Complex integrate_composite_gl(const std::function<Complex(double)>& f, double a, double b,
                               int panels, int nodes_per_panel = 16);

// Nodes/weights of the 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
  static const double nodes[16];
  static const double weights[16];
};

}  // namespace cesaro

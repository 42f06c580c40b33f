#pragma once

#include <memory>
#include <vector>

#include "cesaro/trace.hpp"

namespace cesaro {

// Probe schedule for limit detection: points t0 * 2^i (i < scales) offset by
// each phase.  Phase 0 aligns probes with summand jumps; the irrational-ish
// phases expose period-1 oscillation that integer-aligned probes cannot see.
struct LimitProbe {
  double t0 = 64.0;
  int scales = 7;
  std::vector<double> phases = {0.0, 0.36602540378443865, 0.61803398874989485};
  double tolerance = 1e-8;
};

struct CesaroOutcome {
  Complex limit;
  int averaging_power = 0;
  AsymptoticExpansion stripped;
  double tail_estimate = 0.0;
};

// Trace minus a finite alpha-free geometric expansion; exactly integrable
// (closed-form prefix for the trace, closed-form antiderivatives for the
// stripped power-log terms).
class ResidualSampler {
 public:
  ResidualSampler(PSumTrace trace, AsymptoticExpansion stripped, bool in_arc_length = false);

  Complex value(double t) const;
  Complex prefix_integral(double t) const;

  const PSumTrace& trace() const { return trace_; }
  const AsymptoticExpansion& stripped() const { return stripped_; }
  bool in_arc_length() const { return in_arc_length_; }

 private:
  PSumTrace trace_;
  AsymptoticExpansion stripped_;
  bool in_arc_length_;
  // arc length at which the ray crosses the branch cut transversally, or -1
  double cut_crossing_ = -1.0;

  Complex geometric_point(double t) const;
  Complex smooth_prefix(double t) const;
};

// Residual sampler for f(t) - sum of expansion terms evaluated at the
// geometric point gamma(t).  The expansion must be flagged geometric and
// contain neither constants nor alpha-carrying terms.
ResidualSampler strip_geometric(const PSumTrace& trace, const AsymptoticExpansion& expansion);

// Pitfall demonstrator: evaluates the expansion at the arc-length parameter t
// instead of the geometric point.  Integer-power strips done this way leave
// residual pure-log divergences whenever the ray base is off the origin.
ResidualSampler strip_arclength(const PSumTrace& trace, const AsymptoticExpansion& expansion);

// a*f + b*g on a shared ray.
ResidualSampler combine(Complex a, const ResidualSampler& f, Complex b, const ResidualSampler& g);

// Generalised Cesaro limit: applies the averaging operator n = 0..max_power
// times until probe values stabilise (per-phase extrapolation in 1/t and
// cross-phase agreement).  Throws NotCesaroSummable when no power works.
CesaroOutcome clim(const ResidualSampler& sampler, int max_power = 4,
                   const LimitProbe& probe = LimitProbe{});

}  // namespace cesaro

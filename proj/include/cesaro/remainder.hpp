#pragma once

#include <optional>

#include "cesaro/clim.hpp"
#include "cesaro/euler_maclaurin.hpp"

namespace cesaro {

// Closed set of summands with known expansions; arbitrary user functions are
// rejected because geometric stripping needs the expansion symbolically.
struct SummandKind {
  enum class Tag { Power, Log, Const };
  Tag tag = Tag::Log;
  Complex param = 0.0;  // s for Power, c for Const

  static SummandKind power(Complex s) { return {Tag::Power, s}; }
  static SummandKind log() { return {Tag::Log, 0.0}; }
  static SummandKind constant(Complex c) { return {Tag::Const, c}; }

  Complex operator()(Complex z) const;  // summand value at z
};

enum class DirectionSpec { Plus, PlusZero, Minus, MinusZero, Bidirectional };

struct RemainderOptions {
  int k = 48;
  int order = 8;
  // Strip eigenfunctions of the arc-length parameter instead of the
  // geometric variable.  Wrong by construction for bases off the origin --
  // the expansion then leaves a pure-log residual and the sum is rejected.
  bool strip_in_arc_length = false;
};

// Generalised Cesaro value of the remainder sum of f relative to z0 in the
// given direction(s).  Bidirectional = PlusZero + Minus, each one-sided sum
// evaluated independently.
CesaroOutcome remainder_sum(const SummandKind& f, Complex z0, DirectionSpec dir,
                            const RemainderOptions& opt = {});

// Internal generalisation used for dilation checks: summands at
// z0 + sign*spacing*j with the geometric analysis on the spaced lattice.
CesaroOutcome remainder_sum_spaced(const SummandKind& f, Complex z0, double spacing,
                                   bool negative, const RemainderOptions& opt = {});

// sum_{j=1}^{upper} f(j) extended to complex upper limits:
// R_plus[f](0) - R_plus[f](upper).
Complex finite_sum(const SummandKind& f, Complex upper, const RemainderOptions& opt = {});

// exp of the remainder sum of ln(f); supported for f = identity (Log of it)
// and constant summands.
Complex remainder_product(const SummandKind& f, Complex z0, DirectionSpec dir,
                          const RemainderOptions& opt = {});

Complex finite_product(const SummandKind& f, Complex upper, const RemainderOptions& opt = {});

// p-sum trace of the remainder sum over the first `count` summands, for the
// numeric averaging path and trace emission.
PSumTrace remainder_trace(const SummandKind& f, Complex z0, bool negative, int count,
                          double spacing = 1.0);

// Parameter-form expansion of the one-sided sum (shared with special
// functions).  sign = +1 for the positive ray, -1 for the negative ray.
EMExpansion remainder_expansion(const SummandKind& f, Complex z0, double sign, double spacing,
                                const RemainderOptions& opt);

}  // namespace cesaro

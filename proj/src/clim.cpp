#include "cesaro/clim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "cesaro/legendre_series.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

namespace {

constexpr int kNodes = legendre::kN;

// Arc length at which the ray meets z = 0, or -1.
double zero_crossing(const Ray& ray) {
  Complex u = ray.unit();
  // base + t*u = 0  =>  t = -base/u must be real nonnegative
  Complex t = -ray.base / u;
  if (std::abs(t.imag()) > 0.0) return -1.0;
  return t.real() >= 0.0 ? t.real() : -1.0;
}

// Arc length at which the ray crosses the open negative real axis
// transversally (vertical rays only), or -1.
double cut_crossing(const Ray& ray) {
  if (ray.horizontal()) return -1.0;
  double dir = ray.direction == RayDirection::PosImag ? 1.0 : -1.0;
  double t = -ray.base.imag() / dir;
  if (t <= 0.0) return -1.0;
  return ray.base.real() < 0.0 ? t : -1.0;
}

void validate_strippable(const AsymptoticExpansion& e, const Ray& ray) {
  if (!e.geometric())
    throw MisuseError("expansion is not in the geometric variable; stripping in the "
                      "arc-length parameter is the classic divergence trap");
  if (!e.alpha_free())
    throw MisuseError("only pure power-log terms can be stripped");
  double tz = zero_crossing(ray);
  for (const auto& t : e.terms()) {
    if (t.is_constant())
      throw MisuseError("constant terms are the limit contribution and are never stripped");
    if (tz >= 0.0 && (t.power.real() <= -1.0 + 1e-12))
      throw DomainError("strip term not integrable where the ray meets the origin");
  }
}

}  // namespace

ResidualSampler::ResidualSampler(PSumTrace trace, AsymptoticExpansion stripped, bool in_arc_length)
    : trace_(std::move(trace)), stripped_(std::move(stripped)), in_arc_length_(in_arc_length) {
  cut_crossing_ = in_arc_length_ ? -1.0 : cut_crossing(trace_.ray());
}

Complex ResidualSampler::geometric_point(double t) const {
  return in_arc_length_ ? Complex(t, 0.0) : trace_.ray().point(t);
}

Complex ResidualSampler::value(double t) const {
  Complex z = geometric_point(t);
  return trace_.value(t) - stripped_.evaluate(z);
}

Complex ResidualSampler::smooth_prefix(double t) const {
  if (stripped_.empty()) return 0.0;
  Complex d = in_arc_length_ ? Complex(1.0, 0.0) : trace_.ray().unit();
  Complex z0 = geometric_point(0.0);
  Complex zt = geometric_point(t);
  Complex acc = 0.0;
  for (const auto& term : stripped_.terms()) {
    Complex seg;
    if (cut_crossing_ > 0.0 && t > cut_crossing_) {
      // split at the branch-cut crossing; one-sided log values on each side
      Complex zc = trace_.ray().point(cut_crossing_);
      int before = trace_.ray().direction == RayDirection::PosImag ? -1 : 1;
      seg = (power_log_antiderivative(zc, term.power, term.log_power, before) -
             power_log_antiderivative(z0, term.power, term.log_power)) +
            (power_log_antiderivative(zt, term.power, term.log_power) -
             power_log_antiderivative(zc, term.power, term.log_power, -before));
    } else {
      seg = power_log_antiderivative(zt, term.power, term.log_power) -
            power_log_antiderivative(z0, term.power, term.log_power);
    }
    acc += term.coeff * seg / d;
  }
  return acc;
}

Complex ResidualSampler::prefix_integral(double t) const {
  return trace_.prefix_integral(t) - smooth_prefix(t);
}

ResidualSampler strip_geometric(const PSumTrace& trace, const AsymptoticExpansion& expansion) {
  validate_strippable(expansion, trace.ray());
  return ResidualSampler(trace, expansion, false);
}

ResidualSampler strip_arclength(const PSumTrace& trace, const AsymptoticExpansion& expansion) {
  if (!expansion.alpha_free())
    throw MisuseError("only pure power-log terms can be stripped");
  for (const auto& t : expansion.terms())
    if (t.is_constant())
      throw MisuseError("constant terms are the limit contribution and are never stripped");
  return ResidualSampler(trace, expansion, true);
}

ResidualSampler combine(Complex a, const ResidualSampler& f, Complex b, const ResidualSampler& g) {
  if (f.in_arc_length() != g.in_arc_length())
    throw MisuseError("combining samplers with different strip variables");
  PSumTrace t = f.trace().scaled(a).plus(g.trace().scaled(b));
  AsymptoticExpansion e = f.stripped().scaled(a).plus(g.stripped().scaled(b));
  return ResidualSampler(std::move(t), std::move(e), f.in_arc_length());
}

namespace {

// ---- iterated averaging machinery ------------------------------------------
//
// P^n[R](t) = I_n(t)/t with I_n(t) = integral_0^t I_{n-1}(u)/u du, I_1 exact.
// Levels n >= 2 are represented per segment by degree-15 Legendre series of
// h_n = I_n/t; within a segment everything is analytic, so the series are
// accurate to ~1e-14.  Segments are the trace jump intervals, subdivided near
// t = 0 (endpoint behaviour of the stripped terms) and capped in length.

struct Level {
  // coeffs[k]: Legendre series of h_n on segment k
  std::vector<legendre::Series> coeffs;
  std::vector<Complex> integral_at_breaks;
};

class AveragingLevels {
 public:
  AveragingLevels(const ResidualSampler& s, double t_max) : sampler_(s) {
    build_breaks(t_max);
  }

  Complex evaluate(int n, double t) {
    if (n == 0) return sampler_.value(t);
    if (n == 1) return sampler_.prefix_integral(t) / t;
    while (static_cast<int>(levels_.size()) < n - 1) build_next_level();
    const Level& lv = levels_[static_cast<size_t>(n - 2)];
    size_t k = segment_of(t);
    return legendre::eval(lv.coeffs[k], xi(k, t));
  }

 private:
  const ResidualSampler& sampler_;
  std::vector<double> breaks_;
  std::vector<Level> levels_;  // levels_[j] describes h_{j+2}

  double xi(size_t k, double t) const {
    return 2.0 * (t - breaks_[k]) / (breaks_[k + 1] - breaks_[k]) - 1.0;
  }

  size_t segment_of(double t) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    size_t k = static_cast<size_t>(std::max<ptrdiff_t>(1, it - breaks_.begin())) - 1;
    return std::min(k, breaks_.size() - 2);
  }

  void build_breaks(double t_max) {
    std::vector<double> pts;
    pts.push_back(0.0);
    for (const auto& j : sampler_.trace().jumps()) {
      if (j.t > 0.0 && j.t < t_max) pts.push_back(j.t);
    }
    pts.push_back(t_max);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    breaks_.clear();
    // dyadic refinement towards 0 inside the first interval (integrands may
    // have algebraic/log endpoint behaviour there)
    breaks_.push_back(0.0);
    double first = pts[1];
    for (int j = 64; j >= 1; --j) breaks_.push_back(first * std::ldexp(1.0, -j));
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      breaks_.push_back(pts[i]);
      // cap segment length so interpolants stay well resolved
      double len = pts[i + 1] - pts[i];
      double cap = std::max(1.0, pts[i] / 16.0);
      int pieces = static_cast<int>(std::ceil(len / cap));
      for (int p = 1; p < pieces; ++p) breaks_.push_back(pts[i] + len * p / pieces);
    }
    breaks_.push_back(pts.back());
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
  }

  void build_next_level() {
    size_t nseg = breaks_.size() - 1;
    int n_new = static_cast<int>(levels_.size()) + 2;  // h_{n_new} being built
    Level lv;
    lv.coeffs.resize(nseg);
    lv.integral_at_breaks.assign(breaks_.size(), 0.0);

    const Level* prev = levels_.empty() ? nullptr : &levels_.back();
    // previous-level coefficients (h_{n_new - 1}); for n_new == 2 build h_1
    // interpolants on the fly from the exact prefix integral
    WideComplex acc = 0.0L;
    for (size_t k = 0; k < nseg; ++k) {
      double a = breaks_[k], b = breaks_[k + 1];
      double len = b - a, mid = 0.5 * (a + b), half = 0.5 * len;
      legendre::Series prev_coeffs;
      if (prev) {
        prev_coeffs = prev->coeffs[k];
      } else {
        legendre::Series vals;
        for (int i = 0; i < kNodes; ++i) {
          double t = mid + half * GaussLegendre16::nodes[i];
          vals[static_cast<size_t>(i)] = sampler_.prefix_integral(t) / t;
        }
        prev_coeffs = legendre::project(vals);
      }
      lv.integral_at_breaks[k] = Complex(static_cast<double>(acc.real()),
                                         static_cast<double>(acc.imag()));
      // sample h_{n_new} = I/t on this segment
      legendre::Series vals;
      for (int i = 0; i < kNodes; ++i) {
        double x = GaussLegendre16::nodes[i];
        double t = mid + half * x;
        Complex I = lv.integral_at_breaks[k] + legendre::partial_integral(prev_coeffs, len, x);
        vals[static_cast<size_t>(i)] = I / t;
      }
      lv.coeffs[k] = legendre::project(vals);
      Complex seg = legendre::full_integral(prev_coeffs, len);
      acc += WideComplex(seg.real(), seg.imag());
    }
    lv.integral_at_breaks[nseg] = Complex(static_cast<double>(acc.real()),
                                          static_cast<double>(acc.imag()));
    (void)n_new;
    levels_.push_back(std::move(lv));
  }
};

// Fit v(t) ~ L + a/t + b ln(t)/t + c/t^2 through the last points and return L.
Complex extrapolate(const std::vector<double>& ts, const std::vector<Complex>& vs) {
  size_t n = ts.size();
  size_t use = std::min<size_t>(4, n);
  size_t off = n - use;
  // basis columns
  auto basis = [&](double t, size_t j) -> double {
    switch (j) {
      case 0: return 1.0;
      case 1: return 1.0 / t;
      case 2: return std::log(t) / t;
      default: return 1.0 / (t * t);
    }
  };
  size_t m = use;  // square system
  std::vector<std::vector<Complex>> A(m, std::vector<Complex>(m + 1));
  for (size_t r = 0; r < m; ++r) {
    for (size_t j = 0; j < m; ++j) A[r][j] = basis(ts[off + r], j);
    A[r][m] = vs[off + r];
  }
  // Gaussian elimination with partial pivoting
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < m; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    if (std::abs(A[col][col]) < 1e-300) return vs.back();
    for (size_t r = col + 1; r < m; ++r) {
      Complex f = A[r][col] / A[col][col];
      for (size_t j = col; j <= m; ++j) A[r][j] -= f * A[col][j];
    }
  }
  std::vector<Complex> x(m);
  for (size_t r = m; r-- > 0;) {
    Complex s = A[r][m];
    for (size_t j = r + 1; j < m; ++j) s -= A[r][j] * x[j];
    x[r] = s / A[r][r];
  }
  return x[0];
}

}  // namespace

CesaroOutcome clim(const ResidualSampler& sampler, int max_power, const LimitProbe& probe) {
  if (max_power < 0) throw DomainError("max averaging power must be non-negative");
  if (probe.scales < 2 || probe.t0 <= 0.0) throw DomainError("bad probe schedule");

  double max_phase = 0.0;
  for (double p : probe.phases) max_phase = std::max(max_phase, p);
  double t_max = probe.t0 * std::ldexp(1.0, probe.scales - 1) + max_phase + 1.0;
  AveragingLevels levels(sampler, t_max);

  size_t np = probe.phases.size();
  std::vector<double> ts(static_cast<size_t>(probe.scales));
  std::string diag;

  for (int n = 0; n <= max_power; ++n) {
    std::vector<Complex> phase_limits(np);
    double last_osc = 0.0;
    bool finite = true;
    bool decaying = true;
    for (size_t p = 0; p < np && finite; ++p) {
      std::vector<Complex> vs(static_cast<size_t>(probe.scales));
      for (int i = 0; i < probe.scales; ++i) {
        ts[static_cast<size_t>(i)] = probe.t0 * std::ldexp(1.0, i) + probe.phases[p];
        vs[static_cast<size_t>(i)] = levels.evaluate(n, ts[static_cast<size_t>(i)]);
        if (!std::isfinite(vs[static_cast<size_t>(i)].real()) ||
            !std::isfinite(vs[static_cast<size_t>(i)].imag()))
          finite = false;
      }
      if (!finite) break;
      phase_limits[p] = extrapolate(ts, vs);
      size_t S = vs.size();
      double d_new = std::abs(vs[S - 1] - vs[S - 2]);
      last_osc = std::max(last_osc, d_new);
      // successive differences must decay across doublings; a residual that
      // still carries ln growth keeps them constant although the phase
      // spread shrinks like 1/t
      if (S >= 4) {
        double d_old = std::abs(vs[S - 3] - vs[S - 4]);
        double floor = probe.tolerance * std::max(1.0, std::abs(phase_limits[p])) * 0.1;
        if (d_new > floor && d_new > 0.6 * d_old) decaying = false;
      }
    }
    if (!finite) continue;
    double spread = 0.0;
    for (size_t p = 0; p < np; ++p)
      for (size_t q = p + 1; q < np; ++q)
        spread = std::max(spread, std::abs(phase_limits[p] - phase_limits[q]));
    double scale = std::max(1.0, std::abs(phase_limits[0]));
    if (decaying && spread <= probe.tolerance * scale) {
      CesaroOutcome out;
      out.limit = phase_limits[0];
      out.averaging_power = n;
      out.stripped = sampler.stripped();
      out.tail_estimate = last_osc;
      return out;
    }
    if (n == max_power) {
      // ln-growth diagnostic: regress the phase-0 sequence against ln t
      std::vector<Complex> vs(static_cast<size_t>(probe.scales));
      for (int i = 0; i < probe.scales; ++i)
        vs[static_cast<size_t>(i)] =
            levels.evaluate(n, probe.t0 * std::ldexp(1.0, i) + probe.phases[0]);
      Complex slope = (vs[vs.size() - 1] - vs[vs.size() - 2]) / std::log(2.0);
      std::ostringstream os;
      os << "probe spread " << spread << " exceeds tolerance at every power <= " << max_power;
      if (std::abs(slope) > 10.0 * probe.tolerance)
        os << "; residual ln-growth with slope ~ (" << slope.real() << ", " << slope.imag()
           << ") suggests an eigenvalue-1 generalised eigenfunction";
      diag = os.str();
    }
  }
  throw NotCesaroSummable("no averaging power up to " + std::to_string(max_power) +
                              " stabilises the residual",
                          diag);
}

}  // namespace cesaro

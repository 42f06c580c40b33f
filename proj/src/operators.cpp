#include "cesaro/operators.hpp"

#include <algorithm>
#include <cmath>

#include "cesaro/legendre_series.hpp"
#include "cesaro/remainder.hpp"
#include "cesaro/special.hpp"

namespace cesaro {

const std::vector<CorpusFunction>& operator_corpus() {
  static const std::vector<CorpusFunction> corpus = {
      {"const-one", [](double) { return Complex(1.0); }, [](double) { return Complex(0.0); },
       [](double t) { return Complex(t); }, 0.0},
      {"identity", [](double t) { return Complex(t); }, [](double) { return Complex(1.0); },
       [](double t) { return Complex(0.5 * t * t); }, 1.0},
      {"square", [](double t) { return Complex(t * t); }, [](double t) { return Complex(2.0 * t); },
       [](double t) { return Complex(t * t * t / 3.0); }, 2.0},
      {"sqrt", [](double t) { return Complex(std::sqrt(t)); },
       [](double t) { return Complex(0.5 / std::sqrt(t)); },
       [](double t) { return Complex(2.0 / 3.0 * std::pow(t, 1.5)); }, 0.5},
      {"osc", [](double t) { return Complex(std::sin(t)); },
       [](double t) { return Complex(std::cos(t)); },
       [](double t) { return Complex(1.0 - std::cos(t)); }, 1.0, 2.0 * kPi},
      {"recip-sqrt", [](double t) { return Complex(1.0 / std::sqrt(t)); },
       [](double t) { return Complex(-0.5 * std::pow(t, -1.5)); },
       [](double t) { return Complex(2.0 * std::sqrt(t)); }, -0.5},
  };
  return corpus;
}

const CorpusFunction& corpus_fn(const std::string& id) {
  for (const auto& c : operator_corpus())
    if (c.id == id) return c;
  throw DomainError("unknown corpus function: " + id);
}

OperatorSample make_sample(const std::string& fn_id, std::vector<double> grid) {
  const CorpusFunction& c = corpus_fn(fn_id);
  OperatorSample s;
  s.fn_id = fn_id;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0) throw DomainError("grid points must be positive");
    if (i > 0 && grid[i] <= grid[i - 1]) throw DomainError("grid must be strictly increasing");
  }
  s.grid = std::move(grid);
  s.values.reserve(s.grid.size());
  for (double t : s.grid) s.values.push_back(c.f(t));
  return s;
}

namespace {

// derivative of the sample at every grid point: analytic when corpus-backed,
// else local degree-4 polynomial fit over the 5 nearest points
std::vector<Complex> sample_derivative(const OperatorSample& s) {
  std::vector<Complex> d(s.grid.size());
  if (!s.fn_id.empty()) {
    const CorpusFunction& c = corpus_fn(s.fn_id);
    for (size_t i = 0; i < s.grid.size(); ++i) d[i] = c.df(s.grid[i]);
    return d;
  }
  size_t n = s.grid.size();
  if (n < 5) throw DomainError("grid too coarse for the 5-point stencil");
  // points per decade check
  for (size_t i = 0; i + 4 < n; ++i)
    if (s.grid[i + 4] > 10.0 * s.grid[i])
      throw DomainError("grid resolution below 5 points per decade");
  for (size_t i = 0; i < n; ++i) {
    size_t lo = i < 2 ? 0 : std::min(i - 2, n - 5);
    // divided-difference derivative of the interpolating polynomial
    double x[5];
    Complex y[5];
    for (int j = 0; j < 5; ++j) {
      x[j] = s.grid[lo + static_cast<size_t>(j)];
      y[j] = s.values[lo + static_cast<size_t>(j)];
    }
    Complex der = 0.0;
    for (int j = 0; j < 5; ++j) {
      Complex basis_der = 0.0;
      for (int m = 0; m < 5; ++m) {
        if (m == j) continue;
        Complex prod = 1.0;
        for (int l = 0; l < 5; ++l) {
          if (l == j || l == m) continue;
          prod *= (s.grid[i] - x[l]) / (x[j] - x[l]);
        }
        basis_der += prod / (x[j] - x[m]);
      }
      der += y[j] * basis_der;
    }
    d[i] = der;
  }
  return d;
}

}  // namespace

OperatorSample apply_P_inverse(const OperatorSample& sample) {
  std::vector<Complex> d = sample_derivative(sample);
  OperatorSample out;
  out.grid = sample.grid;
  out.values.resize(sample.values.size());
  for (size_t i = 0; i < sample.grid.size(); ++i)
    out.values[i] = sample.grid[i] * d[i] + sample.values[i];
  return out;
}

OperatorSample apply_generator(const OperatorSample& sample, GeneratorKind which) {
  std::vector<Complex> d = sample_derivative(sample);
  OperatorSample out;
  out.grid = sample.grid;
  out.values.resize(sample.values.size());
  for (size_t i = 0; i < sample.grid.size(); ++i) {
    double t = sample.grid[i];
    out.values[i] = (which == GeneratorKind::Dilation ? t : t * std::log(t)) * d[i];
  }
  return out;
}

namespace {

// Iterated averaging of a smooth function on (0, t_max]: cumulative panel
// integrals with Legendre interpolants per panel, dyadic refinement at 0.
// `wavelength` bounds the local oscillation scale of the integrand so panels
// stay resolved (empty = no oscillation).
class SmoothAverager {
 public:
  SmoothAverager(std::function<Complex(double)> f, double t_max,
                 std::function<double(double)> wavelength = {})
      : f_(std::move(f)) {
    double first = std::min(1.0, t_max);
    breaks_.push_back(0.0);
    for (int j = 96; j >= 1; --j) breaks_.push_back(first * std::ldexp(1.0, -j));
    double cap = std::max(t_max / 256.0, 1e-6 * t_max);
    double t = first;
    while (t < t_max) {
      breaks_.push_back(t);
      double step = std::min(cap, std::max(first / 4.0, t / 8.0));
      if (wavelength) step = std::min(step, std::max(1e-9 * t_max, wavelength(t) / 6.0));
      t += step;
    }
    breaks_.push_back(t_max);
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
    // drop micro-panels created by the final clamp
    for (size_t i = 1; i + 1 < breaks_.size(); ++i) {
      if (breaks_[i + 1] - breaks_[i] < 1e-12 * t_max && breaks_[i] > first) {
        breaks_.erase(breaks_.begin() + static_cast<ptrdiff_t>(i));
        break;
      }
    }
  }

  Complex average(int n, double t) {
    if (n == 0) return f_(t);
    // below the first dyadic break the panel coordinate degenerates; the
    // averaged value is continuous there, so clamp (callers only sample this
    // region as an integrand over a vanishing measure)
    t = std::max(t, breaks_[1]);
    while (static_cast<int>(levels_.size()) < n) build_level();
    const Level& lv = levels_[static_cast<size_t>(n - 1)];
    size_t k = segment_of(t);
    double len = breaks_[k + 1] - breaks_[k];
    double x = 2.0 * (t - breaks_[k]) / len - 1.0;
    Complex integral = lv.integral_at_breaks[k] +
                       legendre::partial_integral(lv.prev_coeffs[k], len, x);
    return integral / t;
  }

 private:
  struct Level {
    std::vector<legendre::Series> prev_coeffs;  // series of the integrand h_{n-1}
    std::vector<Complex> integral_at_breaks;    // I_n at segment starts
  };

  std::function<Complex(double)> f_;
  std::vector<double> breaks_;
  std::vector<Level> levels_;

  size_t segment_of(double t) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    size_t k = static_cast<size_t>(std::max<ptrdiff_t>(1, it - breaks_.begin())) - 1;
    return std::min(k, breaks_.size() - 2);
  }

  void build_level() {
    int n = static_cast<int>(levels_.size()) + 1;  // building I_n and h_n access
    Level lv;
    size_t nseg = breaks_.size() - 1;
    lv.prev_coeffs.resize(nseg);
    lv.integral_at_breaks.assign(breaks_.size(), 0.0);
    WideComplex acc = 0.0L;
    for (size_t k = 0; k < nseg; ++k) {
      double a = breaks_[k], b = breaks_[k + 1];
      double len = b - a, mid = 0.5 * (a + b), half = 0.5 * len;
      legendre::Series vals;
      for (int i = 0; i < legendre::kN; ++i) {
        double t = mid + half * GaussLegendre16::nodes[i];
        vals[static_cast<size_t>(i)] = n == 1 ? f_(t) : average(n - 1, t);
      }
      lv.prev_coeffs[k] = legendre::project(vals);
      lv.integral_at_breaks[k] =
          Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
      Complex seg = legendre::full_integral(lv.prev_coeffs[k], len);
      acc += WideComplex(seg.real(), seg.imag());
    }
    lv.integral_at_breaks[nseg] =
        Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    levels_.push_back(std::move(lv));
  }
};

}  // namespace

Complex average_corpus(const std::string& fn_id, int n, double t) {
  const CorpusFunction& c = corpus_fn(fn_id);
  if (n == 0) return c.f(t);
  if (n == 1 && c.antiderivative) return c.antiderivative(t) / t;
  SmoothAverager avg(c.f, t * 1.000001);
  return avg.average(n, t);
}

double qtilde_at_one(double r) {
  // representation qtilde(P) = 1 + a (P - 1): the fixed point is structural
  double a = 1.0 - std::exp(-r);
  return 1.0 + a * 0.0;
}

double scaling_commutation_residual(const std::string& fn_id, double r, double t) {
  return scaling_commutation_power_residual(fn_id, r, t, 1);
}

double scaling_commutation_power_residual(const std::string& fn_id, double r, double t, int n) {
  if (r <= 0.0 || t <= 0.0) throw DomainError("r and t must be positive");
  if (r > 3.0) throw DomainError("flow parameter capped at 3");
  if (n < 1 || n > 3) throw DomainError("composition power must lie in 1..3");
  const CorpusFunction& c = corpus_fn(fn_id);
  // r is the flow parameter of the scaling generator: the group element it
  // generates raises the argument to the power e^r, and the averaging
  // polynomial reads ((e^r - 1)/e^r) P + 1/e^r
  double rho = std::exp(r);
  if (c.power_at_zero * rho <= -1.0)
    throw DomainError("scaled corpus entry not integrable near 0");
  if (c.power_at_zero <= -1.0) throw DomainError("corpus entry not integrable near 0");

  // oscillation scale of f(u^rho) in u (chain rule); empty for smooth entries
  std::function<double(double)> composed_wavelength;
  std::function<double(double)> base_wavelength;
  if (c.wavelength > 0.0) {
    double L = c.wavelength;
    composed_wavelength = [L, rho](double u) {
      double slope = rho * std::pow(std::max(u, 1e-30), rho - 1.0);
      return L / std::max(slope, 1e-30);
    };
    base_wavelength = [L](double) { return L; };
    if (std::pow(t, rho) > 5e4)
      throw DomainError("scaled oscillation horizon too large to resolve");
  }

  // LHS: P^n[S f](t) with S[f](u) = f(u^rho)
  SmoothAverager lhs_avg([&](double u) { return c.f(std::pow(u, rho)); }, t * 1.000001,
                         composed_wavelength);
  Complex lhs = lhs_avg.average(n, t);

  // RHS: sum_j C(n,j) a^j (1-a)^(n-j) P^j[g](t),  g = S o P^n[f]
  double tr = std::pow(t, rho);
  SmoothAverager pn_f(c.f, tr * 1.000001, base_wavelength);
  auto g = [&](double u) -> Complex {
    double ur = std::pow(u, rho);
    if (n == 1 && c.antiderivative) return c.antiderivative(ur) / ur;
    return pn_f.average(n, ur);
  };
  SmoothAverager g_avg(g, t * 1.000001, composed_wavelength);
  double a = 1.0 - std::exp(-r);
  Complex rhs = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= n; ++j) {
    double coeff = binom * std::pow(a, j) * std::pow(1.0 - a, n - j);
    rhs += coeff * g_avg.average(j, t);
    binom = binom * (n - j) / (j + 1.0);
  }
  return std::abs(lhs - rhs);
}

std::vector<std::string> dilation_case_names() {
  return {"zeta-s0", "zeta-s2", "zeta-sm1", "log-gamma", "gamma-mult-n2"};
}

double dilation_invariance_check(const std::string& case_id, double r, Complex z0) {
  if (!(r >= 0.1 && r <= 10.0)) throw DomainError("dilation factor must lie in [0.1, 10]");
  RemainderOptions opt;
  opt.k = 64;
  opt.order = 8;
  if (case_id == "zeta-s0") {
    Complex orig = remainder_sum(SummandKind::constant(1.0), z0, DirectionSpec::Plus, opt).limit;
    Complex dil =
        remainder_sum_spaced(SummandKind::constant(1.0), r * z0, r, false, opt).limit;
    return std::abs(dil - orig);
  }
  if (case_id == "zeta-s2" || case_id == "zeta-sm1") {
    Complex s = case_id == "zeta-s2" ? Complex(2.0) : Complex(-1.0);
    Complex orig = remainder_sum(SummandKind::power(s), z0, DirectionSpec::Plus, opt).limit;
    // summands at r(z0+j) carry the natural values (r(z0+j))^(-s); the
    // homogeneity bookkeeping scales them back by r^s
    Complex dil = remainder_sum_spaced(SummandKind::power(s), r * z0, r, false, opt).limit;
    return std::abs(std::exp(s * std::log(r)) * dil - orig);
  }
  if (case_id == "log-gamma") {
    Complex orig = remainder_sum(SummandKind::log(), z0, DirectionSpec::Plus, opt).limit;
    Complex dil = remainder_sum_spaced(SummandKind::log(), r * z0, r, false, opt).limit;
    // ln(r w) = ln r + ln w: the constant sheet contributes ln(r) R_+[1](z0)
    Complex bookkeeping = std::log(r) * (-z0 - 0.5);
    return std::abs(dil - bookkeeping - orig);
  }
  if (case_id == "gamma-mult-n2") {
    // two 2-dilated lattices interleave onto the unit lattice at z0
    Complex orig = remainder_sum(SummandKind::log(), z0, DirectionSpec::Plus, opt).limit;
    Complex acc = 0.0;
    for (int l = 1; l <= 2; ++l) {
      Complex y = z0 / 2.0 - (2.0 - l) / 2.0;
      acc += remainder_sum_spaced(SummandKind::log(), 2.0 * y, 2.0, false, opt).limit;
    }
    return std::abs(acc - orig);
  }
  throw DomainError("unknown dilation case: " + case_id);
}

}  // namespace cesaro

#include "cesaro/quadrature.hpp"

#include <cmath>
#include <vector>

namespace cesaro {

namespace {

// K15 abscissae/weights and embedded G7 weights (positive half; symmetric).
const double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  Complex integral;
  double error;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex result_k = kronrod_w[7] * fc;
  Complex result_g = gauss_w[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kronrod_x[i];
    Complex fsum = f(c - dx) + f(c + dx);
    result_k += kronrod_w[i] * fsum;
    if (i % 2 == 1) result_g += gauss_w[i / 2] * fsum;
  }
  result_k *= h;
  result_g *= h;
  return {result_k, std::abs(result_k - result_g)};
}

void adaptive_rec(const std::function<Complex(double)>& f, double a, double b, double tol,
                  int depth, int max_depth, Complex& acc) {
  PanelResult r = gk15(f, a, b);
  if (r.error <= tol || depth >= max_depth) {
    acc += r.integral;
    return;
  }
  double c = 0.5 * (a + b);
  adaptive_rec(f, a, c, 0.5 * tol, depth + 1, max_depth, acc);
  adaptive_rec(f, c, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  PanelResult first = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(first.integral));
  if (first.error <= tol) return first.integral;
  Complex acc = 0.0;
  adaptive_rec(f, a, b, tol, 0, max_depth, acc);
  return acc;
}

const double GaussLegendre16::nodes[16] = {
    -0.989400934991649932596154173450333, -0.944575023073232576077988415534608,
    -0.865631202387831743880467897712393, -0.755404408355003033895101194847442,
    -0.617876244402643748446671764048791, -0.458016777657227386342419442983578,
    -0.281603550779258913230460501460496, -0.095012509837637440185319335424958,
    0.095012509837637440185319335424958,  0.281603550779258913230460501460496,
    0.458016777657227386342419442983578,  0.617876244402643748446671764048791,
    0.755404408355003033895101194847442,  0.865631202387831743880467897712393,
    0.944575023073232576077988415534608,  0.989400934991649932596154173450333};
const double GaussLegendre16::weights[16] = {
    0.027152459411754094851780572456018, 0.062253523938647892862843836994378,
    0.095158511682492784809925107602246, 0.124628971255533872052476282192016,
    0.149595988816576732081501730547478, 0.169156519395002538189312079030360,
    0.182603415044923588866763667969220, 0.189450610455068496285396723208283,
    0.189450610455068496285396723208283, 0.182603415044923588866763667969220,
    0.169156519395002538189312079030360, 0.149595988816576732081501730547478,
    0.124628971255533872052476282192016, 0.095158511682492784809925107602246,
    0.062253523938647892862843836994378, 0.027152459411754094851780572456018};

Complex integrate_composite_gl(const std::function<Complex(double)>& f, double a, double b,
                               int panels, int nodes_per_panel) {
  (void)nodes_per_panel;
  if (panels < 1) panels = 1;
  WideComplex acc = 0.0L;
  double len = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * len;
    double half = 0.5 * len;
    double mid = lo + half;
    for (int i = 0; i < 16; ++i) {
      Complex v = f(mid + half * GaussLegendre16::nodes[i]) * (GaussLegendre16::weights[i] * half);
      acc += WideComplex(v.real(), v.imag());
    }
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace cesaro

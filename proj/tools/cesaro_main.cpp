#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesaro/config.hpp"
#include "cesaro/format.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/remainder.hpp"
#include "cesaro/special.hpp"
#include "cesaro/trace.hpp"
#include "cesaro/verification.hpp"

namespace {

using namespace cesaro;

constexpr int kExitPass = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNotSummable = 4;

struct CliState {
  RunConfig cfg;
  std::string config_path;
  std::string format_flag;
  int precision_flag = -1;
  double tol_flag = -1.0;
  int k_flag = -1;
  int order_flag = -1;
  std::uint64_t seed_flag = 0;
  bool seed_set = false;

  void finalise() {
    cfg = load_config(config_path);
    if (!format_flag.empty()) cfg.output_format = parse_output_format(format_flag);
    if (precision_flag > 0) cfg.precision = precision_flag;
    if (tol_flag > 0.0) cfg.tol = tol_flag;
    if (k_flag > 0) cfg.k_default = k_flag;
    if (order_flag >= 0) cfg.order_default = order_flag;
    if (seed_set) cfg.seed = seed_flag;
    cfg.validate();
  }
};

void print_value(const CliState& st, const std::string& command, Complex value,
                 double tail_estimate) {
  switch (st.cfg.output_format) {
    case OutputFormat::Json: {
      nlohmann::json j{{"command", command},
                       {"value_re", value.real()},
                       {"value_im", value.imag()},
                       {"tail_estimate", tail_estimate}};
      std::cout << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      std::cout << "value_re,value_im,tail_estimate\n"
                << format_real(value.real(), st.cfg.precision) << ","
                << format_real(value.imag(), st.cfg.precision) << ","
                << format_real(tail_estimate, st.cfg.precision) << "\n";
      break;
    default:
      std::cout << format_complex(value, st.cfg.precision) << "  (tail <= "
                << format_real(tail_estimate, 3) << ")\n";
      break;
  }
}

SummandKind parse_kind(const std::string& kind, const std::string& s_text,
                       const std::string& c_text) {
  if (kind == "log") return SummandKind::log();
  if (kind == "power") return SummandKind::power(parse_complex(s_text.empty() ? "0" : s_text));
  if (kind == "const") return SummandKind::constant(parse_complex(c_text.empty() ? "1" : c_text));
  throw ParseError("unknown summand kind: " + kind + " (expected power|log|const)");
}

DirectionSpec parse_direction(const std::string& dir) {
  if (dir == "plus") return DirectionSpec::Plus;
  if (dir == "pluszero") return DirectionSpec::PlusZero;
  if (dir == "minus") return DirectionSpec::Minus;
  if (dir == "minuszero") return DirectionSpec::MinusZero;
  if (dir == "bidirectional") return DirectionSpec::Bidirectional;
  throw ParseError("unknown direction: " + dir);
}

int run_verify(const CliState& st, const std::string& suite) {
  std::vector<VerifyCase> cases;
  try {
    cases = run_verify_suite(suite, st.cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  if (st.cfg.output_format == OutputFormat::Csv)
    std::cout << "suite,case,residual,tol,pass\n";
  for (const auto& c : cases) {
    all_pass = all_pass && c.pass;
    switch (st.cfg.output_format) {
      case OutputFormat::Json: {
        nlohmann::json j{{"suite", c.suite},
                         {"case", c.name},
                         {"residual", c.residual},
                         {"tol", c.tol},
                         {"pass", c.pass}};
        std::cout << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        std::cout << c.suite << "," << c.name << "," << format_real(c.residual, 6) << ","
                  << format_real(c.tol, 3) << "," << (c.pass ? "true" : "false") << "\n";
        break;
      default:
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.suite << "/" << c.name
                  << "  residual " << format_real(c.residual, 4) << " vs tol "
                  << format_real(c.tol, 3) << "\n";
        break;
    }
  }
  return all_pass ? kExitPass : kExitSuiteFail;
}

int run_trace(const CliState& st, const std::string& kind, const std::string& z0_text,
              const std::string& s_text, double range_min, double range_max, double h) {
  if (!(range_max > range_min) || range_min < 0.0) {
    std::cerr << "error: empty or negative trace range\n";
    return kExitUsage;
  }
  PSumTrace trace = [&] {
    if (kind == "staircase") return staircase_trace(h, std::max(range_max, 100.0));
    Complex z0 = parse_complex(z0_text.empty() ? "0" : z0_text);
    SummandKind f = kind == "zeta" ? SummandKind::power(parse_complex(s_text.empty() ? "0" : s_text))
                                   : parse_kind(kind, s_text, "1");
    int count = static_cast<int>(std::ceil(range_max)) + 1;
    return remainder_trace(f, z0, false, count);
  }();
  std::cout << "t,z_re,z_im,psum_re,psum_im,averaged_re,averaged_im\n";
  const int digits = 17;
  auto row = [&](double t) {
    Complex z = trace.ray().point(t);
    Complex v = trace.value(t);
    Complex avg = t > 0.0 ? apply_P_exact(trace, t) : Complex(0.0, 0.0);
    std::cout << format_real(t, digits) << "," << format_real(z.real(), digits) << ","
              << format_real(z.imag(), digits) << "," << format_real(v.real(), digits) << ","
              << format_real(v.imag(), digits) << "," << format_real(avg.real(), digits) << ","
              << format_real(avg.imag(), digits) << "\n";
  };
  row(range_min);
  for (const auto& j : trace.jumps()) {
    if (j.t > range_min && j.t <= range_max) row(j.t);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalised Cesaro summation toolkit: special functions along complex rays"};
  app.require_subcommand(1);

  CliState st;
  app.add_option("--config", st.config_path, "config file (key=value; CESARO_CONFIG env fallback)");
  app.add_option("--format", st.format_flag, "output format: human|json|csv");
  app.add_option("--precision", st.precision_flag, "significant digits (>= 15)");
  app.add_option("--tol", st.tol_flag, "verification tolerance override");
  app.add_option("--k", st.k_flag, "acceleration depth override");
  app.add_option("--order", st.order_flag, "Bernoulli correction order override");
  auto* seed_opt = app.add_option("--seed", st.seed_flag, "seed for randomized suites");

  std::string z_text, z0_text, s_text, c_text, kind, dir = "plus", suite;
  double range_min = 0.0, range_max = 0.0, h = 1e-3;

  auto* cmd_gamma = app.add_subcommand("gamma", "factorial extension Gamma(z+1)");
  cmd_gamma->fallthrough();
  cmd_gamma->add_option("--z", z_text, "argument (a+bi)")->required();

  auto* cmd_hzeta = app.add_subcommand("hzeta", "Hurwitz zeta zeta_H(z0; s)");
  cmd_hzeta->fallthrough();
  cmd_hzeta->add_option("--z0", z0_text, "base point (a+bi)")->required();
  cmd_hzeta->add_option("--s", s_text, "exponent (a+bi)")->required();

  auto* cmd_zeta = app.add_subcommand("zeta", "Riemann zeta");
  cmd_zeta->fallthrough();
  cmd_zeta->add_option("--s", s_text, "argument (a+bi)")->required();

  auto* cmd_fsum = app.add_subcommand("finite-sum", "sum_{j=1}^{upper} f(j), complex upper");
  cmd_fsum->fallthrough();
  cmd_fsum->add_option("--kind", kind, "power|log|const")->required();
  cmd_fsum->add_option("--upper", z_text, "upper limit (a+bi)")->required();
  cmd_fsum->add_option("--s", s_text, "exponent for kind=power");
  cmd_fsum->add_option("--c", c_text, "value for kind=const");

  auto* cmd_rsum = app.add_subcommand("rsum", "remainder sum of f relative to z0");
  cmd_rsum->fallthrough();
  bool tvar_strip = false;
  cmd_rsum->add_option("--kind", kind, "power|log|const")->required();
  cmd_rsum->add_option("--z0", z0_text, "base point (a+bi)")->required();
  cmd_rsum->add_option("--dir", dir, "plus|pluszero|minus|minuszero|bidirectional");
  cmd_rsum->add_option("--s", s_text, "exponent for kind=power");
  cmd_rsum->add_option("--c", c_text, "value for kind=const");
  cmd_rsum->add_flag("--tvar-strip", tvar_strip,
                     "strip in the arc-length parameter (wrong-variable diagnostic)");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->fallthrough();
  cmd_verify->add_option("suite", suite, "suite name")->required();

  auto* cmd_trace = app.add_subcommand("trace", "emit a p-sum trace as CSV");
  cmd_trace->fallthrough();
  cmd_trace->add_option("--kind", kind, "zeta|log|const|staircase")->required();
  cmd_trace->add_option("--z0", z0_text, "base point (a+bi)");
  cmd_trace->add_option("--s", s_text, "exponent for kind=zeta");
  cmd_trace->add_option("--min", range_min, "range start")->required();
  cmd_trace->add_option("--max", range_max, "range end")->required();
  cmd_trace->add_option("--step", h, "staircase step h");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    st.seed_set = seed_opt->count() > 0;
    st.finalise();
    RemainderOptions opt;
    opt.k = std::max(48, st.cfg.k_default);

    if (cmd_gamma->parsed()) {
      GammaResult g = log_gamma(parse_complex(z_text), st.cfg.k_default, st.cfg.order_default);
      double tail = std::abs(std::pow(std::abs(parse_complex(z_text) + double(st.cfg.k_default)),
                                      -2.0 * st.cfg.order_default - 1.0));
      print_value(st, "gamma", g.value, tail);
      return kExitPass;
    }
    if (cmd_hzeta->parsed()) {
      HurwitzResult r = hurwitz_zeta(parse_complex(z0_text), parse_complex(s_text));
      print_value(st, "hzeta", r.value, 0.0);
      return kExitPass;
    }
    if (cmd_zeta->parsed()) {
      print_value(st, "zeta", riemann_zeta(parse_complex(s_text)), 0.0);
      return kExitPass;
    }
    if (cmd_fsum->parsed()) {
      SummandKind f = parse_kind(kind, s_text, c_text);
      print_value(st, "finite-sum", finite_sum(f, parse_complex(z_text), opt), 0.0);
      return kExitPass;
    }
    if (cmd_rsum->parsed()) {
      SummandKind f = parse_kind(kind, s_text, c_text);
      opt.strip_in_arc_length = tvar_strip;
      CesaroOutcome out = remainder_sum(f, parse_complex(z0_text), parse_direction(dir), opt);
      print_value(st, "rsum", out.limit, out.tail_estimate);
      return kExitPass;
    }
    if (cmd_verify->parsed()) return run_verify(st, suite);
    if (cmd_trace->parsed()) return run_trace(st, kind, z0_text, s_text, range_min, range_max, h);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const NotCesaroSummable& e) {
    std::cerr << "not Cesaro summable: " << e.what();
    if (!e.diagnostics.empty()) std::cerr << " [" << e.diagnostics << "]";
    std::cerr << "\n";
    return kExitNotSummable;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "domain error (pole): " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const MisuseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

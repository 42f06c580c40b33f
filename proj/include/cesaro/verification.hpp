#pragma once

#include <string>
#include <vector>

#include "cesaro/config.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

struct VerifyCase {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

std::vector<std::string> verify_suite_names();

// Runs one named suite deterministically (draws seeded from cfg.seed).
std::vector<VerifyCase> run_verify_suite(const std::string& suite, const RunConfig& cfg);

// Deterministic draw helper shared by suites and the acceptance runner.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  double uniform(double lo, double hi);
  // complex in the box, kept `margin` away from real integers
  Complex complex_box(double re_lo, double re_hi, double im_lo, double im_hi,
                      double integer_margin = 0.0);

 private:
  std::uint64_t state_;
  std::uint64_t next();
};

}  // namespace cesaro

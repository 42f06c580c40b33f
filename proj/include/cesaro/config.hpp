#pragma once

#include <cstdint>
#include <string>

namespace cesaro {

enum class OutputFormat { Human, Json, Csv };

struct RunConfig {
  int precision = 17;        // significant digits emitted (>= 15)
  int k_default = 64;        // default acceleration depth
  int order_default = 3;     // default Bernoulli correction order
  double tol = 1e-8;         // default verification tolerance
  OutputFormat output_format = OutputFormat::Human;
  std::uint64_t seed = 20260810;

  void validate() const;
};

// Loads key=value pairs ('#' comments) from `path`; empty path consults the
// CESARO_CONFIG environment variable and falls back to defaults when unset
// or missing.
RunConfig load_config(const std::string& path = {});

OutputFormat parse_output_format(const std::string& name);

}  // namespace cesaro

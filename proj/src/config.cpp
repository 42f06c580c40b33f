#include "cesaro/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cesaro/types.hpp"

namespace cesaro {

void RunConfig::validate() const {
  if (precision < 15) throw DomainError("precision must be at least 15 digits");
  if (tol <= 0.0) throw DomainError("tolerance must be positive");
  if (k_default < 1) throw DomainError("k_default must be >= 1");
  if (order_default < 0 || order_default > 3) throw DomainError("order_default must lie in 0..3");
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw DomainError("unknown output format: " + name);
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  std::string file = path;
  if (file.empty()) {
    const char* env = std::getenv("CESARO_CONFIG");
    if (env != nullptr) file = env;
  }
  if (file.empty()) return cfg;
  std::ifstream in(file);
  if (!in) {
    if (!path.empty()) throw DomainError("cannot open config file: " + file);
    return cfg;  // env var pointing nowhere: fall back to defaults
  }
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    if (key == "precision") cfg.precision = std::stoi(value);
    else if (key == "k_default") cfg.k_default = std::stoi(value);
    else if (key == "order_default") cfg.order_default = std::stoi(value);
    else if (key == "tol") cfg.tol = std::stod(value);
    else if (key == "output_format") cfg.output_format = parse_output_format(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else throw DomainError("unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

}  // namespace cesaro

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef CESARO_CLI_PATH
#error "CESARO_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  std::string cmd = env_prefix + std::string(CESARO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval subcommands print the expected values") {
  RunResult zeta = run("zeta --s=-1");
  CHECK(zeta.exit_code == 0);
  CHECK(zeta.out.find("-0.0833333") != std::string::npos);

  RunResult gamma = run("gamma --z=3");
  CHECK(gamma.exit_code == 0);
  CHECK(gamma.out.substr(0, 1) == "6");

  RunResult hz = run("hzeta --z0=0.5 --s=0");
  CHECK(hz.exit_code == 0);
  CHECK(hz.out.substr(0, 2) == "-1");

  RunResult fs = run("finite-sum --kind=power --s=-2 --upper=3");
  CHECK(fs.exit_code == 0);
  CHECK(fs.out.substr(0, 2) == "14");

  RunResult rs = run("rsum --kind=const --c=1 --z0=0.25 --dir=plus");
  CHECK(rs.exit_code == 0);
  CHECK(rs.out.find("-0.75") != std::string::npos);
}

TEST_CASE("complex argument syntax") {
  CHECK(run("zeta --s=2+0i").exit_code == 0);
  CHECK(run("hzeta --z0=0.5-0.25i --s=2").exit_code == 0);
  CHECK(run("zeta --s=i").exit_code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("zeta --s=abc").exit_code == 2);            // parse error
  CHECK(run("gamma --z=-2").exit_code == 3);            // pole
  CHECK(run("rsum --kind=log --z0=-3 --dir=plus").exit_code == 3);
  CHECK(run("verify nosuch").exit_code == 2);           // unknown suite
  CHECK(run("trace --kind=zeta --min=5 --max=5").exit_code == 2);  // empty range
  CHECK(run("trace --kind=log --z0=-3 --min=0 --max=10").exit_code == 3);  // pole in range
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify suites run and report") {
  RunResult kernel = run("verify kernel");
  CHECK(kernel.exit_code == 0);
  CHECK(kernel.out.find("pass") != std::string::npos);
  CHECK(kernel.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json verify rows follow the schema") {
  RunResult r = run("verify kernel --format=json --seed=7");
  CHECK(r.exit_code == 0);
  size_t pos = 0, rows = 0;
  while (pos < r.out.size()) {
    size_t nl = r.out.find('\n', pos);
    if (nl == std::string::npos) break;
    std::string line = r.out.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("suite"));
    CHECK(j.contains("case"));
    CHECK(j.contains("residual"));
    CHECK(j.contains("tol"));
    CHECK(j.contains("pass"));
    CHECK(j["pass"].is_boolean());
    ++rows;
  }
  CHECK(rows == 40);  // 4 powers x 10 base points

  RunResult again = run("verify kernel --format=json --seed=7");
  CHECK(again.out == r.out);  // byte-identical under the same seed
}

TEST_CASE("trace emits deterministic CSV") {
  RunResult a = run("trace --kind=zeta --s=0 --z0=0.5 --min=0 --max=10");
  CHECK(a.exit_code == 0);
  CHECK(a.out.rfind("t,z_re,z_im,psum_re,psum_im,averaged_re,averaged_im\n", 0) == 0);
  CHECK(a.out.find("\r") == std::string::npos);  // LF only
  // constant column count
  size_t pos = 0;
  int lines = 0;
  while (pos < a.out.size()) {
    size_t nl = a.out.find('\n', pos);
    if (nl == std::string::npos) break;
    std::string line = a.out.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
    ++lines;
  }
  CHECK(lines >= 11);
  RunResult b = run("trace --kind=zeta --s=0 --z0=0.5 --min=0 --max=10");
  CHECK(b.out == a.out);

  // the p-sum column carries the floor of t for the counting summand
  CHECK(a.out.find("\n3,") != std::string::npos);

  RunResult st = run("trace --kind=staircase --step=0.01 --min=0 --max=100");
  CHECK(st.exit_code == 0);
  // running average column trends towards -0.577
  size_t last_nl = st.out.find_last_of('\n', st.out.size() - 2);
  std::string last = st.out.substr(last_nl + 1);
  size_t field = 0, start = 0;
  double avg_re = 0.0;
  for (size_t i = 0; i <= last.size(); ++i) {
    if (i == last.size() || last[i] == ',') {
      if (field == 5) avg_re = std::stod(last.substr(start, i - start));
      ++field;
      start = i + 1;
    }
  }
  CHECK(avg_re < -0.4);
  CHECK(avg_re > -0.75);
}

TEST_CASE("config file and environment override") {
  std::string path = "/tmp/cesaro_test_config.conf";
  {
    std::ofstream f(path);
    f << "# test config\n";
    f << "seed = 99\n";
    f << "output_format = json\n";
    f << "precision = 16\n";
  }
  RunResult via_flag = run("verify kernel --config=" + path);
  CHECK(via_flag.exit_code == 0);
  CHECK(via_flag.out.find("{") == 0);  // json from config

  RunResult via_env = run("verify kernel", "CESARO_CONFIG=" + path + " ");
  CHECK(via_env.out == via_flag.out);

  // flags beat the config
  RunResult human = run("verify kernel --config=" + path + " --format=human");
  CHECK(human.out.find("pass") != std::string::npos);
  CHECK(human.out.find("{") == std::string::npos);

  std::remove(path.c_str());
}

TEST_CASE("domain and not-summable exit codes") {
  // harmonic-exponent remainder sum: the leading term is logarithmic
  CHECK(run("rsum --kind=power --s=1 --z0=0.5 --dir=plus").exit_code == 3);
  // wrong-variable stripping leaves a pure-log residual
  CHECK(run("rsum --kind=log --z0=1+1i --dir=plus --tvar-strip").exit_code == 4);
  CHECK(run("rsum --kind=log --z0=0 --dir=plus --tvar-strip").exit_code == 0);
}

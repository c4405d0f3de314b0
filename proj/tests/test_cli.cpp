#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SLICECALC_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) r.output += buf.data();
  const int status = pclose(p);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval subcommand") {
  // identity series at e1 prints e1
  std::ofstream("/tmp/sc_cli_id.json")
      << R"({"degree":1,"coeffs":[[0,0,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]]})";
  const RunResult r =
      run("eval /tmp/sc_cli_id.json --point [0,1,0,0,0,0,0,0]");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[0.0,1.0,0.0,0.0,0.0,0.0,0.0,0.0]") != std::string::npos);
  // malformed file exits 2
  std::ofstream("/tmp/sc_cli_bad.json") << "{oops";
  CHECK(run("eval /tmp/sc_cli_bad.json --point [0,0,0,0,0,0,0,0]").exit_code == 2);
  // pole exits 1
  std::ofstream("/tmp/sc_cli_pole.json")
      << R"({"num":{"degree":0,"coeffs":[[1,0,0,0,0,0,0,0]]},"den":[1,-1]})";
  CHECK(run("eval /tmp/sc_cli_pole.json --point [1,0,0,0,0,0,0,0]").exit_code == 1);
}

TEST_CASE("construct round trips through eval") {
  CHECK(run("construct koebe --out /tmp/sc_cli_koebe.json").exit_code == 0);
  const RunResult r =
      run("eval /tmp/sc_cli_koebe.json --point [0.3,0,0,0,0,0,0,0]");
  CHECK(r.exit_code == 0);
  const double expect = 0.3 / 0.49;
  const double got = std::stod(r.output.substr(1));
  CHECK(got == doctest::Approx(expect).epsilon(1e-12));
  // example 3.3 at J prints J
  CHECK(run("construct example_3_3 --out /tmp/sc_cli_ex33.json").exit_code == 0);
  const RunResult r2 =
      run("eval /tmp/sc_cli_ex33.json --point [0,0,1,0,0,0,0,0]");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("[0.0,0.0,1.0,") != std::string::npos);
  // extremal a = 0: numerator w^2 conj(xi), trivial denominator
  CHECK(run("construct extremal --a 0 --out /tmp/sc_cli_e0.json").exit_code == 0);
  CHECK(slurp("/tmp/sc_cli_e0.json").find("\"den\": [") != std::string::npos);
  // invalid parameters exit 2
  CHECK(run("construct mobius --u [2,0,0,0,0,0,0,0] --out /tmp/sc_cli_m.json")
            .exit_code == 2);
  CHECK(run("construct nosuch --out /tmp/sc_cli_n.json").exit_code == 2);
}

TEST_CASE("star and recip subcommands") {
  std::ofstream("/tmp/sc_cli_a.json")
      << R"({"degree":1,"coeffs":[[0,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]})";
  std::ofstream("/tmp/sc_cli_b.json")
      << R"({"degree":1,"coeffs":[[0,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0]]})";
  CHECK(run("star /tmp/sc_cli_a.json /tmp/sc_cli_b.json --out "
            "/tmp/sc_cli_ab.json").exit_code == 0);
  const std::string ab = slurp("/tmp/sc_cli_ab.json");
  CHECK(ab.find("\"degree\": 2") != std::string::npos);
  std::ofstream("/tmp/sc_cli_f.json")
      << R"({"degree":1,"coeffs":[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]})";
  CHECK(run("recip /tmp/sc_cli_f.json --out /tmp/sc_cli_fr.json").exit_code == 0);
  // (1 + w e1)^{-*}: den = 1 + w^2
  CHECK(slurp("/tmp/sc_cli_fr.json").find("1.0,\n    0.0,\n    1.0") !=
        std::string::npos);
  CHECK(run("recip /tmp/sc_cli_f.json --series --degree 8 --out "
            "/tmp/sc_cli_fs.json").exit_code == 0);
  CHECK(slurp("/tmp/sc_cli_fs.json").find("\"degree\": 8") != std::string::npos);
}

TEST_CASE("zeros subcommand") {
  std::ofstream("/tmp/sc_cli_lin.json")
      << R"({"degree":1,"coeffs":[[0,-1,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]]})";
  const RunResult r = run(
      "zeros /tmp/sc_cli_lin.json --x0 0 --y0 1 --delta 0.3 --nodes 2048");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"count\": 2") != std::string::npos);
  CHECK(run("zeros /tmp/sc_cli_lin.json --x0 0 --y0 1 --delta 2.0").exit_code ==
        2);
}

TEST_CASE("verify subcommand") {
  const RunResult ok = run("verify --suite zeros --samples 100");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);
  CHECK(run("verify --suite bogus").exit_code == 2);
  CHECK(run("verify --suite zeros --samples 0").exit_code == 2);
  // identical config twice: byte-identical json
  const RunResult a = run("verify --suite zeros --samples 100 --seed 7 --json");
  const RunResult b = run("verify --suite zeros --samples 100 --seed 7 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  // report renders a stored json report
  std::ofstream("/tmp/sc_cli_rep.json") << a.output;
  const RunResult shown = run("report /tmp/sc_cli_rep.json");
  CHECK(shown.exit_code == 0);
  CHECK(shown.output.find("suite: zeros") != std::string::npos);
}

TEST_CASE("seed environment override") {
  const RunResult a = run("verify --suite zeros --samples 100 --json");
  setenv("SLICECALC_SEED", "12345", 1);
  const RunResult b = run("verify --suite zeros --samples 100 --json");
  const RunResult c = run("verify --suite zeros --samples 100 --seed 42 --json");
  unsetenv("SLICECALC_SEED");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  // flag wins over the environment; default equals seed 42
  CHECK(a.output == c.output);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ridgelab-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  fs::path log = scratch_dir() / ("log-" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string("\"") + RIDGELAB_CLI_PATH + "\" " + args + " > \"" +
                    log.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  CliRun r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WEXITSTATUS(status);
#endif
  std::ifstream in(log);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("list-catalog names functions, activations and experiments") {
  CliRun r = run_cli("list-catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("abs-kink") != std::string::npos);
  CHECK(r.output.find("logistic") != std::string::npos);
  CHECK(r.output.find("relu-power") != std::string::npos);
  CHECK(r.output.find("verify-chain") != std::string::npos);
}

TEST_CASE("verify-chain passes by default and fails for a weak budget") {
  fs::path out = scratch_dir() / "chain-pass";
  CliRun ok = run_cli("verify-chain --set chain.n_hi=200 --out \"" + out.string() + "\"");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verdict: pass") != std::string::npos);
  CHECK(fs::exists(out / "report.json"));
  CHECK(fs::exists(out / "chain.csv"));

  fs::path out_bad = scratch_dir() / "chain-fail";
  CliRun bad = run_cli("verify-chain --set chain.e=2 --set chain.n_hi=50 --out \"" +
                       out_bad.string() + "\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("verdict: fail") != std::string::npos);
  CHECK(slurp(out_bad / "report.json").find("premise") != std::string::npos);
}

TEST_CASE("config errors exit with code 2 and name the field") {
  CliRun missing = run_cli("run --out \"" + (scratch_dir() / "err").string() + "\"");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("experiment") != std::string::npos);

  CliRun no_fn = run_cli("best-approx --out \"" + (scratch_dir() / "err2").string() + "\"");
  CHECK(no_fn.exit_code == 2);
  CHECK(no_fn.output.find("function") != std::string::npos);

  CliRun bad_set = run_cli("verify-chain --set nonsense");
  CHECK(bad_set.exit_code == 2);
}

TEST_CASE("resonance report passes with exact grid values") {
  fs::path out = scratch_dir() / "resonance";
  CliRun r = run_cli("resonance --set tau=4 --out \"" + out.string() + "\"");
  CHECK(r.exit_code == 0);
  std::string json = slurp(out / "report.json");
  CHECK(json.find("\"grid_defect\": 0") != std::string::npos);
  CHECK(fs::exists(out / "resonance-modulus.csv"));
}

TEST_CASE("shatter accepts explicit sign patterns") {
  fs::path out = scratch_dir() / "shatter";
  CliRun r = run_cli("shatter --set n=2 --set signs=+-+ --set restarts=8 --out \"" +
                     out.string() + "\"");
  CHECK(r.exit_code == 0);
  std::string json = slurp(out / "report.json");
  CHECK(json.find("\"fit\": 1") != std::string::npos);
}

TEST_CASE("reports are byte-identical across reruns") {
  fs::path cfg = scratch_dir() / "rates.json";
  {
    std::ofstream f(cfg);
    f << R"({"experiment":"rates","pairs":[[2,0.5],[4,0.25],[8,0.125],[16,0.0625]]})";
  }
  fs::path out1 = scratch_dir() / "rates-1";
  fs::path out2 = scratch_dir() / "rates-2";
  CliRun a = run_cli("run --config \"" + cfg.string() + "\" --out \"" + out1.string() + "\"");
  CliRun b = run_cli("run --config \"" + cfg.string() + "\" --out \"" + out2.string() + "\"");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(slurp(out1 / "report.json") == slurp(out2 / "report.json"));
  CHECK(slurp(out1 / "rates.csv") == slurp(out2 / "rates.csv"));
  CHECK(slurp(out1 / "report.json").find("\"beta\": 1") != std::string::npos);
}

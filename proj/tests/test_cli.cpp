#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HJSL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hjsl_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("identical configurations produce byte-identical outputs") {
  const auto dir1 = fresh_dir("det1");
  const auto dir2 = fresh_dir("det2");
  const std::string args =
      "constants --figure 1 --C 0.01 --rho 1 --a 1 --n 10 --h-ladder 1:2^-10 --out ";
  REQUIRE(run_cli(args + dir1.string()) == 0);
  REQUIRE(run_cli(args + dir2.string()) == 0);
  CHECK(slurp(dir1 / "constants.csv") == slurp(dir2 / "constants.csv"));
  CHECK(slurp(dir1 / "run.meta") == slurp(dir2 / "run.meta"));
  CHECK(!slurp(dir1 / "constants.csv").empty());
}

TEST_CASE("command-line flags override the config file") {
  const auto dir = fresh_dir("config");
  {
    std::ofstream cfg(dir / "exp.cfg");
    cfg << "figure=1\nC=0.02\nn=5\nh-ladder=1:2^-4\n";
  }
  REQUIRE(run_cli("constants --config " + (dir / "exp.cfg").string() +
                  " --n 10 --out " + dir.string()) == 0);
  const std::string meta = slurp(dir / "run.meta");
  CHECK(meta.find("n=10") != std::string::npos);       // flag wins
  CHECK(meta.find("C=0.02") != std::string::npos);     // config supplies the rest
  CHECK(meta.find("figure=1") != std::string::npos);
}

TEST_CASE("unknown subcommands exit with usage status") {
  CHECK(run_cli("no-such-thing") == 2);
  CHECK(run_cli("") == 2);
}

TEST_CASE("hyper-gauss writes the chain with one row per step") {
  const auto dir = fresh_dir("chain");
  REQUIRE(run_cli("hyper-gauss --a 1 --rho 1 --h 0.1 --n 6 --profile quad:b=0.5 "
                  "--m 1025 --R 10 --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "chain.csv");
  CHECK(csv.rfind("n,lambda,logF,boundFactor,fittedC\n", 0) == 0);
  int lines = 0;
  for (const char c : csv) lines += c == '\n';
  CHECK(lines == 8);  // header + n+1 rows
}

TEST_CASE("failed assertions surface in the exit status") {
  const auto dir = fresh_dir("fail");
  // a curved profile fits an order near 3; demanding 5 must fail
  CHECK(run_cli("order --profile quad:b=0.5 --T 0.5 --h-ladder 0.25:0.0625 "
                "--min-order 5 --out " + dir.string()) == 1);
}

TEST_CASE("concentration emits the ladder schema") {
  const auto dir = fresh_dir("ladder");
  REQUIRE(run_cli("concentration --profile sqrt1px2 --T 0.5 --p 0.5 "
                  "--h-ladder 0.2:0.05 --m 513 --R 8 --out " + dir.string()) == 0);
  CHECK(slurp(dir / "ladder.csv").rfind("h,n,p,tailMass,meanErr,supErr,fittedOrder\n", 0) == 0);
  CHECK(slurp(dir / "run.meta").find("subcommand=concentration") != std::string::npos);
}

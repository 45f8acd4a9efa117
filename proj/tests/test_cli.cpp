#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <string>

#include "support/run_process.hpp"

using testsupport::run_process;
namespace fs = std::filesystem;

namespace {

const std::string cli = QUIVMOD_CLI_BIN;

std::string tmp_dir(const std::string& tag) {
  fs::path dir =
      fs::temp_directory_path() / ("quivmod_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("euler subcommand prints the bare integer") {
  auto r = run_process(cli + " euler --quiver 'K[m=3]' --dim 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("poincare text output") {
  auto r = run_process(cli + " poincare --quiver 'K[m=3]' --dim 1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "poincare: 1 + q + q^2\neuler: 3\n");
}

TEST_CASE("default dimension vector is all ones") {
  auto r = run_process(cli + " euler --quiver 'BIP[m=1;src=1^2;snk=1^3]'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6\n");
}

TEST_CASE("mps euler example") {
  auto r = run_process(cli + " mps --a 1 --b 2 --m 4 --level euler");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "mps: 6\nreineke: 6\nagree: true\nshift: 0\n");
}

TEST_CASE("computation errors exit 1 with a message on stderr") {
  auto quiet = run_process(cli + " euler --quiver 'K[m=2]' --dim 2,2 2>/dev/null");
  CHECK(quiet.exit_code == 1);
  CHECK(quiet.out.empty());
  auto err = run_process(cli + " euler --quiver 'K[m=2]' --dim 2,2 2>&1 1>/dev/null");
  CHECK(err.exit_code == 1);
  CHECK(err.out.find("pairs to zero") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_process(cli + " euler --quiver 'Z[m=1]' 2>/dev/null").exit_code == 2);
  CHECK(run_process(cli + " euler 2>/dev/null").exit_code == 2);
  CHECK(run_process(cli + " nonsense 2>/dev/null").exit_code == 2);
  CHECK(run_process(cli + " euler --quiver 'K[m=2]' --dim 1,2,3 2>/dev/null").exit_code == 2);
  CHECK(run_process(cli + " euler --quiver 'K[m=2]' --format csv 2>/dev/null").exit_code == 2);
  CHECK(run_process(cli + " --help >/dev/null").exit_code == 0);
}

TEST_CASE("json output is byte-stable across runs and cache states") {
  std::string cmd = cli + " poincare --quiver 'K[m=4]' --dim 2,3 --format json";
  auto r1 = run_process(cmd);
  auto r2 = run_process(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("\"schema_version\"") != std::string::npos);

  std::string dir = tmp_dir("json");
  auto cold = run_process(cmd + " --cache-dir " + dir);
  auto warm = run_process(cmd + " --cache-dir " + dir);
  auto off = run_process(cmd + " --cache-dir " + dir + " --no-cache");
  CHECK(cold.out == r1.out);
  CHECK(warm.out == r1.out);
  CHECK(off.out == r1.out);
  fs::remove_all(dir);
}

TEST_CASE("cache environment variable is honored") {
  std::string dir = tmp_dir("env");
  auto r = run_process("QUIVER_CACHE_DIR=" + dir + " " + cli +
                       " euler --quiver 'K[m=5]' --dim 1,1");
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir));
  bool has_entry = false;
  for (const auto& entry : fs::directory_iterator(dir))
    has_entry = has_entry || entry.path().extension() == ".json";
  CHECK(has_entry);
  fs::remove_all(dir);
}

TEST_CASE("jobs flag does not change bytes") {
  std::string cmd = cli + " verify --suite reineke --format json";
  auto j1 = run_process(cmd + " --jobs 1");
  auto j8 = run_process(cmd + " --jobs 8");
  CHECK(j1.exit_code == 0);
  CHECK(j8.exit_code == 0);
  CHECK(j1.out == j8.out);
}

TEST_CASE("verify text mode reports per-check lines") {
  auto r = run_process(cli + " verify --suite reineke");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS reineke/kronecker-line/m=1") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("table csv output") {
  auto r = run_process(cli + " table --quantity ratio --a 1 --b 2 --m-list 2,10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a,b,m,ratio\n1,2,2,1/2\n1,2,10,9/10\n");

  auto d = run_process(cli + " table --quantity douglas --a 2 --b 3 --format csv");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("a,b,douglas\n2,3,-0.1732867951") != std::string::npos);

  auto lr = run_process(cli + " table --quantity log-ratio --a 1 --b 1 --m-list 2 --format csv");
  CHECK(lr.exit_code == 0);
  CHECK(lr.out == "a,b,m,log_ratio\n1,1,2,1\n");

  CHECK(run_process(cli + " table --quantity ratio --a 1 --b 2 2>/dev/null").exit_code == 2);
}

TEST_CASE("poly-in-m json carries the leading-coefficient check") {
  auto r = run_process(cli + " poly-in-m --a 1 --b 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"leading_matches\": true") != std::string::npos);
  CHECK(r.out.find("\"poly\": \"-1/2*m + 1/2*m^2\"") != std::string::npos);
}

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harness.hpp"
#include "test_util.hpp"

using namespace su11;
using namespace su11::harness;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("su11_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("eval examples") {
    CHECK(cli({"eval", "meixner", "n=0", "x=5", "beta=1", "c=0.5"}).out == "1\n");
    CHECK(cli({"eval", "cdh", "n=1", "y=0", "a=0.5", "b=0.5", "c=0.5"}).out.rfind("0.75\n", 0) == 0);
    const Run r = cli({"eval", "gauss_2f1", "a=\xe2\x88\x92" "1", "b=2", "c=3", "z=0.5"});
    CHECK(r.code == kPass);
    CHECK(r.out.rfind("0.666666666666667\n", 0) == 0);
    CHECK(r.out.find("path=") != std::string::npos);
    CHECK(cli({"eval", "gamma", "z=0.5,1"}).out.find("i") != std::string::npos);
  }

  TEST_CASE("eval exit codes") {
    CHECK(cli({"eval", "no_such_function", "x=1"}).code == kUsage);
    CHECK(cli({"eval", "meixner", "n=0", "x=5", "beta=1"}).code == kUsage);             // missing c
    CHECK(cli({"eval", "meixner", "n=0", "x=5", "beta=1", "c=0.5", "q=1"}).code == kUsage);  // extra key
    CHECK(cli({"eval", "meixner", "n=0.5", "x=5", "beta=1", "c=0.5"}).code == kUsage);  // not an integer
    CHECK(cli({"eval", "meixner", "n=0", "x=5", "beta=1", "c=1.5"}).code == kDomain);
    CHECK(cli({"eval", "gamma", "z=-2"}).code == kDomain);
    CHECK(cli({}).code == kUsage);
    CHECK(cli({"frobnicate"}).code == kUsage);
  }

  TEST_CASE("verify exit codes") {
    CHECK(cli({"verify", "conti1"}).code == kPass);
    CHECK(cli({"verify", "bilinear_sum", "--tol", "1e-30"}).code == kFailure);
    CHECK(cli({"verify", "no_such_identity"}).code == kUsage);
    CHECK(cli({"verify", "conti1", "--tol", "-1"}).code == kUsage);
    CHECK(cli({"verify", "conti1", "--format", "xml"}).code == kUsage);
    CHECK(cli({"verify", "conti1", "--config", "/nonexistent/su11.ini"}).code == kUsage);
  }

  TEST_CASE("boundary t gives skipped cases and exit 0") {
    const std::string ini = temp_path("boundary.ini"), out = temp_path("boundary.json");
    std::ofstream(ini) << "[grid.poisson_kernel]\nt = 0.3\n";
    const Run r = cli({"verify", "poisson_kernel", "--config", ini, "--out", out});
    CHECK(r.code == kPass);
    CHECK(slurp(out).find("\"status\": \"SKIPPED\"") != std::string::npos);
  }

  TEST_CASE("report schema") {
    const Run r = cli({"verify", "generating_functions"});
    REQUIRE(r.code == kPass);
    for (const char* key : {"\"run_id\"", "\"config_digest\"", "\"cases\"", "\"lhs_re\"", "\"lhs_im\"", "\"rhs_re\"",
                            "\"rhs_im\"", "\"abs_err\"", "\"rel_err\"", "\"terms_used\"", "\"tail_estimate\"",
                            "\"status\"", "splitmix64-counter"})
      CHECK(r.out.find(key) != std::string::npos);
    const Run csv = cli({"verify", "generating_functions", "--format", "csv"});
    CHECK(csv.out.find("id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,terms_used,tail_estimate") !=
          std::string::npos);
  }

  TEST_CASE("reports are deterministic and seed dependent") {
    const Run a = cli({"verify", "conti1", "--seed", "9"});
    const Run b = cli({"verify", "conti1", "--seed", "9"});
    const Run c = cli({"verify", "conti1", "--seed", "10"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
  }

  TEST_CASE("config, environment and flag precedence") {
    RunConfig cfg;
    ::setenv("SU11_SEED", "111", 1);
    ::setenv("SU11_TOLERANCE_CONTI1", "1e-9", 1);
    apply_environment(cfg);
    CHECK(cfg.seed == 111);
    CHECK(cfg.tolerance.at("conti1") == 1e-9);
    apply_config_text(cfg, "seed = 222\n[tolerance]\nconti1 = 1e-8 # looser\n[truncation]\nbilinear_sum = 300\n");
    CHECK(cfg.seed == 222);  // the file wins over the environment
    CHECK(cfg.tolerance.at("conti1") == 1e-8);
    CHECK(cfg.truncation.at("bilinear_sum") == 300);
    ::unsetenv("SU11_SEED");
    ::unsetenv("SU11_TOLERANCE_CONTI1");

    const std::string ini = temp_path("seed.ini");
    std::ofstream(ini) << "seed = 5\n";
    ::setenv("SU11_SEED", "6", 1);
    const Run from_file = cli({"verify", "conti1", "--config", ini});
    const Run from_flag = cli({"verify", "conti1", "--config", ini, "--seed", "7"});
    ::unsetenv("SU11_SEED");
    CHECK(from_file.out.find("\"seed\": 5") != std::string::npos);
    CHECK(from_flag.out.find("\"seed\": 7") != std::string::npos);
  }

  TEST_CASE("config errors") {
    RunConfig cfg;
    CHECK_THROWS_AS(apply_config_text(cfg, "bogus = 1\n"), UsageError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[unknown]\nx = 1\n"), UsageError);
    CHECK_THROWS_AS(apply_config_text(cfg, "seed\n"), UsageError);
    apply_config_text(cfg, "[tolerance]\nnot_an_identity = 1e-3\n");
    CHECK_THROWS_AS(cfg.validate(), UsageError);
  }

  TEST_CASE("value parsing and digest") {
    CHECK(parse_value("1.5") == ComplexValue(1.5));
    CHECK(parse_value("1.5,-0.25") == ComplexValue(1.5, -0.25));
    CHECK(parse_value("\xe2\x88\x92" "2") == ComplexValue(-2.0));
    CHECK_THROWS_AS(parse_value("abc"), UsageError);
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
  }

  TEST_CASE("spectrum command") {
    const Run none = cli({"spectrum", "--k1", "0.4", "--k2", "0.45", "--p", "0"});
    CHECK(none.code == kPass);
    CHECK(none.out.find("predicted_discrete 0") != std::string::npos);
    const Run one = cli({"spectrum", "--k1", "0.2", "--k2", "1.0", "--p", "0"});
    CHECK(one.out.find("predicted_discrete 1\n  0.16 ") != std::string::npos);
    CHECK(cli({"spectrum", "--k1", "0.2", "--k2", "1.0", "--p", "1"}).out.find("predicted_discrete 0") !=
          std::string::npos);
    CHECK(cli({"spectrum", "--k1", "1.0", "--k2", "0.2", "--p", "0"}).code == kDomain);
    CHECK(cli({"spectrum", "--k1", "0.2", "--k2", "1.0"}).code == kUsage);
    const std::string out = temp_path("spectrum.json");
    CHECK(cli({"spectrum", "--k1", "0.2", "--k2", "2.0", "--p", "-1", "--dim", "100", "--out", out}).code == kPass);
    CHECK(slurp(out).find("\"eigenvalues\"") != std::string::npos);
  }
}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "su11/identities.hpp"

namespace su11::harness {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kDomain = 3 };

// Settings for `verify`. Layering, lowest first: built-in defaults, SU11_*
// environment variables, the --config file, command-line flags.
//
// Config file (all keys optional):
//   seed = 20240101
//   samples = 200          # size of the random grids
//   format = json          # json | csv
//   out = report.json
//   [tolerance]
//   bilinear_sum = 1e-8    # per-identity tolerance
//   [truncation]
//   bilinear_sum = 600     # per-identity term/panel cap
//   [grid.poisson_kernel]
//   t = 0.3                # replaces this parameter in every case; complex as re,im
//
// Environment: SU11_SEED, SU11_SAMPLES, SU11_FORMAT, SU11_OUT,
// SU11_TOLERANCE_<ID>, SU11_TRUNCATION_<ID> with <ID> upper-cased.
struct RunConfig {
  std::uint64_t seed = GridOptions{}.seed;
  int samples = GridOptions{}.samples;
  std::string format = "json";
  std::optional<std::string> out;
  std::map<std::string, double> tolerance;
  std::map<std::string, int> truncation;
  std::map<std::string, std::map<std::string, ComplexValue>> overrides;

  // Sorted key=value lines; the digest is taken over this text.
  std::string canonical() const;
  void validate() const;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void apply_environment(RunConfig& cfg);
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

// "1.5" or "1.5,-0.25" (re,im). A Unicode minus sign is accepted.
ComplexValue parse_value(const std::string& text);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(const std::string& text);

std::vector<IdentityCase> build_cases(const std::string& identity, const RunConfig& cfg);
std::string render_json(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                        const std::string& command);
std::string render_csv(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                       const std::string& command);

// Entry point of the CLI; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su11::harness

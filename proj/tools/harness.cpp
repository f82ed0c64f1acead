#include "harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "su11/coupling.hpp"
#include "su11/measures.hpp"
#include "su11/mfunctions.hpp"
#include "su11/orthopoly.hpp"
#include "su11/special.hpp"

namespace su11::harness {
namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

std::string show(ComplexValue v) {
  if (v.imag() == 0.0) return fmt("%.15g", v.real());
  return fmt("%.15g", v.real()) + (v.imag() < 0 ? "-" : "+") + fmt("%.15g", std::abs(v.imag())) + "i";
}

double to_double(const std::string& key, const std::string& text) {
  const ComplexValue v = parse_value(text);
  if (v.imag() != 0.0) throw UsageError("'" + key + "' must be real");
  return v.real();
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::round(v) || std::abs(v) > 1e9) throw UsageError("'" + key + "' must be an integer");
  return static_cast<int>(v);
}

void set_key(RunConfig& cfg, const std::string& section, const std::string& key, const std::string& value) {
  if (section.empty() || section == "grid") {
    if (key == "seed") {
      char* end = nullptr;
      const unsigned long long s = std::strtoull(value.c_str(), &end, 10);
      if (end == value.c_str() || *end != '\0') throw UsageError("seed must be a non-negative integer");
      cfg.seed = s;
    } else if (key == "samples") {
      cfg.samples = to_int(key, value);
    } else if (key == "format" && section.empty()) {
      cfg.format = value;
    } else if (key == "out" && section.empty()) {
      cfg.out = value;
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  } else if (section == "tolerance") {
    cfg.tolerance[key] = to_double(key, value);
  } else if (section == "truncation") {
    cfg.truncation[key] = to_int(key, value);
  } else if (section.rfind("grid.", 0) == 0) {
    cfg.overrides[section.substr(5)][key] = parse_value(value);
  } else {
    throw UsageError("unknown config section [" + section + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

ComplexValue parse_value(const std::string& raw) {
  std::string text;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 3, "\xe2\x88\x92") == 0) {  // U+2212
      text += '-';
      i += 2;
    } else {
      text += raw[i];
    }
  }
  auto number = [&](const std::string& s) {
    const std::string t = trim(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + raw + "'");
    }
    if (used != t.size()) throw UsageError("not a number: '" + raw + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return number(text);
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string RunConfig::canonical() const {
  std::ostringstream s;
  s << "format=" << format << "\n";
  s << "rng=" << CounterRng::kAlgorithm << "\n";
  s << "samples=" << samples << "\n";
  s << "seed=" << seed << "\n";
  for (const auto& [k, v] : tolerance) s << "tolerance." << k << "=" << g17(v) << "\n";
  for (const auto& [k, v] : truncation) s << "truncation." << k << "=" << v << "\n";
  for (const auto& [id, m] : overrides)
    for (const auto& [k, v] : m) s << "grid." << id << "." << k << "=" << g17(v.real()) << "," << g17(v.imag()) << "\n";
  return s.str();
}

void RunConfig::validate() const {
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  if (samples <= 0) throw UsageError("samples must be positive");
  const auto& ids = identity_ids();
  auto known = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
  for (const auto& [k, v] : tolerance) {
    if (!known(k)) throw UsageError("unknown identity '" + k + "' in [tolerance]");
    if (!(v > 0.0)) throw UsageError("tolerance for '" + k + "' must be positive");
  }
  for (const auto& [k, v] : truncation) {
    if (!known(k)) throw UsageError("unknown identity '" + k + "' in [truncation]");
    if (v <= 0) throw UsageError("truncation for '" + k + "' must be positive");
  }
  for (const auto& [k, v] : overrides)
    if (!known(k)) throw UsageError("unknown identity '" + k + "' in [grid." + k + "]");
}

void apply_environment(RunConfig& cfg) {
  auto env = [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    return v ? std::optional<std::string>(v) : std::nullopt;
  };
  if (auto v = env("SU11_SEED")) set_key(cfg, "", "seed", *v);
  if (auto v = env("SU11_SAMPLES")) set_key(cfg, "", "samples", *v);
  if (auto v = env("SU11_FORMAT")) set_key(cfg, "", "format", *v);
  if (auto v = env("SU11_OUT")) set_key(cfg, "", "out", *v);
  for (const auto& id : identity_ids()) {
    if (auto v = env("SU11_TOLERANCE_" + upper(id))) set_key(cfg, "tolerance", id, *v);
    if (auto v = env("SU11_TRUNCATION_" + upper(id))) set_key(cfg, "truncation", id, *v);
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw UsageError("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    set_key(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

std::vector<IdentityCase> build_cases(const std::string& identity, const RunConfig& cfg) {
  GridOptions opt;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples;
  if (auto it = cfg.tolerance.find(identity); it != cfg.tolerance.end()) opt.tolerance = it->second;
  if (auto it = cfg.truncation.find(identity); it != cfg.truncation.end()) opt.truncation = it->second;
  std::vector<IdentityCase> cases = default_grid(identity, opt);
  if (auto it = cfg.overrides.find(identity); it != cfg.overrides.end()) {
    for (auto& c : cases)
      for (const auto& [k, v] : it->second) c.set(k, v);
    // Overrides can collapse distinct grid points onto one another.
    std::vector<IdentityCase> unique;
    std::set<std::string> seen;
    for (auto& c : cases) {
      std::string key;
      for (const auto& p : c.params) key += p.name + "=" + g17(p.value.real()) + "," + g17(p.value.imag()) + ";";
      if (seen.insert(key).second) unique.push_back(std::move(c));
    }
    cases = std::move(unique);
  }
  return cases;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json params_json(const std::vector<ReportParam>& params) {
  Json o = Json::object();
  for (const auto& p : params)
    o[p.name] = p.value.imag() == 0.0 ? number(p.value.real()) : Json::array({number(p.value.real()), number(p.value.imag())});
  return o;
}

std::string header_run_id(const RunConfig& cfg, const std::string& command) {
  return digest(command + "\n" + cfg.canonical());
}

}  // namespace

std::string render_json(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                        const std::string& command) {
  Json root;
  root["run_id"] = header_run_id(cfg, command);
  root["config_digest"] = digest(cfg.canonical());
  root["command"] = command;
  root["rng"] = {{"algorithm", CounterRng::kAlgorithm}, {"seed", cfg.seed}};
  Json cases = Json::array();
  for (const auto& r : reports) {
    Json c;
    c["id"] = r.id;
    c["params"] = params_json(r.params);
    c["lhs_re"] = number(r.lhs.real());
    c["lhs_im"] = number(r.lhs.imag());
    c["rhs_re"] = number(r.rhs.real());
    c["rhs_im"] = number(r.rhs.imag());
    c["abs_err"] = number(r.abs_err);
    c["rel_err"] = number(r.rel_err);
    c["terms_used"] = r.terms_used;
    c["tail_estimate"] = number(r.tail_estimate);
    c["tolerance"] = number(r.tolerance);
    c["status"] = to_string(r.status);
    if (!r.note.empty()) c["note"] = r.note;
    cases.push_back(std::move(c));
  }
  root["cases"] = std::move(cases);
  return root.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                       const std::string& command) {
  std::ostringstream s;
  s << "# run_id=" << header_run_id(cfg, command) << "\n";
  s << "# config_digest=" << digest(cfg.canonical()) << "\n";
  s << "# command=" << command << "\n";
  s << "# rng=" << CounterRng::kAlgorithm << " seed=" << cfg.seed << "\n";
  s << "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,terms_used,tail_estimate,tolerance,status,note\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& p : r.params) {
      if (!params.empty()) params += ';';
      params += p.name + "=" + g17(p.value.real());
      if (p.value.imag() != 0.0) params += (p.value.imag() < 0 ? "" : "+") + g17(p.value.imag()) + "i";
    }
    std::string note = r.note;
    std::replace(note.begin(), note.end(), '"', '\'');
    s << r.id << ",\"" << params << "\"," << g17(r.lhs.real()) << "," << g17(r.lhs.imag()) << ","
      << g17(r.rhs.real()) << "," << g17(r.rhs.imag()) << "," << g17(r.abs_err) << "," << g17(r.rel_err) << ","
      << r.terms_used << "," << g17(r.tail_estimate) << "," << g17(r.tolerance) << "," << to_string(r.status)
      << ",\"" << note << "\"\n";
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// eval

namespace {

struct EvalArgs {
  std::map<std::string, std::string> raw;
  std::set<std::string> used;

  bool has(const std::string& k) const { return raw.count(k) != 0; }
  const std::string& get(const std::string& k) {
    auto it = raw.find(k);
    if (it == raw.end()) throw UsageError("missing parameter '" + k + "'");
    used.insert(k);
    return it->second;
  }
  ComplexValue z(const std::string& k) { return parse_value(get(k)); }
  double r(const std::string& k) { return to_double(k, get(k)); }
  double r_or(const std::string& k, double v) { return has(k) ? r(k) : v; }
  int i(const std::string& k) { return to_int(k, get(k)); }
};

struct EvalResult {
  ComplexValue value;
  std::string provenance;
};

MeixnerFunctionParams meixner_function_params(EvalArgs& a) {
  const double eps = a.r("eps"), c = a.r("c");
  if (a.has("rho")) return MeixnerFunctionParams::principal(a.r("rho"), eps, c);
  const double lambda = a.r("lambda");
  try {
    return MeixnerFunctionParams::complementary(lambda, eps, c);
  } catch (const DomainError&) {
    return MeixnerFunctionParams::terminating(lambda, eps, c);
  }
}

std::string path_name(Hyp2F1Path p) {
  switch (p) {
    case Hyp2F1Path::Direct: return "direct";
    case Hyp2F1Path::Pfaff: return "pfaff";
    default: return "automatic";
  }
}

using EvalFn = std::function<EvalResult(EvalArgs&)>;

const std::map<std::string, EvalFn>& registry() {
  static const std::map<std::string, EvalFn> r = {
      {"meixner", [](EvalArgs& a) -> EvalResult { return {meixner(a.i("n"), a.r("x"), {a.r("beta"), a.r("c")}), ""}; }},
      {"meixner_orthonormal",
       [](EvalArgs& a) -> EvalResult { return {meixner_orthonormal(a.i("n"), a.r("x"), {a.r("beta"), a.r("c")}), ""}; }},
      {"meixner_weight",
       [](EvalArgs& a) -> EvalResult { return {meixner_weight(a.i("x"), {a.r("beta"), a.r("c")}), ""}; }},
      {"cdh",
       [](EvalArgs& a) -> EvalResult {
         const int n = a.i("n");
         return {cdh(n, a.r("y"), a.r("a"), a.r("b"), a.r("c")), "terminating sum, " + std::to_string(n + 1) + " terms"};
       }},
      {"cdh_orthonormal",
       [](EvalArgs& a) -> EvalResult { return {cdh_orthonormal(a.i("n"), a.r("y"), {a.r("a"), a.r("b"), a.r("c")}), ""}; }},
      {"cdh_density",
       [](EvalArgs& a) -> EvalResult {
         const CDHMeasure m({a.r("a"), a.r("b"), a.r("c")}, a.r_or("squared", 1.0) != 0.0);
         return {m.density(a.r("x")), ""};
       }},
      {"meixner_function",
       [](EvalArgs& a) -> EvalResult {
         const int n = a.i("n"), x = a.i("x");
         return {meixner_function(n, x, meixner_function_params(a)), ""};
       }},
      {"meixner_function_weight",
       [](EvalArgs& a) -> EvalResult {
         const int x = a.i("x");
         return {meixner_function_weight(x, meixner_function_params(a)), ""};
       }},
      {"meixner_function_weighted",
       [](EvalArgs& a) -> EvalResult {
         const int n = a.i("n"), x = a.i("x");
         return {meixner_function_weighted(n, x, meixner_function_params(a)), ""};
       }},
      {"jacobi_function",
       [](EvalArgs& a) -> EvalResult { return {jacobi_function(a.r("alpha"), a.r("beta"), a.z("sigma"), a.r("t")), ""}; }},
      {"gauss_2f1",
       [](EvalArgs& a) -> EvalResult {
         const Hyp2F1Result h = gauss_2f1_detailed(a.z("a"), a.z("b"), a.z("c"), a.z("z"));
         return {h.value, "path=" + path_name(h.path) + " terms=" + std::to_string(h.terms)};
       }},
      {"gauss_2f1_regularized",
       [](EvalArgs& a) -> EvalResult { return {gauss_2f1_regularized(a.z("a"), a.z("b"), a.z("c"), a.z("z")), ""}; }},
      {"gamma", [](EvalArgs& a) -> EvalResult { return {gamma(a.z("z")), ""}; }},
      {"log_gamma", [](EvalArgs& a) -> EvalResult { return {log_gamma(a.z("z")), ""}; }},
      {"pochhammer", [](EvalArgs& a) -> EvalResult { return {pochhammer(a.z("z"), a.i("n")), ""}; }},
  };
  return r;
}

int cmd_eval(const std::string& fn, const std::vector<std::string>& kv, std::ostream& out) {
  const auto& reg = registry();
  auto it = reg.find(fn);
  if (it == reg.end()) {
    std::string names;
    for (const auto& [k, v] : reg) names += " " + k;
    throw UsageError("unknown function '" + fn + "'; known:" + names);
  }
  EvalArgs args;
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
    args.raw[item.substr(0, eq)] = item.substr(eq + 1);
  }
  const EvalResult r = it->second(args);
  for (const auto& [k, v] : args.raw)
    if (!args.used.count(k)) throw UsageError("unexpected parameter '" + k + "' for " + fn);
  out << show(r.value) << "\n";
  if (!r.provenance.empty()) out << "# " << r.provenance << "\n";
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int cmd_verify(const std::string& identity, RunConfig cfg, std::optional<double> tol, std::ostream& out,
               std::ostream& err) {
  const auto& ids = identity_ids();
  std::vector<std::string> run;
  if (identity == "all")
    run = ids;
  else if (std::find(ids.begin(), ids.end(), identity) != ids.end())
    run = {identity};
  else
    throw UsageError("unknown identity '" + identity + "'");
  if (tol) {
    if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
    for (const auto& id : run) cfg.tolerance[id] = *tol;
  }
  cfg.validate();

  std::vector<VerificationReport> reports;
  std::ostringstream summary;
  bool failed = false;
  for (const auto& id : run) {
    int pass = 0, fail = 0, skip = 0;
    const auto cases = build_cases(id, cfg);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      VerificationReport r;
      try {
        r = run_case(cases[i]);
      } catch (const NumericalError& e) {
        r = VerificationReport::compare(id, cases[i].params, std::nan(""), std::nan(""), cases[i].tolerance);
        r.note = e.what();
      } catch (const DomainError& e) {
        throw DomainError(id + " case " + std::to_string(i) + ": " + e.what());
      }
      (r.status == CaseStatus::Pass ? pass : r.status == CaseStatus::Skipped ? skip : fail)++;
      reports.push_back(std::move(r));
    }
    failed = failed || fail > 0;
    summary << id << ": " << cases.size() << " cases, " << pass << " pass, " << fail << " fail, " << skip
            << " skipped\n";
  }
  const std::string command = "verify " + identity;
  const std::string text = cfg.format == "csv" ? render_csv(reports, cfg, command) : render_json(reports, cfg, command);
  if (cfg.out) {
    write_text(*cfg.out, text);
    out << summary.str() << (failed ? "FAIL" : "PASS") << "\n";
  } else {
    out << text;
    err << summary.str() << (failed ? "FAIL" : "PASS") << "\n";
  }
  return failed ? kFailure : kPass;
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(double k1, double k2, int p, int dim, double tol, const std::optional<std::string>& path,
                 std::ostream& out) {
  if (dim < 4) throw UsageError("--dim must be at least 4");
  const TensorPair t(k1, k2);
  const SpectrumComparison s = compare_spectrum(t, p, dim, tol);
  out << "k1=" << fmt("%.15g", k1) << " k2=" << fmt("%.15g", k2) << " p=" << p << " dim=" << dim << "\n";
  out << "predicted_discrete " << s.predicted.size() << "\n";
  for (std::size_t i = 0; i < s.predicted.size(); ++i)
    out << "  " << fmt("%.15g", s.predicted[i]) << " nearest " << fmt("%.15g", s.nearest[i]) << " deviation "
        << fmt("%.3e", s.deviation[i]) << "\n";
  out << "min_remaining " << fmt("%.15g", s.min_remaining) << " (bound " << fmt("%.15g", 0.25 - tol) << ")\n";
  out << "status " << (s.ok() ? "PASS" : "FAIL") << "\n";
  out << "eigenvalues " << s.eigenvalues.size() << "\n";
  for (double e : s.eigenvalues) out << "  " << fmt("%.15g", e) << "\n";
  if (path) {
    Json root;
    root["k1"] = k1;
    root["k2"] = k2;
    root["p"] = p;
    root["dim"] = dim;
    root["tolerance"] = tol;
    Json pred = Json::array();
    for (std::size_t i = 0; i < s.predicted.size(); ++i)
      pred.push_back({{"value", s.predicted[i]}, {"nearest", number(s.nearest[i])}, {"deviation", number(s.deviation[i])}});
    root["predicted"] = std::move(pred);
    root["min_remaining"] = number(s.min_remaining);
    root["status"] = s.ok() ? "PASS" : "FAIL";
    root["eigenvalues"] = std::vector<double>(s.eigenvalues.begin(), s.eigenvalues.end());
    write_text(*path, root.dump(2) + "\n");
  }
  return kPass;
}

}  // namespace

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"su11: special functions and su(1,1) identity verification"};
  app.require_subcommand(1);

  std::string fn;
  std::vector<std::string> kv;
  auto* eval = app.add_subcommand("eval", "Evaluate a function: eval <fn> key=value ...");
  eval->add_option("function", fn, "Function name")->required();
  eval->add_option("params", kv, "key=value pairs; complex values as re,im");

  std::string identity, config_path, format, out_path;
  double tol = 0.0;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Verify an identity over its grid, or 'all'");
  verify->add_option("identity", identity, "Identity id or 'all'")->required();
  auto* o_config = verify->add_option("--config", config_path, "Config file");
  auto* o_tol = verify->add_option("--tol", tol, "Tolerance for every case");
  auto* o_seed = verify->add_option("--seed", seed, "Seed of the random grids");
  auto* o_out = verify->add_option("--out", out_path, "Report file (default: stdout)");
  auto* o_format = verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  double k1 = 0.0, k2 = 0.0, stol = 1e-6;
  int p = 0, dim = 400;
  std::string spec_out;
  auto* spectrum = app.add_subcommand("spectrum", "Casimir spectrum on one sector against the predicted discrete points");
  spectrum->add_option("--k1", k1)->required();
  spectrum->add_option("--k2", k2)->required();
  spectrum->add_option("--p", p)->required();
  spectrum->add_option("--dim", dim, "Truncation size")->capture_default_str();
  spectrum->add_option("--tol", stol, "Matching tolerance")->capture_default_str();
  auto* o_sout = spectrum->add_option("--out", spec_out, "JSON output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) return cmd_eval(fn, kv, out);
    if (*verify) {
      RunConfig cfg;
      apply_environment(cfg);
      if (*o_config) apply_config_file(cfg, config_path);
      if (*o_seed) cfg.seed = seed;
      if (*o_out) cfg.out = out_path;
      if (*o_format) cfg.format = format;
      return cmd_verify(identity, cfg, *o_tol ? std::optional<double>(tol) : std::nullopt, out, err);
    }
    if (*spectrum) return cmd_spectrum(k1, k2, p, dim, stol, *o_sout ? std::optional(spec_out) : std::nullopt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace su11::harness

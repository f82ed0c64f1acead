#include "su11/report.hpp"

#include <algorithm>
#include <cmath>

namespace su11 {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass:
      return "PASS";
    case CaseStatus::Fail:
      return "FAIL";
    case CaseStatus::Skipped:
      return "SKIPPED";
  }
  return "FAIL";
}

VerificationReport VerificationReport::compare(std::string id, std::vector<ReportParam> params,
                                               ComplexValue lhs, ComplexValue rhs, double tolerance,
                                               int terms_used, double tail_estimate) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = std::abs(rhs) > 0.0 ? r.abs_err / std::abs(rhs) : r.abs_err;
  r.terms_used = terms_used;
  r.tail_estimate = tail_estimate;
  r.tolerance = tolerance;
  bool ok = std::abs(rhs) < tolerance ? r.abs_err <= tolerance : r.rel_err <= tolerance;
  if (!std::isfinite(r.abs_err)) ok = false;
  r.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
  return r;
}

VerificationReport VerificationReport::skipped(std::string id, std::vector<ReportParam> params,
                                               std::string why) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.status = CaseStatus::Skipped;
  r.note = std::move(why);
  return r;
}

VerificationReport worst_of(const std::vector<VerificationReport>& reports, std::string id) {
  if (reports.empty()) return VerificationReport::skipped(std::move(id), {}, "empty batch");
  auto score = [](const VerificationReport& r) {
    if (r.status == CaseStatus::Skipped) return -1.0;
    double e = std::abs(r.rhs) < r.tolerance ? r.abs_err : r.rel_err;
    return std::isfinite(e) ? e / r.tolerance : 1e300;
  };
  const VerificationReport* worst = &reports.front();
  bool failed = false;
  for (const auto& r : reports) {
    if (r.status == CaseStatus::Fail) failed = true;
    if (score(r) > score(*worst)) worst = &r;
  }
  VerificationReport out = *worst;
  out.id = std::move(id);
  if (failed) out.status = CaseStatus::Fail;
  return out;
}

}  // namespace su11

#pragma once

#include <string>
#include <vector>

#include "su11/special.hpp"

namespace su11 {

enum class CaseStatus { Pass, Fail, Skipped };

const char* to_string(CaseStatus s);

struct ReportParam {
  std::string name;
  ComplexValue value;
};

// One identity evaluated at one parameter point.
struct VerificationReport {
  std::string id;
  std::vector<ReportParam> params;
  ComplexValue lhs;
  ComplexValue rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
  double tolerance = 0.0;
  CaseStatus status = CaseStatus::Fail;
  std::string note;

  bool pass() const { return status != CaseStatus::Fail; }

  // Relative comparison with an absolute fallback when |rhs| < tolerance.
  static VerificationReport compare(std::string id, std::vector<ReportParam> params, ComplexValue lhs,
                                    ComplexValue rhs, double tolerance, int terms_used = 0,
                                    double tail_estimate = 0.0);
  static VerificationReport skipped(std::string id, std::vector<ReportParam> params, std::string why);
};

// Worst case of a batch: the report with the largest error ratio, with its
// status failing if any member failed.
VerificationReport worst_of(const std::vector<VerificationReport>& reports, std::string id);

}  // namespace su11

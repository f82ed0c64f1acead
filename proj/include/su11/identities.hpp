#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "su11/report.hpp"

namespace su11 {

// One parameter point of one identity. Parameter names are per engine (see
// the comment on each verify_* function); missing required names raise
// DomainError.
struct IdentityCase {
  std::string id;
  std::vector<ReportParam> params;
  int truncation = 0;  // 0: engine default
  double tolerance = 1e-10;

  bool has(const std::string& name) const;
  ComplexValue complex(const std::string& name) const;
  double real(const std::string& name) const;
  double real_or(const std::string& name, double fallback) const;
  int integer(const std::string& name) const;
  int integer_or(const std::string& name, int fallback) const;
  IdentityCase& set(const std::string& name, ComplexValue v);
};

// n, y, a, b, c: the upward contiguous relation for S^_n(y;a,b,c+1).
VerificationReport verify_conti1(const IdentityCase& c);
// n, y, a, b, c: the companion relation with S^_n(y;a,b,c-1).
VerificationReport verify_conti1_companion(const IdentityCase& c);

// a, b, c, z (complex), relation = 1 | 2. Relation 1 is checked in its
// sign-corrected form.
VerificationReport verify_2f1_contiguous(const IdentityCase& c);

// k1, k2, x1, x2, c, y and optionally p (default x1 - x2). Optional
// branch = 0 (default: the p >= 0 form for p >= 0 and the p <= 0 form
// otherwise), 1 (force the p >= 0 form) or -1 (force the p <= 0 form).
// truncation caps the number of terms (default 600).
VerificationReport verify_bilinear_sum(const IdentityCase& c);

// The closed-form left side of the bilinear sum, and the truncated right
// side with the number of terms and a geometric tail bound.
struct SeriesValue {
  double value;
  int terms;
  double tail;
};
double bilinear_lhs(double k1, double k2, int x1, int x2, int p, double c, double y);
SeriesValue bilinear_rhs(double k1, double k2, int x1, int x2, int p, double c, double y, int max_terms,
                         int branch = 0, bool stop_early = true);

// n, p, y, k1, k2 with 0 <= p <= n: the parameter shift between sectors -p and p.
VerificationReport verify_eqS_shift(const IdentityCase& c);

// x, y, c, s, rho, eps, t (complex allowed). AnnulusError within 1e-3 of
// the annulus boundary; SKIPPED when the 2F1 cannot be mapped inside 0.95.
VerificationReport verify_poisson_kernel(const IdentityCase& c);
// x, y, c, s, rho, eps, t: the closed form alone.
ComplexValue poisson_kernel_closed_form(int x, int y, double c, double s, double rho, double eps, ComplexValue t);
// sum_n m^_n(x;c) m^_n(y;s) t^n truncated on both sides.
struct BilateralSum {
  ComplexValue value;
  int terms;
  double tail;
};
BilateralSum poisson_kernel_sum(int x, int y, double c, double s, double rho, double eps, ComplexValue t,
                                double rel_tol = 1e-17, int max_terms = 2000);

// x, y, c, rho, eps: sum_n m^_n(x) m^_n(y) sqrt(w~(x) w~(y)) = delta_xy.
VerificationReport verify_meixner_dual_orthogonality(const IdentityCase& c);

// k, c, x and optional n_max (default 30), z (complex evaluation point)
// and cdh_a, cdh_b, cdh_c, cdh_y for the continuous dual Hahn analogue.
VerificationReport verify_generating_functions(const IdentityCase& c);

// k1, k2, x, c, z, w (complex), sigma: both integral forms of
// (f (x) v_{x-L})(z, conj w) for f(rho^2) = exp(-rho^2 / sigma^2).
VerificationReport verify_realization_consistency(const IdentityCase& c);

// ---------------------------------------------------------------------------
// Grids

// Counter-based generator: draw i of stream s is splitmix64 of
// seed + golden * (s * 2^32 + i). Stateless and order independent.
class CounterRng {
 public:
  static constexpr const char* kAlgorithm = "splitmix64-counter";
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const;
  // Uniform in [lo, hi).
  double uniform(std::uint64_t stream, std::uint64_t index, double lo, double hi) const;

 private:
  std::uint64_t seed_;
};

struct GridOptions {
  std::uint64_t seed = 20240101;
  int samples = 200;        // random grids
  double tolerance = 0.0;   // 0: identity default
  int truncation = 0;       // 0: identity default
};

// Identity ids known to the grid runner, in the order `verify all` uses.
const std::vector<std::string>& identity_ids();
double default_tolerance(const std::string& identity);
std::vector<IdentityCase> default_grid(const std::string& identity, const GridOptions& opt);
// Dispatch on case.id. Domain errors of a case that is not expected to be
// evaluable (annulus boundary) come back as SKIPPED reports.
VerificationReport run_case(const IdentityCase& c);

}  // namespace su11

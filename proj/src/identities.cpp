#include "su11/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "su11/coupling.hpp"
#include "su11/measures.hpp"
#include "su11/mfunctions.hpp"
#include "su11/orthopoly.hpp"
#include "su11/special.hpp"

namespace su11 {
namespace {

using detail::CompensatedSum;

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

int parity(int n) { return n % 2 == 0 ? 1 : -1; }

ComplexValue ipow(ComplexValue z, int n) {
  ComplexValue r = 1.0, b = n < 0 ? 1.0 / z : z;
  for (unsigned m = static_cast<unsigned>(n < 0 ? -n : n); m; m >>= 1, b *= b)
    if (m & 1u) r *= b;
  return r;
}

double abs_gamma(ComplexValue z) { return std::exp(log_gamma(z).real()); }

// i sqrt(y) for real y, continuing to -sqrt(-y) below the axis.
ComplexValue i_sqrt(double y) { return y >= 0.0 ? ComplexValue(0.0, std::sqrt(y)) : ComplexValue(-std::sqrt(-y), 0.0); }

// Geometric tail bound. The terms may oscillate, so the decay rate is taken
// from the maxima of the last two windows of 10 terms and the envelope
// starts at the last window maximum, with a safety factor of 2.
double geometric_tail(const std::vector<double>& mags) {
  const int n = static_cast<int>(mags.size());
  if (n == 0 || mags.back() == 0.0) return 0.0;
  constexpr int kWindow = 10;
  if (n < 2 * kWindow) {
    const int span = n - 1;
    if (span <= 0 || !(mags.front() > 0.0)) return std::numeric_limits<double>::infinity();
    const double r = std::pow(mags.back() / mags.front(), 1.0 / span);
    return r < 1.0 ? 2.0 * mags.back() * r / (1.0 - r) : std::numeric_limits<double>::infinity();
  }
  const auto last = std::max_element(mags.end() - kWindow, mags.end());
  const auto prev = std::max_element(mags.end() - 2 * kWindow, mags.end() - kWindow);
  if (!(*prev > 0.0)) return std::numeric_limits<double>::infinity();
  const double r = std::pow(*last / *prev, 1.0 / kWindow);
  if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
  return 2.0 * (*last) * r / (1.0 - r);
}

// One-sided series summation with the 20-consecutive-small stopping rule.
struct OneSided {
  ComplexValue value;
  int terms;
  double tail;
};

OneSided sum_one_side(const std::function<ComplexValue(int)>& term, int start, int step, int max_terms,
                      double rel_tol, bool stop_early = true) {
  CompensatedSum acc;
  std::vector<double> mags;
  int small = 0, used = 0;
  for (int i = 0; i < max_terms; ++i) {
    const ComplexValue t = term(start + step * i);
    acc.add(t);
    mags.push_back(std::abs(t));
    ++used;
    if (std::abs(t) <= rel_tol * std::abs(acc.value())) {
      if (stop_early && ++small >= 20) break;
    } else {
      small = 0;
    }
  }
  return {acc.value(), used, geometric_tail(mags)};
}

std::vector<ReportParam> params_of(std::initializer_list<std::pair<const char*, double>> list) {
  std::vector<ReportParam> out;
  for (const auto& [n, v] : list) out.push_back({n, v});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IdentityCase

bool IdentityCase::has(const std::string& name) const {
  return std::any_of(params.begin(), params.end(), [&](const ReportParam& p) { return p.name == name; });
}

ComplexValue IdentityCase::complex(const std::string& name) const {
  for (const auto& p : params)
    if (p.name == name) return p.value;
  throw DomainError("IdentityCase '" + id + "': missing parameter '" + name + "'");
}

double IdentityCase::real(const std::string& name) const {
  const ComplexValue v = complex(name);
  if (v.imag() != 0.0) throw DomainError("IdentityCase '" + id + "': parameter '" + name + "' must be real");
  return v.real();
}

double IdentityCase::real_or(const std::string& name, double fallback) const {
  return has(name) ? real(name) : fallback;
}

int IdentityCase::integer(const std::string& name) const {
  const double v = real(name);
  if (v != std::round(v)) throw DomainError("IdentityCase '" + id + "': parameter '" + name + "' must be an integer");
  return static_cast<int>(v);
}

int IdentityCase::integer_or(const std::string& name, int fallback) const {
  return has(name) ? integer(name) : fallback;
}

IdentityCase& IdentityCase::set(const std::string& name, ComplexValue v) {
  for (auto& p : params)
    if (p.name == name) {
      p.value = v;
      return *this;
    }
  params.push_back({name, v});
  return *this;
}

// ---------------------------------------------------------------------------
// Contiguous relations

VerificationReport verify_conti1(const IdentityCase& k) {
  const int n = k.integer("n");
  const double y = k.real("y"), a = k.real("a"), b = k.real("b"), c = k.real("c");
  const CDHParams p0(a, b, c), p1(a, b, c + 1.0);
  const double lhs = (c * c + y) / std::sqrt((a + c) * (b + c)) * cdh_orthonormal(n, y, p1);
  const double rhs = std::sqrt((n + 1.0) * (a + b + n)) * cdh_orthonormal(n + 1, y, p0) +
                     std::sqrt((a + c + n) * (b + c + n)) * cdh_orthonormal(n, y, p0);
  return VerificationReport::compare(k.id, k.params, lhs, rhs, k.tolerance);
}

VerificationReport verify_conti1_companion(const IdentityCase& k) {
  const int n = k.integer("n");
  const double y = k.real("y"), a = k.real("a"), b = k.real("b"), c = k.real("c");
  const CDHParams p0(a, b, c), pm(a, b, c - 1.0);
  const double lhs = std::sqrt((a + c - 1.0) * (b + c - 1.0)) * cdh_orthonormal(n, y, pm);
  double rhs = std::sqrt((n + a + c - 1.0) * (n + b + c - 1.0)) * cdh_orthonormal(n, y, p0);
  if (n > 0) rhs += std::sqrt(n * (n + a + b - 1.0)) * cdh_orthonormal(n - 1, y, p0);
  return VerificationReport::compare(k.id, k.params, lhs, rhs, k.tolerance);
}

VerificationReport verify_2f1_contiguous(const IdentityCase& k) {
  const ComplexValue a = k.complex("a"), b = k.complex("b"), c = k.complex("c"), z = k.complex("z");
  const int relation = k.integer_or("relation", 1);
  ComplexValue lhs, rhs;
  if (relation == 1) {
    lhs = c * (1.0 - c) * (1.0 - z) * gauss_2f1(a, b, c - 1.0, z);
    rhs = -((c - a) * (c - b) * z * gauss_2f1(a, b, c + 1.0, z) +
            c * (c - 1.0 - (2.0 * c - a - b - 1.0) * z) * gauss_2f1(a, b, c, z));
  } else if (relation == 2) {
    lhs = gauss_2f1(a, b, c, z);
    rhs = gauss_2f1(a, b, c - 1.0, z) - a * b * z / (c * (c - 1.0)) * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z);
  } else {
    throw DomainError("verify_2f1_contiguous: relation must be 1 or 2");
  }
  return VerificationReport::compare(k.id, k.params, lhs, rhs, k.tolerance);
}

// ---------------------------------------------------------------------------
// Bilinear generating function

double bilinear_lhs(double k1, double k2, int x1, int x2, int p, double c, double y) {
  if (x1 < 0 || x2 < 0) throw DomainError("bilinear_lhs: x1, x2 must be non-negative");
  if (!(c > 0.0 && c < 1.0)) throw DomainError("bilinear_lhs: c must lie in (0,1)");
  const double s = cdh(x2, y, k2 - k1 + 0.5, k1 + k2 - 0.5, k1 - k2 + x1 - x2 + 0.5);
  const ComplexValue ix = i_sqrt(y);
  const double A = p + k1 - k2 + 0.5;
  const ComplexValue f = gauss_2f1_regularized(A + ix, A - ix, double(p + x2 - x1 + 1), c / (c - 1.0));
  return s * f.real();
}

SeriesValue bilinear_rhs(double k1, double k2, int x1, int x2, int p, double c, double y, int max_terms,
                         int branch, bool stop_early) {
  if (branch == 0) branch = p >= 0 ? 1 : -1;
  if ((branch == 1 && p < 0) || (branch == -1 && p > 0))
    throw DomainError("bilinear_rhs: branch not evaluable for this p");
  const MeixnerParams m1(2.0 * k1, c), m2(2.0 * k2, c);
  const double common = std::pow(1.0 - c, 2.0 * k1 + p) * pochhammer(2.0 * k1, x1) * pochhammer(2.0 * k2, x2) *
                        parity(x1 + x2);
  double pref;
  Eigen::VectorXd s;
  std::function<double(int)> meixner_pair;
  if (branch == 1) {
    const CDHParams P(k2 - k1 + 0.5, k1 + k2 - 0.5, k1 - k2 + p + 0.5);
    s = cdh_orthonormal_sequence(max_terms, y, P);
    pref = common * std::pow(c, x1 - 0.5 * p) / std::sqrt(std::tgamma(p + 1.0) * pochhammer(2.0 * k1, p));
    meixner_pair = [&, p](int n) { return meixner_orthonormal(n + p, x1, m1) * meixner_orthonormal(n, x2, m2); };
  } else {
    const int q = -p;
    const double a = k1 - k2 + 0.5;
    const CDHParams P(a, k1 + k2 - 0.5, k2 - k1 + q + 0.5);
    s = cdh_orthonormal_sequence(max_terms, y, P);
    // |Gamma(a+i sqrt y) Gamma(1-a+q+i sqrt y) / (Gamma(a-q+i sqrt y) Gamma(1-a+i sqrt y))|,
    // which is the polynomial prod_{m=1}^{q} ((a-m)^2 + y).
    double g = 1.0;
    for (int m = 1; m <= q; ++m) g *= (a - m) * (a - m) + y;
    pref = common * parity(p) * g * std::pow(c, x1 + 0.5 * q) /
           std::sqrt(std::tgamma(q + 1.0) * pochhammer(2.0 * k2, q));
    meixner_pair = [&, q](int n) { return meixner_orthonormal(n, x1, m1) * meixner_orthonormal(n + q, x2, m2); };
  }
  auto term = [&](int n) -> ComplexValue { return pref * parity(n) * s(n) * meixner_pair(n); };
  const OneSided r = sum_one_side(term, 0, 1, max_terms, kEps, stop_early);
  return {r.value.real(), r.terms, r.tail};
}

VerificationReport verify_bilinear_sum(const IdentityCase& k) {
  const double k1 = k.real("k1"), k2 = k.real("k2"), c = k.real("c"), y = k.real("y");
  const int x1 = k.integer("x1"), x2 = k.integer("x2");
  const int p = k.integer_or("p", x1 - x2);
  const int branch = k.integer_or("branch", 0);
  if (k2 < k1) throw DomainError("verify_bilinear_sum: k2 >= k1 required");
  if (!(c > 0.0 && c <= 0.9)) throw DomainError("verify_bilinear_sum: c must lie in (0, 0.9]");
  const int cap = k.truncation > 0 ? k.truncation : 600;
  const double lhs = bilinear_lhs(k1, k2, x1, x2, p, c, y);
  const SeriesValue rhs = bilinear_rhs(k1, k2, x1, x2, p, c, y, cap, branch);
  VerificationReport r = VerificationReport::compare(k.id, k.params, lhs, rhs.value, k.tolerance, rhs.terms, rhs.tail);
  if (r.pass() && !(rhs.tail <= k.tolerance * std::max(std::abs(rhs.value), k.tolerance))) {
    r.status = CaseStatus::Fail;
    r.note = "tail certificate above tolerance";
  }
  return r;
}

VerificationReport verify_eqS_shift(const IdentityCase& k) {
  const int n = k.integer("n"), p = k.integer("p");
  const double y = k.real("y"), k1 = k.real("k1"), k2 = k.real("k2");
  if (p < 0 || p > n) throw DomainError("verify_eqS_shift: 0 <= p <= n required");
  const double lhs = cdh(n, y, k1 - k2 + 0.5, k1 + k2 - 0.5, k2 - k1 - p + 0.5);
  // |Gamma(a+p+i sqrt y)/Gamma(a+i sqrt y)|^2 = prod_{j<p} ((a+j)^2 + y)
  double g = 1.0;
  for (int j = 0; j < p; ++j) g *= (k1 - k2 + 0.5 + j) * (k1 - k2 + 0.5 + j) + y;
  const double rhs = parity(p) * g * cdh(n - p, y, k2 - k1 + 0.5, k1 + k2 - 0.5, k1 - k2 + p + 0.5);
  return VerificationReport::compare(k.id, k.params, lhs, rhs, k.tolerance);
}

// ---------------------------------------------------------------------------
// Poisson kernel

namespace {

ComplexValue poisson_argument(double c, double s, ComplexValue t) {
  const double rc = std::sqrt(c), rs = std::sqrt(s);
  return (rc - rs * t) * (rc - rs / t) / ((1.0 - c) * (s - 1.0));
}

double mapped_radius(ComplexValue z) { return std::min(std::abs(z), std::abs(z / (z - 1.0))); }

void check_annulus(double c, double s, ComplexValue t) {
  if (!(c > 0.0 && c < 1.0) || !(s > 0.0 && s < 1.0)) throw DomainError("poisson kernel: c, s must lie in (0,1)");
  const double rcs = std::sqrt(c * s), at = std::abs(t);
  if (!(at > rcs * (1.0 + 1e-3) && at < (1.0 - 1e-3) / rcs))
    throw AnnulusError("poisson kernel: t outside the annulus or within 1e-3 of its boundary");
}

}  // namespace

ComplexValue poisson_kernel_closed_form(int x, int y, double c, double s, double rho, double eps, ComplexValue t) {
  check_annulus(c, s, t);
  const double rc = std::sqrt(c), rs = std::sqrt(s), rcs = std::sqrt(c * s);
  const ComplexValue Z = poisson_argument(c, s, t);
  const ComplexValue a(-y - eps + 0.5, rho), b(-y - eps + 0.5, -rho);
  const double g2 = std::exp(2.0 * log_gamma(ComplexValue(x + eps + 0.5, rho)).real());
  const ComplexValue pre = ipow(t, y) * std::pow(1.0 - s, 2.0 * eps + y) * std::pow(1.0 - c, 2.0 * eps + y) *
                           std::pow(1.0 - rcs * t, ComplexValue(-2.0 * eps - x - y)) * std::pow(c, 0.5 * x) *
                           std::pow(s, 0.5 * y) * g2;
  if (x >= y) {
    const int m = x - y;
    return pre * ipow(rs * t - rc, m) * gauss_2f1_regularized(a, b, double(1 + m), Z);
  }
  // x < y: (sqrt(s) t - sqrt(c))^{x-y} / Gamma(1+x-y) 2F1(a,b;1+x-y;Z) rewritten through the 1/Gamma(1-r) reflection of 2F1.
  const int r = y - x;
  const ComplexValue shift = ipow(rc - rs / t, r) / std::pow((1.0 - c) * (s - 1.0), r) * double(parity(r)) *
                             pochhammer(a, r) * pochhammer(b, r) / std::tgamma(r + 1.0);
  return pre * shift * gauss_2f1(a + double(r), b + double(r), double(r + 1), Z);
}

BilateralSum poisson_kernel_sum(int x, int y, double c, double s, double rho, double eps, ComplexValue t,
                                double rel_tol, int max_terms) {
  check_annulus(c, s, t);
  const auto pc = MeixnerFunctionParams::principal(rho, eps, c);
  const auto ps = MeixnerFunctionParams::principal(rho, eps, s);
  auto term = [&](int n) -> ComplexValue {
    return meixner_function(n, x, pc) * meixner_function(n, y, ps) * ipow(t, n);
  };
  const OneSided up = sum_one_side(term, 0, 1, max_terms, rel_tol);
  const OneSided down = sum_one_side(term, -1, -1, max_terms, rel_tol);
  return {up.value + down.value, up.terms + down.terms, up.tail + down.tail};
}

VerificationReport verify_poisson_kernel(const IdentityCase& k) {
  const int x = k.integer("x"), y = k.integer("y");
  const double c = k.real("c"), s = k.real("s"), rho = k.real("rho"), eps = k.real("eps");
  const ComplexValue t = k.complex("t");
  check_annulus(c, s, t);
  const ComplexValue Z = poisson_argument(c, s, t);
  if (mapped_radius(Z) > 0.95)
    return VerificationReport::skipped(k.id, k.params, "2F1 argument maps outside radius 0.95");
  const ComplexValue rhs = poisson_kernel_closed_form(x, y, c, s, rho, eps, t);
  const BilateralSum lhs = poisson_kernel_sum(x, y, c, s, rho, eps, t, kEps, k.truncation > 0 ? k.truncation : 2000);
  return VerificationReport::compare(k.id, k.params, lhs.value, rhs, k.tolerance, lhs.terms, lhs.tail);
}

VerificationReport verify_meixner_dual_orthogonality(const IdentityCase& k) {
  const int x = k.integer("x"), y = k.integer("y");
  const double c = k.real("c"), rho = k.real("rho"), eps = k.real("eps");
  const auto p = MeixnerFunctionParams::principal(rho, eps, c);
  auto term = [&](int n) -> ComplexValue {
    return meixner_function_weighted(n, x, p) * meixner_function_weighted(n, y, p);
  };
  const int cap = k.truncation > 0 ? k.truncation : 2000;
  const OneSided up = sum_one_side(term, 0, 1, cap, kEps);
  const OneSided down = sum_one_side(term, -1, -1, cap, kEps);
  return VerificationReport::compare(k.id, k.params, up.value + down.value, x == y ? 1.0 : 0.0, k.tolerance,
                                     up.terms + down.terms, up.tail + down.tail);
}

// ---------------------------------------------------------------------------
// Generating functions

VerificationReport verify_generating_functions(const IdentityCase& k) {
  const double kk = k.real("k"), c = k.real("c");
  const int x = k.integer("x");
  const int n_max = k.integer_or("n_max", 30);
  if (x < 0) throw DomainError("verify_generating_functions: x must be non-negative");
  const MeixnerParams mp(2.0 * kk, c);
  const double rc = std::sqrt(c);
  std::vector<VerificationReport> parts;

  // Taylor coefficients of (1 - z/sqrt c)^x (1 - sqrt c z)^{-x-2k}.
  std::vector<double> poly(x + 1), binom(n_max + 1);
  poly[0] = 1.0;
  for (int j = 1; j <= x; ++j) poly[j] = poly[j - 1] * (-(x - j + 1.0) / j) / rc;
  binom[0] = 1.0;
  for (int m = 1; m <= n_max; ++m) binom[m] = binom[m - 1] * (x + 2.0 * kk + m - 1.0) / m * rc;
  auto lhs_coeff = [&](int n) {
    return std::sqrt(pochhammer(2.0 * kk, n) / std::tgamma(n + 1.0)) * meixner_orthonormal(n, x, mp);
  };
  for (int n = 0; n <= n_max; ++n) {
    double rhs = 0.0;
    for (int j = 0; j <= std::min(n, x); ++j) rhs += poly[j] * binom[n - j];
    auto p = k.params;
    p.push_back({"n", double(n)});
    parts.push_back(VerificationReport::compare(k.id, p, lhs_coeff(n), rhs, k.tolerance));
  }

  // Both realizations at a point inside |z| < 1/sqrt c: the holomorphic series
  // in z and the anti-holomorphic one in conj(z).
  const ComplexValue z = k.has("z") ? k.complex("z") : ComplexValue(0.3, 0.25);
  if (!(std::abs(z) * rc < 0.9)) throw DomainError("verify_generating_functions: |z| must be below 0.9/sqrt(c)");
  for (const ComplexValue u : {z, std::conj(z)}) {
    auto term = [&](int n) -> ComplexValue { return lhs_coeff(n) * ipow(u, n); };
    const OneSided series = sum_one_side(term, 0, 1, 2000, kEps);
    const ComplexValue closed = ipow(1.0 - u / rc, x) * std::pow(1.0 - rc * u, ComplexValue(-x - 2.0 * kk));
    auto p = k.params;
    p.push_back({"point", u});
    parts.push_back(VerificationReport::compare(k.id, p, series.value, closed, k.tolerance, series.terms, series.tail));
  }

  // Continuous dual Hahn: sum S_n/(n!(a+c)_n) t^n = (1-t)^{-b+ix} 2F1(a+ix, c+ix; a+c; t).
  const double a = k.real_or("cdh_a", 0.6), b = k.real_or("cdh_b", 0.9), cc = k.real_or("cdh_c", 1.2);
  const double y = k.real_or("cdh_y", 1.5);
  const ComplexValue ix = i_sqrt(y);
  std::vector<ComplexValue> beta(n_max + 1), gam(n_max + 1);
  beta[0] = gam[0] = 1.0;
  for (int m = 1; m <= n_max; ++m) {
    beta[m] = beta[m - 1] * (b - ix + double(m - 1)) / double(m);
    gam[m] = gam[m - 1] * (a + ix + double(m - 1)) * (cc + ix + double(m - 1)) / ((a + cc + m - 1.0) * m);
  }
  for (int n = 0; n <= n_max; ++n) {
    ComplexValue rhs = 0.0;
    for (int j = 0; j <= n; ++j) rhs += gam[j] * beta[n - j];
    const double lhs = cdh(n, y, a, b, cc) / (std::tgamma(n + 1.0) * pochhammer(a + cc, n));
    auto p = k.params;
    p.push_back({"cdh_n", double(n)});
    parts.push_back(VerificationReport::compare(k.id, p, lhs, rhs, k.tolerance));
  }
  return worst_of(parts, k.id);
}

// ---------------------------------------------------------------------------
// Realization consistency

namespace {

struct RealizationSetup {
  double k1, k2, c, sigma;
  int x;
  ComplexValue z, wbar;
  DecompositionSpec spec;
};

// |Gamma(k2-k1+1/2+i rho) Gamma(k1+k2-1/2+i rho) / Gamma(2 i rho)|
double common_gamma_weight(const RealizationSetup& r, double rho) {
  const ComplexValue i_rho(0.0, rho);
  return std::exp((log_gamma(r.k2 - r.k1 + 0.5 + i_rho) + log_gamma(r.k1 + r.k2 - 0.5 + i_rho) -
                   log_gamma(2.0 * i_rho))
                      .real());
}

ComplexValue form_v1(const RealizationSetup& r, double rho) {
  const ComplexValue i_rho(0.0, rho);
  const double eps = r.spec.epsilon;
  const int L = r.spec.L;
  const auto mp = MeixnerFunctionParams::principal(rho, eps, r.c);
  const ComplexValue zw = r.z * r.wbar;
  const ComplexValue T = zw / (zw - 1.0);
  const ComplexValue A = r.k2 - r.k1 + 0.5 + i_rho, B = r.k2 - r.k1 + 0.5 - i_rho;
  auto term = [&](int n) -> ComplexValue {
    const double mw = meixner_function_weighted(n - L, r.x - L, mp);
    if (mw == 0.0) return 0.0;
    const double g = abs_gamma(n + r.k1 - r.k2 + 0.5 + i_rho);
    return mw * g * gauss_2f1_regularized(A, B, double(1 + n), T) * ipow(r.z, n);
  };
  const OneSided up = sum_one_side(term, 0, 1, 400, kEps);
  const OneSided down = sum_one_side(term, -1, -1, 400, kEps);
  return common_gamma_weight(r, rho) * (up.value + down.value);
}

ComplexValue form_v2(const RealizationSetup& r, double rho) {
  const ComplexValue i_rho(0.0, rho);
  const double rc = std::sqrt(r.c);
  const ComplexValue U = (rc - r.z) * (rc - r.wbar) / ((1.0 - r.c) * (r.z * r.wbar - 1.0));
  const ComplexValue A = r.k2 - r.k1 + 0.5 + i_rho, B = r.k2 - r.k1 + 0.5 - i_rho;
  const double g = abs_gamma(r.k1 - r.k2 + r.x + 0.5 + i_rho);
  return common_gamma_weight(r, rho) * g * gauss_2f1_regularized(A, B, double(1 + r.x), U);
}

template <typename F>
ComplexValue integrate_rho(const RealizationSetup& r, F&& inner, int panels) {
  const GaussLegendreRule rule = gauss_legendre(8);
  const double rho_max = 8.0 * r.sigma + 4.0;
  const double h = rho_max / panels;
  CompensatedSum acc;
  for (int p = 0; p < panels; ++p)
    for (int i = 0; i < rule.nodes.size(); ++i) {
      const double rho = (p + 0.5) * h + 0.5 * h * rule.nodes(i);
      const double f = std::exp(-rho * rho / (r.sigma * r.sigma));
      acc.add(0.5 * h * rule.weights(i) * f * inner(r, rho));
    }
  return acc.value();
}

}  // namespace

VerificationReport verify_realization_consistency(const IdentityCase& k) {
  RealizationSetup r{k.real("k1"), k.real("k2"), k.real("c"), k.real_or("sigma", 1.0), k.integer("x"),
                     k.complex("z"), std::conj(k.complex("w")), {}};
  const TensorPair pair(r.k1, r.k2);
  r.spec = decomposition_spec(pair);
  if (r.spec.kind != DecompositionKind::ContinuousOnly)
    throw DomainError("verify_realization_consistency: needs k1-k2 >= -1/2 and k1+k2 >= 1/2");
  const double rc = std::sqrt(r.c);
  if (!(std::abs(r.z * r.wbar) < 1.0) || !(std::abs(r.z) < 1.0 / rc) || !(std::abs(r.wbar) < 1.0 / rc))
    throw DomainError("verify_realization_consistency: need |z w| < 1 and |z|, |w| < 1/sqrt(c)");

  const double norm = 1.0 / std::sqrt(2.0 * kPi * std::tgamma(2.0 * r.k1) * std::tgamma(2.0 * r.k2));
  const ComplexValue zw = r.z * r.wbar;
  const ComplexValue pre1 = std::pow(1.0 - zw, ComplexValue(-2.0 * r.k2)) * norm;
  const ComplexValue mz = (rc - r.z) / (1.0 - r.z * rc), mw = (rc - r.wbar) / (1.0 - r.wbar * rc);
  const ComplexValue pre2 = double(parity(r.x)) * std::pow(1.0 - r.z * rc, ComplexValue(-2.0 * r.k1)) *
                            std::pow(1.0 - r.wbar * rc, ComplexValue(-2.0 * r.k2)) *
                            std::pow(1.0 - r.c, r.k1 + r.k2) * ipow(mz, r.x) *
                            std::pow(1.0 - mz * mw, ComplexValue(-2.0 * r.k2)) * norm;

  const int panels = k.truncation > 0 ? k.truncation : 24;
  const ComplexValue v1 = pre1 * integrate_rho(r, form_v1, panels);
  const ComplexValue v2 = pre2 * integrate_rho(r, form_v2, panels);
  const ComplexValue v2_fine = pre2 * integrate_rho(r, form_v2, 2 * panels);
  return VerificationReport::compare(k.id, k.params, v1, v2, k.tolerance, panels * 8, std::abs(v2_fine - v2));
}

// ---------------------------------------------------------------------------
// Grids

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t index) const {
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * ((stream << 32) + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t index, double lo, double hi) const {
  const double u = static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "conti1",       "conti1_companion", "2f1_contiguous",       "bilinear_sum",           "eqS_shift",
      "poisson_kernel", "meixner_dual",   "generating_functions", "realization_consistency"};
  return ids;
}

double default_tolerance(const std::string& id) {
  if (id == "conti1" || id == "conti1_companion" || id == "2f1_contiguous" || id == "generating_functions")
    return 1e-10;
  if (id == "bilinear_sum") return 1e-8;
  if (id == "eqS_shift") return 1e-9;
  if (id == "poisson_kernel") return 1e-7;
  if (id == "meixner_dual" || id == "realization_consistency") return 1e-6;
  throw DomainError("unknown identity '" + id + "'");
}

std::vector<IdentityCase> default_grid(const std::string& id, const GridOptions& opt) {
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : default_tolerance(id);
  const CounterRng rng(opt.seed);
  std::vector<IdentityCase> out;
  auto add = [&](std::vector<ReportParam> params) {
    out.push_back({id, std::move(params), opt.truncation, tol});
  };
  // Each random grid draws from its own stream; draw j of case i uses index i*16+j.
  auto draw = [&](std::uint64_t stream, int i, int j, double lo, double hi) {
    return rng.uniform(stream, static_cast<std::uint64_t>(i) * 16 + j, lo, hi);
  };
  auto draw_int = [&](std::uint64_t stream, int i, int j, int lo, int hi) {
    return lo + static_cast<int>(rng.bits(stream, static_cast<std::uint64_t>(i) * 16 + j) % (hi - lo + 1));
  };

  if (id == "conti1" || id == "conti1_companion") {
    const bool companion = id == "conti1_companion";
    const std::uint64_t stream = companion ? 2 : 1;
    for (int i = 0; i < opt.samples; ++i) {
      const double a = draw(stream, i, 0, 0.1, 2.0), b = draw(stream, i, 1, 0.1, 2.0);
      const double c = companion ? draw(stream, i, 2, 1.1, 3.0) : draw(stream, i, 2, 0.1, 2.0);
      add(params_of({{"n", double(draw_int(stream, i, 3, 0, 15))}, {"y", draw(stream, i, 4, 0.0, 9.0)},
                     {"a", a}, {"b", b}, {"c", c}}));
    }
    // Polynomial identity at a discrete mass point y = -a^2 of (a, b, c).
    for (int n : {0, 3, 7}) add(params_of({{"n", double(n)}, {"y", -0.09}, {"a", -0.3}, {"b", 1.0}, {"c", 1.5}}));
  } else if (id == "2f1_contiguous") {
    for (int relation : {1, 2}) {
      const std::uint64_t stream = 2 + relation;
      for (int i = 0; i < opt.samples; ++i) {
        const ComplexValue a(draw(stream, i, 0, -2.0, 2.0), draw(stream, i, 1, -1.0, 1.0));
        const ComplexValue b(draw(stream, i, 2, -2.0, 2.0), draw(stream, i, 3, -1.0, 1.0));
        const ComplexValue c(draw(stream, i, 4, 1.2, 3.5), draw(stream, i, 5, -1.0, 1.0));
        const ComplexValue z = std::polar(draw(stream, i, 6, 0.0, 0.9), draw(stream, i, 7, 0.0, 2.0 * kPi));
        add({{"relation", double(relation)}, {"a", a}, {"b", b}, {"c", c}, {"z", z}});
      }
    }
  } else if (id == "bilinear_sum") {
    for (auto [k1, k2] : {std::pair{0.5, 0.8}, {0.3, 0.3}, {0.2, 1.2}})
      for (double c : {0.2, 0.4, 0.6})
        for (double y : {0.25, 1.0, 4.0})
          for (auto [x1, x2] : {std::pair{0, 0}, {2, 1}, {1, 3}})
            add(params_of({{"k1", k1}, {"k2", k2}, {"x1", double(x1)}, {"x2", double(x2)}, {"c", c}, {"y", y}}));
  } else if (id == "eqS_shift") {
    for (int i = 0; i < std::min(opt.samples, 60); ++i) {
      const int n = draw_int(6, i, 0, 0, 10);
      const double k1 = draw(6, i, 2, 0.1, 1.5);
      add(params_of({{"n", double(n)}, {"p", double(draw_int(6, i, 1, 0, n))}, {"y", draw(6, i, 3, 0.0, 6.0)},
                     {"k1", k1}, {"k2", k1 + draw(6, i, 4, 0.0, 1.5)}}));
    }
  } else if (id == "poisson_kernel") {
    for (auto [x, y] : {std::pair{0, 0}, {2, -1}, {-3, 1}})
      for (auto [c, s] : {std::pair{0.3, 0.3}, {0.3, 0.6}})
        for (double rho : {0.5, 1.5})
          for (double eps : {0.2, 0.7})
            for (double t : {0.8, 1.0, 1.2 * std::sqrt(c * s)})
              add(params_of({{"x", double(x)}, {"y", double(y)}, {"c", c}, {"s", s}, {"rho", rho}, {"eps", eps}, {"t", t}}));
  } else if (id == "meixner_dual") {
    for (auto [rho, eps, c] : {std::tuple{0.5, 0.2, 0.3}, {1.5, 0.7, 0.3}, {0.8, 0.4, 0.6}})
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
          add(params_of({{"x", double(x)}, {"y", double(y)}, {"c", c}, {"rho", rho}, {"eps", eps}}));
  } else if (id == "generating_functions") {
    add(params_of({{"k", 0.7}, {"c", 0.4}, {"x", 0.0}}));
    add(params_of({{"k", 1.2}, {"c", 0.3}, {"x", 3.0}}));
  } else if (id == "realization_consistency") {
    add({{"k1", 0.7}, {"k2", 0.9}, {"x", 1.0}, {"c", 0.3}, {"z", ComplexValue(0.3, 0.1)}, {"w", ComplexValue(0.2, -0.15)}});
    add({{"k1", 0.5}, {"k2", 0.8}, {"x", -1.0}, {"c", 0.4}, {"z", ComplexValue(0.25, 0.0)}, {"w", ComplexValue(0.1, 0.2)}});
  } else {
    throw DomainError("unknown identity '" + id + "'");
  }
  return out;
}

VerificationReport run_case(const IdentityCase& c) {
  try {
    if (c.id == "conti1") return verify_conti1(c);
    if (c.id == "conti1_companion") return verify_conti1_companion(c);
    if (c.id == "2f1_contiguous") return verify_2f1_contiguous(c);
    if (c.id == "bilinear_sum") return verify_bilinear_sum(c);
    if (c.id == "eqS_shift") return verify_eqS_shift(c);
    if (c.id == "poisson_kernel") return verify_poisson_kernel(c);
    if (c.id == "meixner_dual") return verify_meixner_dual_orthogonality(c);
    if (c.id == "generating_functions") return verify_generating_functions(c);
    if (c.id == "realization_consistency") return verify_realization_consistency(c);
  } catch (const AnnulusError& e) {
    return VerificationReport::skipped(c.id, c.params, e.what());
  }
  throw DomainError("unknown identity '" + c.id + "'");
}

}  // namespace su11

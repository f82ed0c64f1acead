#include "su11/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "su11/detail/double_double.hpp"

namespace su11 {
namespace {

using detail::DoubleDouble;

constexpr double kMargin = 1e-9;
// Above this degree the plain sum overflows or cancels beyond double-double.
constexpr int kSumDegreeLimit = 40;

double log_poch(double u, int n) { return std::lgamma(u + n) - std::lgamma(u); }

// (a+m)^2 + y in double-double, exact product.
DoubleDouble paired_factor(double a, int m, double y) {
  const DoubleDouble s = detail::two_sum(a, m);
  return s * s + DoubleDouble(y);
}

double log_cdh_norm(int n, const CDHParams& p) {
  return 0.5 * (std::lgamma(n + 1.0) + log_poch(p.a + p.b, n) + log_poch(p.a + p.c, n) +
                log_poch(p.b + p.c, n));
}

// Pole-free form of the terminating 3F2:
// S_n = sum_j (-n)_j prod_{m<j}((a+m)^2+y) (a+b+j)_{n-j} (a+c+j)_{n-j} / j!.
DoubleDouble cdh_sum(int n, double y, double a, double b, double c) {
  // Parameter sums are formed in double-double: the alternating sum cancels
  // many digits at high degree, and a rounded a+c+j would dominate the error.
  const DoubleDouble ab = detail::two_sum(a, b), ac = detail::two_sum(a, c);
  std::vector<DoubleDouble> q(n + 1);
  q[n] = 1.0;
  for (int j = n - 1; j >= 0; --j) q[j] = q[j + 1] * (ab + DoubleDouble(j)) * (ac + DoubleDouble(j));
  DoubleDouble r = 1.0, sum = q[0];
  for (int j = 0; j < n; ++j) {
    DoubleDouble f = paired_factor(a, j, y);
    // Snap to an exact zero on a mass point so the sum terminates there.
    if (std::abs(f.hi) <= 1e-13 * std::max(1.0, std::abs(y))) break;
    r = r * DoubleDouble(static_cast<double>(j - n)) * f / DoubleDouble(j + 1.0);
    sum += r * q[j + 1];
  }
  return sum;
}

// Orthonormal value on a mass point with termination index k < n: only
// k+1 terms survive; Pochhammer ratios are taken in logs.
double cdh_orthonormal_terminating(int n, int k, double y, const CDHParams& p) {
  double lnorm = log_cdh_norm(n, p);
  double ab = p.a + p.b, ac = p.a + p.c;
  double total = 0.0;
  double r = 1.0;  // (-n)_j prod((a+m)^2+y)/j!
  for (int j = 0; j <= k; ++j) {
    if (j > 0) r *= (j - 1.0 - n) * ((p.a + j - 1) * (p.a + j - 1) + y) / j;
    double lq = log_poch(ab + j, n - j) + log_poch(ac + j, n - j);
    total += r * std::exp(lq - lnorm);
  }
  return (n % 2 == 0) ? total : -total;
}

}  // namespace

MeixnerParams::MeixnerParams(double beta_, double c_) : beta(beta_), c(c_) {
  if (!(beta > kMargin) || !std::isfinite(beta)) throw DomainError("MeixnerParams: beta must be > 0");
  if (!(c > kMargin && c < 1.0 - kMargin)) throw DomainError("MeixnerParams: c must lie in (0,1)");
}

CDHParams::CDHParams(double a_, double b_, double c_) {
  double v[3] = {a_, b_, c_};
  for (double t : v)
    if (!std::isfinite(t)) throw DomainError("CDHParams: non-finite parameter");
  std::sort(v, v + 3);
  a = v[0];
  b = v[1];
  c = v[2];
  if (!(a + b >= kMargin && a + c >= kMargin && b + c >= kMargin))
    throw DomainError("CDHParams: pairwise sums must be positive");
}

double meixner(int n, double x, const MeixnerParams& p) {
  if (n < 0) throw DomainError("meixner: n must be non-negative");
  const DoubleDouble z = DoubleDouble(1.0) - DoubleDouble(1.0) / DoubleDouble(p.c);
  DoubleDouble t = 1.0, sum = 1.0;
  for (int j = 0; j < n; ++j) {
    DoubleDouble num = DoubleDouble(static_cast<double>(j - n)) * (DoubleDouble(j) - DoubleDouble(x));
    if (num.hi == 0.0) break;
    t = t * num * z / (DoubleDouble(p.beta + j) * DoubleDouble(j + 1.0));
    sum += t;
  }
  return sum.value();
}

double meixner_orthonormal(int n, double x, const MeixnerParams& p) {
  double lnorm = 0.5 * (log_poch(p.beta, n) + n * std::log(p.c) - std::lgamma(n + 1.0));
  return std::exp(lnorm) * meixner(n, x, p);
}

double meixner_weight(int x, const MeixnerParams& p) {
  if (x < 0) throw DomainError("meixner_weight: x must be non-negative");
  return std::exp(log_poch(p.beta, x) - std::lgamma(x + 1.0) + x * std::log(p.c) +
                  p.beta * std::log1p(-p.c));
}

double cdh(int n, double y, double a, double b, double c) {
  if (n < 0) throw DomainError("cdh: n must be non-negative");
  return cdh_sum(n, y, a, b, c).value();
}

double cdh(int n, double y, const CDHParams& p) { return cdh(n, y, p.a, p.b, p.c); }

double cdh_orthonormal(int n, double y, const CDHParams& p) {
  if (n < 0) throw DomainError("cdh_orthonormal: n must be non-negative");
  if (n <= kSumDegreeLimit) {
    double s = cdh_sum(n, y, p.a, p.b, p.c).value() * std::exp(-log_cdh_norm(n, p));
    return (n % 2 == 0) ? s : -s;
  }
  int k = detail::cdh_mass_index(y, p.a, n);
  if (k >= 0) return cdh_orthonormal_terminating(n, k, y, p);
  return cdh_orthonormal_sequence(n + 1, y, p)(n);
}

Eigen::VectorXd cdh_orthonormal_sequence(int count, double y, const CDHParams& p) {
  Eigen::VectorXd s(std::max(count, 0));
  if (count <= 0) return s;
  int k = detail::cdh_mass_index(y, p.a, count);
  if (k >= 0) {
    // On a mass point the recurrence runs into the minimal solution; the
    // terminating sums are cheap and exact there.
    for (int n = 0; n < count; ++n)
      s(n) = n <= k ? cdh_orthonormal(n, y, p) : cdh_orthonormal_terminating(n, k, y, p);
    return s;
  }
  s(0) = 1.0;
  if (count == 1) return s;
  RecurrenceCoeffs r0 = cdh_recurrence_coeffs(0, p);
  s(1) = (y - r0.b) / r0.a;
  double a_prev = r0.a;
  for (int n = 1; n + 1 < count; ++n) {
    RecurrenceCoeffs r = cdh_recurrence_coeffs(n, p);
    s(n + 1) = ((y - r.b) * s(n) - a_prev * s(n - 1)) / r.a;
    a_prev = r.a;
  }
  return s;
}

RecurrenceCoeffs cdh_recurrence_coeffs(int n, const CDHParams& p) {
  if (n < 0) throw DomainError("cdh_recurrence_coeffs: n must be non-negative");
  double a = p.a, b = p.b, c = p.c;
  return {std::sqrt((n + 1.0) * (n + a + b) * (n + a + c) * (n + b + c)),
          2.0 * n * n + 2.0 * n * (a + b + c - 0.5) + a * b + a * c + b * c};
}

ComplexValue jacobi_function(double alpha, double beta, ComplexValue sigma, double t) {
  const ComplexValue i(0.0, 1.0);
  ComplexValue s = 0.5 * (alpha + beta + 1.0);
  return gauss_2f1(s - 0.5 * i * sigma, s + 0.5 * i * sigma, alpha + 1.0, -t);
}

ComplexValue jacobi_function_regularized(double alpha, double beta, ComplexValue sigma, double t) {
  const ComplexValue i(0.0, 1.0);
  ComplexValue s = 0.5 * (alpha + beta + 1.0);
  return gauss_2f1_regularized(s - 0.5 * i * sigma, s + 0.5 * i * sigma, alpha + 1.0, -t);
}

namespace detail {

int cdh_mass_index(double y, double a, int limit) {
  if (y > 0.0) return -1;
  double x = std::sqrt(-y);
  for (double root : {-a - x, -a + x}) {
    double m = std::round(root);
    if (m < 0.0 || m >= limit) continue;
    double f = (a + m) * (a + m) + y;
    if (std::abs(f) <= 1e-13 * std::max(1.0, -y)) return static_cast<int>(m);
  }
  return -1;
}

}  // namespace detail
}  // namespace su11

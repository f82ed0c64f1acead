#include "su11/mfunctions.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "su11/detail/double_double.hpp"

namespace su11 {
namespace {

constexpr double kIntTol = 1e-9;
constexpr double kPi = 3.14159265358979323846;

// Logarithm of a real or complex quantity; `zero` marks an exact zero.
struct LogValue {
  ComplexValue log = 0.0;
  bool zero = false;
};

LogValue operator+(LogValue a, LogValue b) { return {a.log + b.log, a.zero || b.zero}; }

bool is_integer(double v, double tol = kIntTol) { return std::abs(v - std::round(v)) <= tol; }

// log (u)_r, r >= 0.
LogValue log_poch(ComplexValue u, int r) {
  LogValue out;
  bool safe = !near_nonpositive_integer(u, 1e-6) && !near_nonpositive_integer(u + double(r), 1e-6);
  if (r > 64 && safe) {
    out.log = log_gamma(u + static_cast<double>(r)) - log_gamma(u);
    return out;
  }
  for (int k = 0; k < r; ++k) {
    ComplexValue f = u + static_cast<double>(k);
    if (std::abs(f) < 1e-300) return {0.0, true};
    out.log += std::log(f);
  }
  return out;
}

// log of Gamma(u+m)/Gamma(u) for real u. Throws when the ratio is infinite.
LogValue log_gamma_ratio(double u, int m) {
  bool pu = is_integer(u) && std::round(u) <= 0.0;
  bool pv = is_integer(u + m) && std::round(u + m) <= 0.0;
  if (pu && pv) {
    // Gamma(u+m)/Gamma(u) = (-1)^m Gamma(1-u)/Gamma(1-u-m)
    double a = 1.0 - std::round(u), b = 1.0 - std::round(u + m);
    LogValue out;
    out.log = std::lgamma(a) - std::lgamma(b);
    if (m % 2 != 0) out.log += ComplexValue(0.0, kPi);
    return out;
  }
  if (pu) return {0.0, true};
  if (pv) throw InvalidRegime("Meixner function: Gamma-factor pole in the prefactor");
  int s0 = 1, s1 = 1;
  double l0 = lgamma_r(u, &s0), l1 = lgamma_r(u + m, &s1);
  LogValue out;
  out.log = l1 - l0;
  if (s0 * s1 < 0) out.log += ComplexValue(0.0, kPi);
  return out;
}

double real_half_log(LogValue v, const char* what) {
  if (std::abs(std::remainder(v.log.imag(), 2.0 * kPi)) > 1e-6)
    throw InvalidRegime(std::string(what) + ": Gamma product is not positive");
  return 0.5 * v.log.real();
}

std::optional<int> terminating_numerator(ComplexValue a) {
  if (std::abs(a.imag()) > kIntTol || !is_integer(a.real()) || std::round(a.real()) > 0.0)
    return std::nullopt;
  return static_cast<int>(-std::round(a.real()));
}

using detail::ComplexDD;
using detail::DoubleDouble;

struct Parameters {
  ComplexValue A, B;  // n+eps+lambda+1, n+eps-lambda
  ComplexDD A_dd, CmB_dd;  // A and C-B = 1-x-eps+lambda, exact sums of the inputs
  double eps, c;
  int C;  // n+1-x
};

Parameters make_parameters(int n, int x, const MeixnerFunctionParams& p) {
  DoubleDouble eps(p.epsilon), lr(p.lambda.real()), li(p.lambda.imag());
  ComplexDD A{DoubleDouble(n + 1.0) + eps + lr, li};
  ComplexDD CmB{DoubleDouble(1.0 - x) - eps + lr, li};
  return {n + p.epsilon + p.lambda + 1.0, n + p.epsilon - p.lambda, A, CmB, p.epsilon, p.c, n + 1 - x};
}

// 2F1(a,b;c;z) power series with terms and sum in double-double. The
// Pfaff-transformed series of large-index Meixner functions cancel by
// several orders of magnitude.
ComplexValue series_dd(ComplexDD a, ComplexDD b, double c, double z) {
  const SeriesControl ctl;
  ComplexDD t{1.0, 0.0}, sum{1.0, 0.0};
  const DoubleDouble zz(z);
  int small = 0;
  for (int k = 0;; ++k) {
    if (k >= ctl.max_terms) throw ConvergenceError("Meixner function series: max_terms reached");
    DoubleDouble kk(k);
    ComplexDD ak{a.re + kk, a.im}, bk{b.re + kk, b.im};
    t = ak * bk * t * zz / (DoubleDouble(c + k) * DoubleDouble(k + 1.0));
    if (t.re.hi == 0.0 && t.im.hi == 0.0) break;
    sum = sum + t;
    if (abs_value(t) <= 1e-30 * abs_value(sum)) {
      if (++small >= ctl.consecutive_small) break;
    } else {
      small = 0;
    }
  }
  return {sum.re.value(), sum.im.value()};
}

// Finite sum of a terminating 2F1 divided by Gamma(C) (log form).
LogValue log_terminating_regularized(double A, double B, int C, double z, int N) {
  int r = C >= 1 ? 0 : 1 - C;
  if (N < r) return {0.0, true};
  LogValue pre;
  double a = A, b = B;
  double cc = C;
  if (r > 0) {
    pre = log_poch(A, r) + log_poch(B, r);
    pre.log += static_cast<double>(r) * std::log(ComplexValue(z)) - std::lgamma(r + 1.0);
    a += r;
    b += r;
    cc = r + 1.0;
  } else {
    pre.log = -std::lgamma(cc);
  }
  detail::CompensatedSum sum;
  double t = 1.0;
  sum.add(t);
  for (int k = 0; k < N - r; ++k) {
    t *= (a + k) * (b + k) / ((cc + k) * (k + 1.0)) * z;
    sum.add(t);
  }
  double s = sum.value().real();
  if (s == 0.0) return {0.0, true};
  pre.log += std::log(ComplexValue(s));
  return pre;
}

// log of 2F1(A,B;C;c/(c-1))/Gamma(C).
LogValue log_hypergeometric(const Parameters& q) {
  const double z = q.c / (q.c - 1.0);
  auto na = terminating_numerator(q.A);
  auto nb = terminating_numerator(q.B);
  if (na || nb) {
    int N = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);
    return log_terminating_regularized(q.A.real(), q.B.real(), q.C, z, N);
  }
  // Pfaff: 2F1(A,B;C;z) = (1-c)^A 2F1(A, C-B; C; c).
  LogValue out;
  out.log = q.A * std::log1p(-q.c);
  ComplexValue a = q.A, b = double(q.C) - q.B;
  ComplexDD a_dd = q.A_dd, b_dd = q.CmB_dd;
  double cc = q.C;
  if (q.C >= 1) {
    out.log -= std::lgamma(cc);
  } else {
    int r = 1 - q.C;
    out = out + log_poch(a, r) + log_poch(b, r);
    if (out.zero) return out;
    out.log += r * std::log(q.c) - std::lgamma(r + 1.0);
    a_dd.re += DoubleDouble(r);
    b_dd.re += DoubleDouble(r);
    cc = r + 1.0;
  }
  ComplexValue s = series_dd(a_dd, b_dd, cc, q.c);
  if (s == 0.0) return {0.0, true};
  out.log += std::log(s);
  return out;
}

// 1/2 log(Gamma(A)Gamma(B)) at index n.
double half_log_gamma_pair(const Parameters& q, const MeixnerFunctionParams& p) {
  if (p.regime == MeixnerRegime::Principal) return log_gamma(q.A).real();
  double A = q.A.real(), B = q.B.real();
  if ((is_integer(A) && std::round(A) <= 0.0) || (is_integer(B) && std::round(B) <= 0.0))
    throw InvalidRegime("meixner_function: prefactor Gamma has a pole; use the weighted form");
  int sa = 1, sb = 1;
  double la = lgamma_r(A, &sa), lb = lgamma_r(B, &sb);
  if (sa * sb < 0) throw InvalidRegime("meixner_function: Gamma product is negative");
  return 0.5 * (la + lb);
}

double finish(LogValue v) {
  if (v.zero) return 0.0;
  return std::exp(v.log).real();
}

}  // namespace

MeixnerFunctionParams::MeixnerFunctionParams(MeixnerRegime regime_, ComplexValue lambda_,
                                             double epsilon_, double c_)
    : regime(regime_), lambda(lambda_), epsilon(epsilon_), c(c_) {
  require_finite(lambda, "MeixnerFunctionParams");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw InvalidRegime("Meixner function: epsilon must lie in [0,1)");
  if (!(c > 1e-9 && c < 1.0 - 1e-9)) throw InvalidRegime("Meixner function: c must lie in (0,1)");
  double lr = lambda.real(), li = lambda.imag();
  switch (regime) {
    case MeixnerRegime::Principal:
      if (std::abs(lr + 0.5) > 1e-12 || li < 0.0)
        throw InvalidRegime("principal regime needs lambda = -1/2 + i rho with rho >= 0");
      if (li == 0.0 && std::abs(epsilon - 0.5) < 1e-12)
        throw InvalidRegime("principal regime excludes (rho, eps) = (0, 1/2)");
      break;
    case MeixnerRegime::Complementary: {
      if (li != 0.0) throw InvalidRegime("complementary regime needs real lambda");
      bool lower = epsilon < 0.5 && lr > -0.5 && lr < -epsilon;
      bool upper = epsilon > 0.5 && lr > -0.5 && lr < epsilon - 1.0;
      if (!lower && !upper) throw InvalidRegime("lambda outside the complementary interval");
      break;
    }
    case MeixnerRegime::Terminating:
      if (li != 0.0) throw InvalidRegime("terminating regime needs real lambda");
      if (!is_integer(epsilon - lr) && !is_integer(epsilon + lr))
        throw InvalidRegime("terminating regime needs eps-lambda or eps+lambda integral");
      break;
  }
}

MeixnerFunctionParams MeixnerFunctionParams::principal(double rho, double epsilon, double c) {
  return {MeixnerRegime::Principal, ComplexValue(-0.5, rho), epsilon, c};
}

MeixnerFunctionParams MeixnerFunctionParams::complementary(double lambda, double epsilon, double c) {
  return {MeixnerRegime::Complementary, lambda, epsilon, c};
}

MeixnerFunctionParams MeixnerFunctionParams::terminating(double lambda, double epsilon, double c) {
  return {MeixnerRegime::Terminating, lambda, epsilon, c};
}

MeixnerFunctionParams MeixnerFunctionParams::from_spectral_point(double y, double epsilon, double c) {
  if (y >= 0.0) return principal(std::sqrt(y), epsilon, c);
  double lambda = -0.5 + std::sqrt(-y);
  bool lower = epsilon < 0.5 && lambda < -epsilon;
  bool upper = epsilon > 0.5 && lambda < epsilon - 1.0;
  if (lower || upper) return complementary(lambda, epsilon, c);
  return terminating(lambda, epsilon, c);
}

ComplexValue meixner_function_hypergeometric(int n, int x, const MeixnerFunctionParams& p) {
  LogValue v = log_hypergeometric(make_parameters(n, x, p));
  return v.zero ? ComplexValue(0.0) : std::exp(v.log);
}

double meixner_function(int n, int x, const MeixnerFunctionParams& p) {
  Parameters q = make_parameters(n, x, p);
  LogValue v = log_hypergeometric(q);
  if (v.zero) return 0.0;
  v.log += -n * std::log((1.0 - p.c) / std::sqrt(p.c)) + half_log_gamma_pair(q, p);
  return finish(v);
}

double meixner_function_weight(int x, const MeixnerFunctionParams& p) {
  double base = -x * std::log(p.c) - 2.0 * p.epsilon * std::log1p(-p.c);
  if (p.regime == MeixnerRegime::Principal) {
    ComplexValue d = x + p.epsilon + 0.5 + ComplexValue(0.0, p.lambda.imag());
    return std::exp(base - 2.0 * log_gamma(d).real());
  }
  double lr = p.lambda.real();
  return std::exp(base) * rgamma(p.epsilon + x - lr) * rgamma(p.epsilon + lr + x + 1.0);
}

double meixner_function_weighted(int n, int x, const MeixnerFunctionParams& p) {
  Parameters q = make_parameters(n, x, p);
  LogValue f = log_hypergeometric(q);
  if (f.zero) return 0.0;
  const int m = n - x;
  double half_g;
  if (p.regime == MeixnerRegime::Principal) {
    ComplexValue d2 = x + p.epsilon + 0.5 + ComplexValue(0.0, p.lambda.imag());
    half_g = log_gamma(q.A).real() - log_gamma(d2).real();
  } else {
    double lr = p.lambda.real();
    LogValue g = log_gamma_ratio(x + p.epsilon + lr + 1.0, m) + log_gamma_ratio(x + p.epsilon - lr, m);
    if (g.zero) return 0.0;
    half_g = real_half_log(g, "meixner_function_weighted");
  }
  f.log += -n * std::log((1.0 - p.c) / std::sqrt(p.c)) - 0.5 * x * std::log(p.c) -
           p.epsilon * std::log1p(-p.c) + half_g;
  return finish(f);
}

}  // namespace su11

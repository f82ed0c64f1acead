#include "su11/special.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace su11 {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;
constexpr double kRadius = 0.95;

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for Re z >= 0.5.
ComplexValue lanczos_log_gamma(ComplexValue z) {
  z -= 1.0;
  ComplexValue x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  ComplexValue t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z), overflow-safe for large |Im z|.
ComplexValue log_sinpi(ComplexValue z) {
  if (std::abs(z.imag()) < 200.0) return std::log(sinpi(z));
  if (z.imag() < 0.0) return std::conj(log_sinpi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); e^{2 i pi z} is tiny here.
  const ComplexValue i(0.0, 1.0);
  ComplexValue e2 = std::exp(2.0 * kPi * i * z);
  return -i * kPi * z + std::log(0.5 * i) + std::log(1.0 - e2);
}

std::optional<int> exact_nonpositive_integer(ComplexValue z) {
  if (z.imag() != 0.0) return std::nullopt;
  double x = z.real();
  if (x > 0.0 || x != std::round(x) || x < -1e9) return std::nullopt;
  return static_cast<int>(-x);
}

void check_pole(ComplexValue z) {
  if (near_nonpositive_integer(z, kPoleTol))
    throw PoleError("log_gamma: argument is a pole of Gamma");
}

ComplexValue pfaff_argument(ComplexValue z) { return z / (z - 1.0); }

}  // namespace

void SeriesControl::validate() const {
  if (max_terms <= 0 || max_terms > 1000000)
    throw DomainError("SeriesControl: max_terms must lie in [1, 1e6]");
  if (!(rel_tol >= std::numeric_limits<double>::epsilon()))
    throw DomainError("SeriesControl: rel_tol below machine epsilon");
  if (consecutive_small <= 0) throw DomainError("SeriesControl: consecutive_small must be positive");
}

void require_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": non-finite argument");
}

bool near_nonpositive_integer(ComplexValue z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

double sinpi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;  // now [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  double sgn = 1.0;
  if (r < 0.0) {
    r = -r;
    sgn = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;  // sin(pi r) = sin(pi (1 - r))
  double v = (r <= 0.25) ? std::sin(kPi * r) : std::cos(kPi * (0.5 - r));
  return sgn * v;
}

double cospi(double x) { return sinpi(x + 0.5); }

ComplexValue sinpi(ComplexValue z) {
  double y = kPi * z.imag();
  return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

ComplexValue log_gamma(ComplexValue z) {
  require_finite(z, "log_gamma");
  check_pole(z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  if (z.real() > -20.0) {
    // Upward recurrence keeps the principal branch.
    int m = static_cast<int>(std::ceil(0.5 - z.real()));
    ComplexValue acc = lanczos_log_gamma(z + static_cast<double>(m));
    for (int k = 0; k < m; ++k) acc -= std::log(z + static_cast<double>(k));
    return acc;
  }
  return std::log(kPi) - log_sinpi(z) - lanczos_log_gamma(1.0 - z);
}

ComplexValue gamma(ComplexValue z) {
  require_finite(z, "gamma");
  check_pole(z);
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
  return kPi / (sinpi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
}

ComplexValue rgamma(ComplexValue z) {
  require_finite(z, "rgamma");
  if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
  ComplexValue s = sinpi(z);
  if (s == 0.0) return 0.0;
  return s * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
}

double log_abs_gamma(double x, int* sign) {
  if (near_nonpositive_integer(x, kPoleTol)) throw PoleError("log_abs_gamma: pole of Gamma");
  int s = 1;
  double v = lgamma_r(x, &s);
  if (sign) *sign = s;
  return v;
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::round(x)) return 0.0;
  int s = 1;
  double v = lgamma_r(x, &s);
  return s * std::exp(-v);
}

ComplexValue pochhammer(ComplexValue z, int n) {
  if (n < 0) throw DomainError("pochhammer: negative order");
  ComplexValue p = 1.0;
  for (int k = 0; k < n; ++k) p *= z + static_cast<double>(k);
  return p;
}

double pochhammer(double x, int n) {
  if (n < 0) throw DomainError("pochhammer: negative order");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

namespace detail {

void CompensatedSum::add1(double& s, double& comp, double t) {
  double u = s + t;
  if (std::abs(s) >= std::abs(t))
    comp += (s - u) + t;
  else
    comp += (t - u) + s;
  s = u;
}

void CompensatedSum::add(ComplexValue t) {
  add1(re_, cre_, t.real());
  add1(im_, cim_, t.imag());
}

ComplexValue sum_2f1_series(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                            const SeriesControl& ctl, int* terms) {
  CompensatedSum sum;
  ComplexValue t = 1.0;
  sum.add(t);
  int small = 0;
  int k = 0;
  for (;; ++k) {
    if (k >= ctl.max_terms) throw ConvergenceError("2F1 series: max_terms reached");
    double kk = k;
    t *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    if (t == 0.0) break;
    sum.add(t);
    if (std::abs(t) <= ctl.rel_tol * std::abs(sum.value())) {
      if (++small >= ctl.consecutive_small) break;
    } else {
      small = 0;
    }
  }
  if (terms) *terms = k + 1;
  return sum.value();
}

double gamma_ratio(double u, int m) {
  if (std::abs(m) <= 400) {
    double p = 1.0;
    if (m > 0) {
      for (int k = 0; k < m; ++k) p *= u + k;
    } else {
      for (int k = 1; k <= -m; ++k) p /= u - k;
    }
    return p;
  }
  bool pu = near_nonpositive_integer(u, kPoleTol);
  bool pv = near_nonpositive_integer(u + m, kPoleTol);
  if (pu && pv) {
    // Gamma(u+m)/Gamma(u) = (-1)^m Gamma(1-u)/Gamma(1-u-m)
    double v = std::exp(std::lgamma(1.0 - u) - std::lgamma(1.0 - u - m));
    return (m % 2 == 0) ? v : -v;
  }
  if (pu) return 0.0;
  if (pv) return std::numeric_limits<double>::infinity();
  int s0 = 1, s1 = 1;
  double l0 = lgamma_r(u, &s0);
  double l1 = lgamma_r(u + m, &s1);
  return s0 * s1 * std::exp(l1 - l0);
}

}  // namespace detail

Hyp2F1Result gauss_2f1_detailed(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                                const SeriesControl& ctl, Hyp2F1Path path) {
  require_finite(a, "gauss_2f1");
  require_finite(b, "gauss_2f1");
  require_finite(c, "gauss_2f1");
  require_finite(z, "gauss_2f1");
  ctl.validate();
  Hyp2F1Result out;

  // Terminating series: summed directly for any z.
  auto na = exact_nonpositive_integer(a);
  auto nb = exact_nonpositive_integer(b);
  if (na || nb) {
    int n = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);
    for (int k = 0; k < n; ++k)
      if (near_nonpositive_integer(c + static_cast<double>(k), kPoleTol))
        throw DegenerateDenominator("gauss_2f1: denominator vanishes before termination");
    if (path != Hyp2F1Path::Pfaff) {
      out.value = detail::sum_2f1_series(a, b, c, z, ctl, &out.terms);
      out.path = Hyp2F1Path::Direct;
      return out;
    }
  }
  if (near_nonpositive_integer(c, kPoleTol))
    throw DegenerateDenominator("gauss_2f1: c is a non-positive integer; use the regularized form");
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw UnsupportedArgument("gauss_2f1: z on the branch cut [1, inf)");

  ComplexValue zp = pfaff_argument(z);
  double rd = std::abs(z), rp = std::abs(zp);
  if (path == Hyp2F1Path::Automatic) {
    if (std::min(rd, rp) > kRadius)
      throw UnsupportedArgument("gauss_2f1: argument outside the supported region");
    path = rd <= rp ? Hyp2F1Path::Direct : Hyp2F1Path::Pfaff;
  } else {
    double r = path == Hyp2F1Path::Direct ? rd : rp;
    if (!(r < 1.0)) throw UnsupportedArgument("gauss_2f1: forced path outside the unit disk");
  }

  out.path = path;
  if (path == Hyp2F1Path::Direct) {
    out.value = detail::sum_2f1_series(a, b, c, z, ctl, &out.terms);
    return out;
  }
  // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)). Prefer the
  // variant whose new numerator terminates.
  ComplexValue w = 1.0 - z;
  if (exact_nonpositive_integer(c - a) && !exact_nonpositive_integer(c - b)) {
    out.value = std::pow(w, -b) * detail::sum_2f1_series(c - a, b, c, zp, ctl, &out.terms);
  } else {
    out.value = std::pow(w, -a) * detail::sum_2f1_series(a, c - b, c, zp, ctl, &out.terms);
  }
  return out;
}

ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                       const SeriesControl& ctl) {
  return gauss_2f1_detailed(a, b, c, z, ctl).value;
}

ComplexValue gauss_2f1_regularized(ComplexValue a, ComplexValue b, ComplexValue c,
                                   ComplexValue z, const SeriesControl& ctl) {
  require_finite(c, "gauss_2f1_regularized");
  if (near_nonpositive_integer(c, kPoleTol)) {
    // Index shift: 2F1(a,b;1-r;z)/Gamma(1-r) = (a)_r (b)_r z^r / r! 2F1(a+r,b+r;r+1;z).
    int r = 1 - static_cast<int>(std::round(c.real()));
    ComplexValue pre = pochhammer(a, r) * pochhammer(b, r) * std::pow(z, r);
    for (int k = 2; k <= r; ++k) pre /= static_cast<double>(k);
    if (pre == 0.0) {
      require_finite(a, "gauss_2f1_regularized");
      require_finite(b, "gauss_2f1_regularized");
      require_finite(z, "gauss_2f1_regularized");
      return 0.0;
    }
    double rd = r;
    return pre * gauss_2f1(a + rd, b + rd, rd + 1.0, z, ctl);
  }
  return gauss_2f1(a, b, c, z, ctl) * rgamma(c);
}

ComplexValue hyp_3f2_terminating(int n, ComplexValue num2, ComplexValue num3, ComplexValue den1,
                                 ComplexValue den2) {
  if (n < 0) throw DomainError("hyp_3f2_terminating: n must be non-negative");
  require_finite(num2, "hyp_3f2_terminating");
  require_finite(num3, "hyp_3f2_terminating");
  require_finite(den1, "hyp_3f2_terminating");
  require_finite(den2, "hyp_3f2_terminating");
  detail::CompensatedSum sum;
  ComplexValue t = 1.0;
  sum.add(t);
  for (int j = 0; j < n; ++j) {
    double jj = j;
    ComplexValue num = (jj - n) * (num2 + jj) * (num3 + jj);
    if (num == 0.0) break;
    ComplexValue den = (den1 + jj) * (den2 + jj);
    if (std::abs(den1 + jj) < kPoleTol || std::abs(den2 + jj) < kPoleTol)
      throw DegenerateDenominator("hyp_3f2_terminating: denominator vanishes before termination");
    t *= num / (den * (jj + 1.0));
    sum.add(t);
  }
  return sum.value();
}

}  // namespace su11

#include "su11/measures.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace su11 {
namespace {

constexpr double kPi = std::numbers::pi;

double log_abs_gamma_pos(double x) { return std::lgamma(x); }

// log of the dmu^2 density in x (before the 1/(2 pi) and Gamma normalization).
double log_gamma_quotient(double x, const CDHParams& p) {
  const ComplexValue ix(0.0, x);
  ComplexValue s = log_gamma(p.a + ix) + log_gamma(p.b + ix) + log_gamma(p.c + ix) - log_gamma(2.0 * ix);
  return 2.0 * s.real();
}

bool same_location(double u, double v) { return std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(u)); }

}  // namespace

QuadratureSpec QuadratureSpec::defaults(double tail_tol) {
  return {(2.0 / kPi) * std::log(1.0 / tail_tol) + 10.0, 64, 16, tail_tol};
}

void QuadratureSpec::validate() const {
  if (!(x_max > 1.0) || panels <= 0 || nodes_per_panel <= 0 || !(tail_tol > 0.0))
    throw DomainError("QuadratureSpec: invalid fields");
}

CDHMeasure::CDHMeasure(const CDHParams& p, bool squared) : params_(p), squared_(squared) {
  log_norm_ = -std::log(2.0 * kPi) - log_abs_gamma_pos(p.a + p.b) - log_abs_gamma_pos(p.a + p.c) -
              log_abs_gamma_pos(p.b + p.c);
  masses_ = discrete_masses(p, squared);
}

double CDHMeasure::density(double x) const {
  if (x < 0.0) throw DomainError("cdh_density: x must be non-negative");
  if (x < 1e-10) return 0.0;
  double l = log_gamma_quotient(x, params_) + log_norm_;
  return std::exp(squared_ ? l : 0.5 * l);
}

double cdh_density(double x, const CDHMeasure& m) { return m.density(x); }

std::vector<MassPoint> discrete_masses(const CDHParams& p, bool squared) {
  std::vector<MassPoint> out;
  const double a = p.a, b = p.b, c = p.c;
  if (a >= 0.0) return out;
  const int K = static_cast<int>(std::ceil(-a)) - 1;  // largest k with a+k < 0
  double lw = std::lgamma(b - a) + std::lgamma(c - a) - std::lgamma(-2.0 * a) - std::lgamma(b + c);
  int sign = 1;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      const double km = k - 1.0;
      const double f[4] = {2.0 * a + km, a + 1.0 + km, a + b + km, a + c + km};
      const double g[4] = {a + km, a - b + 1.0 + km, a - c + 1.0 + km, km + 1.0};
      sign = -sign;
      for (int i = 0; i < 4; ++i) {
        if (g[i] == 0.0) throw DomainError("discrete_masses: vanishing denominator");
        if (f[i] == 0.0) return out;  // all further weights vanish
        if (f[i] < 0.0) sign = -sign;
        if (g[i] < 0.0) sign = -sign;
        lw += std::log(std::abs(f[i])) - std::log(std::abs(g[i]));
      }
    }
    if (sign < 0) throw DomainError("discrete_masses: negative mass weight");
    const double w = std::exp(squared ? lw : 0.5 * lw);
    out.push_back({-(a + k) * (a + k), w});
  }
  return out;
}

double nu_density(double x, const CDHParams& p_left, const CDHParams& p_right) {
  return CDHMeasure(p_left, false).density(x) * CDHMeasure(p_right, false).density(x);
}

std::vector<MassPoint> nu_masses(const CDHParams& p_left, const CDHParams& p_right) {
  std::vector<MassPoint> out;
  const auto left = discrete_masses(p_left, false);
  const auto right = discrete_masses(p_right, false);
  for (const MassPoint& l : left)
    for (const MassPoint& r : right)
      if (same_location(l.location, r.location)) out.push_back({l.location, l.weight * r.weight});
  return out;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n <= 0) throw DomainError("gauss_legendre: n must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussLegendreRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace su11

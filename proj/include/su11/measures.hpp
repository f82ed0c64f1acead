#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <type_traits>
#include <vector>

#include "su11/orthopoly.hpp"

namespace su11 {

struct MassPoint {
  double location;
  double weight;
};

struct QuadratureSpec {
  double x_max;
  int panels;
  int nodes_per_panel;
  double tail_tol;

  // x_max = (2/pi) ln(1/tail_tol) + 10, 64 panels of 16 nodes.
  static QuadratureSpec defaults(double tail_tol = 1e-14);
  void validate() const;
};

// dmu^2 (squared = true) or dmu (squared = false) for the CDH parameters.
class CDHMeasure {
 public:
  CDHMeasure(const CDHParams& p, bool squared);

  const CDHParams& params() const { return params_; }
  bool squared() const { return squared_; }
  const std::vector<MassPoint>& masses() const { return masses_; }
  // Continuous density with respect to dx, x = sqrt(y) >= 0.
  double density(double x) const;

 private:
  CDHParams params_;
  bool squared_;
  double log_norm_;
  std::vector<MassPoint> masses_;
};

double cdh_density(double x, const CDHMeasure& m);
std::vector<MassPoint> discrete_masses(const CDHParams& p, bool squared);

// Diagonal of the product of dmu(.;left) and dmu(.;right): product of the
// non-squared densities, and products of the non-squared weights at atoms
// the two measures share.
double nu_density(double x, const CDHParams& p_left, const CDHParams& p_right);
std::vector<MassPoint> nu_masses(const CDHParams& p_left, const CDHParams& p_right);

struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
// n-point rule on [-1, 1] (Golub-Welsch).
GaussLegendreRule gauss_legendre(int n);

template <typename T>
struct QuadratureResult {
  T value;
  double tail_estimate;
  QuadratureSpec spec;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
template <typename Derived>
double magnitude(const Eigen::MatrixBase<Derived>& v) {
  return v.norm();
}

template <typename F, std::enable_if_t<std::is_arithmetic_v<std::invoke_result_t<F&, double>>, int> = 0>
double evaluate(F& f, double y) {
  return f(y);
}
template <typename F, std::enable_if_t<!std::is_arithmetic_v<std::invoke_result_t<F&, double>>, int> = 0>
auto evaluate(F& f, double y) {
  return f(y).eval();
}

// Composite Gauss-Legendre in x over [0, x_max] of f(x^2) density(x), plus
// the atoms. The tail beyond x_max is estimated from the local decay rate
// of |f| density over the last unit interval.
template <typename F, typename Density>
auto integrate_core(F& f, const Density& density, const std::vector<MassPoint>& masses,
                    const QuadratureSpec& q) {
  q.validate();
  using T = decltype(evaluate(f, 0.0));
  const GaussLegendreRule rule = gauss_legendre(q.nodes_per_panel);
  const double h = q.x_max / q.panels;
  T acc = evaluate(f, 0.0) * 0.0;
  for (int panel = 0; panel < q.panels; ++panel) {
    const double mid = (panel + 0.5) * h;
    for (int i = 0; i < q.nodes_per_panel; ++i) {
      const double x = mid + 0.5 * h * rule.nodes(i);
      const double w = 0.5 * h * rule.weights(i) * density(x);
      if (w != 0.0) acc += w * evaluate(f, x * x);
    }
  }
  for (const MassPoint& mp : masses) acc += mp.weight * evaluate(f, mp.location);

  const double x1 = q.x_max, x0 = q.x_max - 1.0;
  const double g1 = density(x1) * magnitude(evaluate(f, x1 * x1));
  const double g0 = density(x0) * magnitude(evaluate(f, x0 * x0));
  double tail = 0.0;
  if (g1 > 0.0) {
    const double rate = (g0 > 0.0) ? std::log(g0 / g1) : 0.0;
    tail = rate > 0.0 ? g1 / rate : std::numeric_limits<double>::infinity();
  }
  return QuadratureResult<T>{acc, tail, q};
}

template <typename F, typename Density>
auto integrate_adaptive_core(F& f, const Density& density, const std::vector<MassPoint>& masses,
                             QuadratureSpec q) {
  for (int attempt = 0;; ++attempt) {
    auto r = integrate_core(f, density, masses, q);
    if (r.tail_estimate <= q.tail_tol) return r;
    if (attempt == 10) throw TailTooLarge("integrate_adaptive: tail above tail_tol after growing x_max");
    const double width = q.x_max / q.panels;
    q.x_max *= 1.5;
    q.panels = static_cast<int>(std::ceil(q.x_max / width));
  }
}

}  // namespace detail

// Integral of f(y) against m. f may return a double or any Eigen dense
// type; the result has the same type.
template <typename F>
auto integrate(F&& f, const CDHMeasure& m, const QuadratureSpec& q) {
  auto density = [&m](double x) { return m.density(x); };
  auto r = detail::integrate_core(f, density, m.masses(), q);
  if (r.tail_estimate > q.tail_tol) throw TailTooLarge("integrate: tail estimate exceeds tail_tol");
  return r.value;
}

// As integrate, but grows x_max (keeping the panel width) until the tail
// estimate is below tail_tol. Returns the value with the spec that was used.
template <typename F>
auto integrate_adaptive(F&& f, const CDHMeasure& m, const QuadratureSpec& q) {
  auto density = [&m](double x) { return m.density(x); };
  return detail::integrate_adaptive_core(f, density, m.masses(), q);
}

// Integral against dnu(.; left, right), adaptive in x_max.
template <typename F>
auto integrate_nu(F&& f, const CDHParams& p_left, const CDHParams& p_right, const QuadratureSpec& q) {
  const CDHMeasure left(p_left, false), right(p_right, false);
  auto density = [&](double x) { return left.density(x) * right.density(x); };
  return detail::integrate_adaptive_core(f, density, nu_masses(p_left, p_right), q);
}

}  // namespace su11

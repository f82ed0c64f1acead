#include "su11/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "su11/mfunctions.hpp"

namespace su11 {
namespace {

constexpr double kBoundaryMargin = 1e-9;

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TensorPair::TensorPair(double k1_, double k2_) : k1(k1_), k2(k2_) {
  if (!(k1 > 0.0) || !(k2 > 0.0)) throw DomainError("TensorPair: k1 and k2 must be positive");
  if (k1 > k2) throw DomainError("TensorPair: k1 <= k2 required");
  if (std::abs(k1 + k2 - 0.5) < kBoundaryMargin) throw BoundaryError("TensorPair: k1 + k2 = 1/2");
  for (int j = 0; k1 - k2 + 0.5 + j < 1.0; ++j)
    if (std::abs(k1 - k2 + 0.5 + j) < kBoundaryMargin) throw BoundaryError("TensorPair: k1 - k2 + 1/2 + j = 0");
}

DecompositionSpec decomposition_spec(const TensorPair& t) {
  DecompositionSpec s;
  const double d = t.k1 - t.k2;
  s.L = -static_cast<int>(std::floor(d));
  s.epsilon = d + s.L;
  if (s.epsilon >= 1.0) {  // rounding guard
    s.epsilon -= 1.0;
    s.L -= 1;
  }
  if (t.k1 + t.k2 < 0.5) {
    s.kind = DecompositionKind::WithComplementary;
    s.lambda = -t.k1 - t.k2;
  } else if (d < -0.5) {
    s.kind = DecompositionKind::WithDiscrete;
    int K = 0;
    while (d + 0.5 + (K + 1) < 0.0) ++K;
    s.K = K;
    for (int j = 0; j <= K; ++j) s.discrete_k.push_back(t.k2 - t.k1 - j);
  } else {
    s.kind = DecompositionKind::ContinuousOnly;
  }
  return s;
}

CoupledIndex::CoupledIndex(int n_, int p_) : n(n_), p(p_) {
  if (n < 0) throw DomainError("CoupledIndex: n must be non-negative");
}

CoupledIndex CoupledIndex::from_pair(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw DomainError("CoupledIndex: indices must be non-negative");
  return {std::min(n1, n2), n1 - n2};
}

std::pair<int, int> CoupledIndex::pair() const { return p <= 0 ? std::pair{n, n - p} : std::pair{n + p, n}; }

CDHParams cdh_params_for_sector(const TensorPair& t, int p) {
  const double b = t.k1 + t.k2 - 0.5;
  if (p <= 0) return {t.k1 - t.k2 + 0.5, b, t.k2 - t.k1 - p + 0.5};
  return {t.k2 - t.k1 + 0.5, b, t.k1 - t.k2 + p + 0.5};
}

TridiagonalOperator<double> casimir_on_Hp(const TensorPair& t, int p, int dim) {
  if (dim < 4) throw WindowError("casimir_on_Hp: dim must be at least 4");
  const double k1 = t.k1, k2 = t.k2;
  Eigen::VectorXd lo = Eigen::VectorXd::Zero(dim), di(dim), up = Eigen::VectorXd::Zero(dim);
  for (int n = 0; n < dim; ++n) {
    const auto [n1, n2] = CoupledIndex(n, p).pair();
    di(n) = k1 * (1.0 - k1) + k2 * (1.0 - k2) + 2.0 * (k1 + n1) * (k2 + n2);
    // The minus sign of the e_{n1+1} (x) e_{n2+1} term is absorbed by (-1)^n.
    up(n) = std::sqrt((n1 + 1.0) * (2.0 * k1 + n1) * (n2 + 1.0) * (2.0 * k2 + n2));
    if (n + 1 < dim) lo(n + 1) = up(n);
  }
  return {lo, di, up, 0};
}

Eigen::VectorXd casimir_spectrum(const TensorPair& t, int p, int dim) {
  return symmetric_eigenvalues(casimir_on_Hp(t, p, dim));
}

std::vector<double> predicted_discrete_points(const TensorPair& t, int p) {
  const DecompositionSpec s = decomposition_spec(t);
  std::vector<double> out;
  if (!s.K) return out;
  for (int j = std::max(p, 0); j <= *s.K; ++j) {
    const double a = t.k1 - t.k2 + 0.5 + j;
    out.push_back(0.25 - a * a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SpectrumComparison::ok() const {
  if (!(min_remaining >= 0.25 - tolerance)) return false;
  return std::all_of(deviation.begin(), deviation.end(), [&](double d) { return d <= tolerance; });
}

SpectrumComparison compare_spectrum(const TensorPair& t, int p, int dim, double tol) {
  SpectrumComparison r;
  r.eigenvalues = casimir_spectrum(t, p, dim);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  r.predicted = predicted_discrete_points(t, p);
  r.tolerance = tol;
  const int m = std::min<int>(static_cast<int>(r.predicted.size()), static_cast<int>(r.eigenvalues.size()));
  for (int i = 0; i < m; ++i) {
    r.nearest.push_back(r.eigenvalues(i));
    r.deviation.push_back(std::abs(r.eigenvalues(i) - r.predicted[i]));
  }
  for (std::size_t i = m; i < r.predicted.size(); ++i) {
    r.nearest.push_back(std::numeric_limits<double>::quiet_NaN());
    r.deviation.push_back(std::numeric_limits<double>::infinity());
  }
  r.min_remaining = m < r.eigenvalues.size() ? r.eigenvalues(m) : std::numeric_limits<double>::infinity();
  return r;
}

double clebsch_gordan(int n1, int n2, double y, const TensorPair& t) {
  const CoupledIndex ci = CoupledIndex::from_pair(n1, n2);
  return parity_sign(n2) * cdh_orthonormal(ci.n, y, cdh_params_for_sector(t, ci.p));
}

DirectIntegralVector decompose(const Eigen::MatrixXd& coeffs, const TensorPair& t) {
  // sector r -> coefficient on S^_n, already carrying (-1)^{n2}
  std::map<int, std::vector<double>> sectors;
  for (int n1 = 0; n1 < coeffs.rows(); ++n1)
    for (int n2 = 0; n2 < coeffs.cols(); ++n2) {
      const double a = coeffs(n1, n2);
      if (a == 0.0) continue;
      const CoupledIndex ci = CoupledIndex::from_pair(n1, n2);
      auto& v = sectors[ci.p];
      if (static_cast<int>(v.size()) <= ci.n) v.resize(ci.n + 1, 0.0);
      v[ci.n] += parity_sign(n2) * a;
    }
  DirectIntegralVector out{t, {}};
  for (auto& [r, v] : sectors) {
    const CDHParams P = cdh_params_for_sector(t, r);
    const Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    out.components.push_back({r, [P, a](double y) {
                                return a.dot(cdh_orthonormal_sequence(static_cast<int>(a.size()), y, P));
                              }});
  }
  return out;
}

DirectIntegralVector decompose(int n1, int n2, const TensorPair& t) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n1 + 1, n2 + 1);
  e(n1, n2) = 1.0;
  return decompose(e, t);
}

Eigen::MatrixXd recompose(const std::function<double(double)>& f, int r, const TensorPair& t, int dim,
                          const QuadratureSpec& q) {
  if (dim <= 0) throw WindowError("recompose: dim must be positive");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  const int count = dim - std::abs(r);
  if (count <= 0) return out;
  const CDHParams P = cdh_params_for_sector(t, r);
  const CDHMeasure mu2(P, true);
  auto integrand = [&](double y) -> Eigen::VectorXd { return f(y) * cdh_orthonormal_sequence(count, y, P); };
  const Eigen::VectorXd proj = integrate_adaptive(integrand, mu2, q).value;
  for (int n = 0; n < count; ++n) {
    const auto [n1, n2] = CoupledIndex(n, r).pair();
    out(n1, n2) = parity_sign(n2) * proj(n);
  }
  return out;
}

Eigen::MatrixXd recompose(const DirectIntegralVector& v, int dim, const QuadratureSpec& q) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& comp : v.components) out += recompose(comp.g, comp.r, v.pair, dim, q);
  return out;
}

double inner_product(const DirectIntegralVector& v, const DirectIntegralVector& w, const QuadratureSpec& q) {
  double acc = 0.0;
  for (const auto& a : v.components)
    for (const auto& b : w.components) {
      if (a.r != b.r) continue;
      const CDHParams P = cdh_params_for_sector(v.pair, a.r);
      acc += integrate_nu([&](double y) { return a.g(y) * b.g(y); }, P, P, q).value;
    }
  return acc;
}

double coupled_coefficient_integral(int n1, int n2, int x1, int x2, const TensorPair& t, double c,
                                    const QuadratureSpec& q) {
  const CoupledIndex cn = CoupledIndex::from_pair(n1, n2), cx = CoupledIndex::from_pair(x1, x2);
  const DecompositionSpec ds = decomposition_spec(t);
  const CDHParams Pn = cdh_params_for_sector(t, cn.p), Px = cdh_params_for_sector(t, cx.p);
  const int sign = parity_sign(n2 + x1);
  auto integrand = [&](double y) {
    const auto mp = MeixnerFunctionParams::from_spectral_point(y, ds.epsilon, c);
    return sign * cdh_orthonormal(cn.n, y, Pn) * cdh_orthonormal(cx.n, y, Px) *
           meixner_function_weighted(cn.p - ds.L, cx.p - ds.L, mp);
  };
  return integrate_nu(integrand, Pn, Px, q).value;
}

VerificationReport coupled_eigenvector_check(int x1, int x2, const TensorPair& t, double c, int dim,
                                             const QuadratureSpec& q, int n_max, double tol) {
  if (!(c > 0.0 && c <= 0.95)) throw DomainError("coupled_eigenvector_check: c must lie in (0, 0.95]");
  const SeriesLabel plus = SeriesLabel::positive(t.k1), minus = SeriesLabel::negative(t.k2);
  const XcEigenvector a = xc_eigenvector(plus, x1, c, dim, 0);
  const XcEigenvector b = xc_eigenvector(minus, x2, c, dim, 0);
  const double ev = (c - 1.0) * (x1 - x2 + t.k1 - t.k2) / std::sqrt(c);

  const Eigen::MatrixXd V = a.coefficients * b.coefficients.transpose();
  const Eigen::MatrixXd Xp = generator_matrix(plus, {GeneratorKind::Xc, c}, dim, 0).dense();
  const Eigen::MatrixXd Xm = generator_matrix(minus, {GeneratorKind::Xc, c}, dim, 0).dense();
  const Eigen::MatrixXd R = Xp * V + V * Xm.transpose() - ev * V;
  const int keep = dim - static_cast<int>(std::ceil(0.05 * dim));
  const double residual = R.topLeftCorner(keep, keep).norm() / V.norm();

  std::vector<ReportParam> params = {{"x1", double(x1)}, {"x2", double(x2)}, {"k1", t.k1},
                                     {"k2", t.k2},       {"c", c},           {"dim", double(dim)}};
  std::vector<VerificationReport> parts;
  parts.push_back(VerificationReport::compare("coupled_eigenvector", params, residual, 0.0, tol));
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2) {
      const double lhs = coupled_coefficient_integral(n1, n2, x1, x2, t, c, q);
      auto p = params;
      p.push_back({"n1", double(n1)});
      p.push_back({"n2", double(n2)});
      parts.push_back(VerificationReport::compare("coupled_eigenvector", p, lhs,
                                                  a.coefficients(n1) * b.coefficients(n2), tol));
    }
  return worst_of(parts, "coupled_eigenvector");
}

}  // namespace su11

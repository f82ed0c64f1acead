#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "su11/measures.hpp"
#include "su11/orthopoly.hpp"
#include "su11/report.hpp"
#include "su11/repn.hpp"

namespace su11 {

// The pair (k1, k2) of the tensor product of a positive and a negative
// discrete series representation, with k1 <= k2.
struct TensorPair {
  double k1;
  double k2;

  // Throws DomainError unless 0 < k1 <= k2, and BoundaryError within 1e-9
  // of k1 + k2 = 1/2 or of k1 - k2 + 1/2 + j = 0 (j = 0, 1, ...).
  TensorPair(double k1, double k2);
};

enum class DecompositionKind { ContinuousOnly, WithComplementary, WithDiscrete };

struct DecompositionSpec {
  double epsilon;
  int L;
  DecompositionKind kind;
  std::optional<double> lambda;   // WithComplementary: -k1-k2
  std::vector<double> discrete_k;  // WithDiscrete: k2-k1-j
  std::optional<int> K;            // largest K with k1-k2+1/2+K < 0
};

DecompositionSpec decomposition_spec(const TensorPair& t);

// f_n^p = (-1)^n e_{n1} (x) e_{n2}.
struct CoupledIndex {
  int n;
  int p;

  CoupledIndex(int n, int p);
  static CoupledIndex from_pair(int n1, int n2);
  std::pair<int, int> pair() const;
  int sign() const { return n % 2 == 0 ? 1 : -1; }
};

// CDH parameters of the sector H_p.
CDHParams cdh_params_for_sector(const TensorPair& t, int p);

// Delta(Omega) restricted to H_p in the basis f_0^p, ..., f_{dim-1}^p.
TridiagonalOperator<double> casimir_on_Hp(const TensorPair& t, int p, int dim);
Eigen::VectorXd casimir_spectrum(const TensorPair& t, int p, int dim);

// Predicted discrete Casimir eigenvalues 1/4 - (k1-k2+1/2+j)^2 on H_p, one
// for each j with max(p,0) <= j <= K; empty for ContinuousOnly and
// WithComplementary pairs and for p > K.
std::vector<double> predicted_discrete_points(const TensorPair& t, int p);

// Truncated Casimir spectrum against the predictions. The lowest
// eigenvalues are matched to the sorted predictions in order; every other
// eigenvalue must stay at or above 1/4 - tol.
struct SpectrumComparison {
  Eigen::VectorXd eigenvalues;  // ascending
  std::vector<double> predicted;
  std::vector<double> nearest;
  std::vector<double> deviation;
  double min_remaining;  // smallest eigenvalue not matched to a prediction
  double tolerance;

  bool ok() const;
};
SpectrumComparison compare_spectrum(const TensorPair& t, int p, int dim, double tol = 1e-6);

// (-1)^{n2} S^_n(y; n1-n2), n = min(n1, n2).
double clebsch_gordan(int n1, int n2, double y, const TensorPair& t);

// A vector of the direct integral, one component per sector r:
// V = sum_r int g_r(y) e_{r-L} dmu(y; r).
struct DirectIntegralComponent {
  int r;
  std::function<double(double)> g;
};

struct DirectIntegralVector {
  TensorPair pair;
  std::vector<DirectIntegralComponent> components;
};

// Image of sum a(n1,n2) e_{n1} (x) e_{n2} for a finite coefficient matrix a.
DirectIntegralVector decompose(const Eigen::MatrixXd& coeffs, const TensorPair& t);
DirectIntegralVector decompose(int n1, int n2, const TensorPair& t);

// Coefficients on e_{n1} (x) e_{n2}, 0 <= n1, n2 < dim, of int f e_{r-L} dmu(.;r).
Eigen::MatrixXd recompose(const std::function<double(double)>& f, int r, const TensorPair& t, int dim,
                          const QuadratureSpec& q = QuadratureSpec::defaults());
Eigen::MatrixXd recompose(const DirectIntegralVector& v, int dim,
                          const QuadratureSpec& q = QuadratureSpec::defaults());

// <V, W> through int g h dnu over the sectors both carry; distinct sectors
// are orthogonal.
double inner_product(const DirectIntegralVector& v, const DirectIntegralVector& w,
                     const QuadratureSpec& q = QuadratureSpec::defaults());

// Delta(X_c) residual on v+_{x1} (x) v-_{x2} (truncated to dim x dim), and
// the integral form of its coefficients for n1, n2 <= n_max.
VerificationReport coupled_eigenvector_check(int x1, int x2, const TensorPair& t, double c, int dim,
                                             const QuadratureSpec& q = QuadratureSpec::defaults(),
                                             int n_max = 3, double tol = 1e-7);

// The integral side of the coefficient <v+_{x1} (x) v-_{x2}, e_{n1} (x) e_{n2}>.
double coupled_coefficient_integral(int n1, int n2, int x1, int x2, const TensorPair& t, double c,
                                    const QuadratureSpec& q = QuadratureSpec::defaults());

}  // namespace su11

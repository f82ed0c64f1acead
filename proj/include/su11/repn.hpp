#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <variant>

#include "su11/errors.hpp"
#include "su11/report.hpp"

namespace su11 {

// ---------------------------------------------------------------------------
// Series labels

struct PositiveDiscrete {
  double k;
};
struct NegativeDiscrete {
  double k;
};
struct Principal {
  double rho;
  double epsilon;
};
struct Complementary {
  double lambda;
  double epsilon;
};

class SeriesLabel {
 public:
  using Variant = std::variant<PositiveDiscrete, NegativeDiscrete, Principal, Complementary>;

  static SeriesLabel positive(double k);
  static SeriesLabel negative(double k);
  static SeriesLabel principal(double rho, double epsilon);
  static SeriesLabel complementary(double lambda, double epsilon);

  const Variant& value() const { return v_; }
  bool is_discrete() const { return v_.index() < 2; }
  // k for the discrete series, epsilon otherwise.
  double shift() const;
  double casimir() const;

 private:
  explicit SeriesLabel(Variant v) : v_(v) {}
  Variant v_;
};

enum class GeneratorKind { H, B, C, Omega, Xc, Hc, Bc, Cc };

struct Generator {
  GeneratorKind kind;
  double c = 0.5;  // only read by the c-dependent kinds

  Generator(GeneratorKind kind, double c = 0.5);
};

// ---------------------------------------------------------------------------
// Tridiagonal operators

// Row-indexed: row i has lower[i] at column i-1, diag[i] at i and upper[i]
// at i+1. lower[0] and upper[dim-1] are zero. Basis position i stands for
// basis vector e_{i + basis_offset}.
template <typename Scalar>
class TridiagonalOperator {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  TridiagonalOperator(Vector lower, Vector diag, Vector upper, int basis_offset)
      : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)), offset_(basis_offset) {
    if (lower_.size() != diag_.size() || upper_.size() != diag_.size())
      throw DomainError("TridiagonalOperator: band lengths differ");
    if (diag_.size() > 0) {
      lower_(0) = Scalar(0);
      upper_(diag_.size() - 1) = Scalar(0);
    }
  }

  static TridiagonalOperator zero(int dim, int basis_offset) {
    return {Vector::Zero(dim), Vector::Zero(dim), Vector::Zero(dim), basis_offset};
  }

  int dim() const { return static_cast<int>(diag_.size()); }
  int basis_offset() const { return offset_; }
  const Vector& lower() const { return lower_; }
  const Vector& diag() const { return diag_; }
  const Vector& upper() const { return upper_; }

  Matrix dense() const {
    const int n = dim();
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = diag_(i);
      if (i > 0) m(i, i - 1) = lower_(i);
      if (i + 1 < n) m(i, i + 1) = upper_(i);
    }
    return m;
  }

  template <typename Derived>
  Vector apply(const Eigen::MatrixBase<Derived>& v) const {
    const int n = dim();
    if (v.size() != n) throw DomainError("TridiagonalOperator::apply: size mismatch");
    Vector out(n);
    for (int i = 0; i < n; ++i) {
      Scalar s = diag_(i) * v(i);
      if (i > 0) s += lower_(i) * v(i - 1);
      if (i + 1 < n) s += upper_(i) * v(i + 1);
      out(i) = s;
    }
    return out;
  }

  bool is_symmetric(double tol = 0.0) const {
    for (int i = 0; i + 1 < dim(); ++i)
      if (std::abs(upper_(i) - lower_(i + 1)) > tol * std::max(1.0, double(std::abs(upper_(i))))) return false;
    return true;
  }

  TridiagonalOperator operator+(const TridiagonalOperator& o) const {
    check_same_window(o);
    return {lower_ + o.lower_, diag_ + o.diag_, upper_ + o.upper_, offset_};
  }
  TridiagonalOperator operator-(const TridiagonalOperator& o) const {
    check_same_window(o);
    return {lower_ - o.lower_, diag_ - o.diag_, upper_ - o.upper_, offset_};
  }
  TridiagonalOperator operator-() const { return {-lower_, -diag_, -upper_, offset_}; }
  TridiagonalOperator operator*(Scalar s) const { return {lower_ * s, diag_ * s, upper_ * s, offset_}; }
  friend TridiagonalOperator operator*(Scalar s, const TridiagonalOperator& t) { return t * s; }
  TridiagonalOperator operator/(Scalar s) const { return {lower_ / s, diag_ / s, upper_ / s, offset_}; }
  TridiagonalOperator shifted(Scalar s) const {
    return {lower_, (diag_.array() + s).matrix(), upper_, offset_};
  }

 private:
  void check_same_window(const TridiagonalOperator& o) const {
    if (o.dim() != dim() || o.offset_ != offset_) throw WindowError("TridiagonalOperator: windows differ");
  }

  Vector lower_, diag_, upper_;
  int offset_;
};

template <typename Scalar>
auto dense(const TridiagonalOperator<Scalar>& t) {
  return t.dense();
}

template <typename Scalar, typename Derived>
auto apply(const TridiagonalOperator<Scalar>& t, const Eigen::MatrixBase<Derived>& v) {
  return t.apply(v);
}

// [A, B] as a dense (pentadiagonal) matrix.
template <typename Scalar>
auto commutator(const TridiagonalOperator<Scalar>& a, const TridiagonalOperator<Scalar>& b) {
  const auto da = a.dense();
  const auto db = b.dense();
  return (da * db - db * da).eval();
}

// Ascending eigenvalues of a real symmetric tridiagonal operator.
inline Eigen::VectorXd symmetric_eigenvalues(const TridiagonalOperator<double>& t) {
  if (!t.is_symmetric(1e-14)) throw DomainError("symmetric_eigenvalues: operator is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(t.diag(), t.lower().tail(std::max(t.dim() - 1, 0)), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// ---------------------------------------------------------------------------
// Realizations

// Default window offset: 0 for the discrete series, -dim/2 otherwise.
int default_offset(const SeriesLabel& s, int dim);

TridiagonalOperator<double> generator_matrix(const SeriesLabel& s, const Generator& g, int dim, int offset);
TridiagonalOperator<double> generator_matrix(const SeriesLabel& s, const Generator& g, int dim);

struct XcEigenvector {
  Eigen::VectorXd coefficients;
  double eigenvalue;
  int basis_offset;
};

// Unit eigenvector of X_c for the eigenvalue indexed by x, truncated to the
// window [offset, offset + dim).
XcEigenvector xc_eigenvector(const SeriesLabel& s, int x, double c, int dim, int offset);
XcEigenvector xc_eigenvector(const SeriesLabel& s, int x, double c, int dim);

// ||T v - lambda v|| / ||v|| with the outer 5% of rows at each truncation
// edge left out (only the top edge for one-sided bases).
double interior_residual(const TridiagonalOperator<double>& t, const Eigen::VectorXd& v, double lambda);

// Checks the actions of H_c, B_c, C_c on the X_c eigenvectors against the
// closed forms. x ranges over [0, x_span] (discrete) or [-x_span, x_span].
VerificationReport conjugated_action_check(const SeriesLabel& s, double c, int dim, int x_span = 20,
                                           double tol = 1e-8);

// Relative interior residuals of the su(1,1) relations for (H, B, C) and for
// (H_c, B_c, C_c), and of the Casimir in terms of the conjugated generators.
VerificationReport commutator_check(const SeriesLabel& s, int dim, double c = 0.3);

}  // namespace su11

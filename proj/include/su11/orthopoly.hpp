#pragma once

#include <Eigen/Core>

#include "su11/special.hpp"

namespace su11 {

struct MeixnerParams {
  double beta;
  double c;

  MeixnerParams(double beta, double c);
};

// Continuous dual Hahn parameters. The polynomials are symmetric in (a,b,c);
// the constructor stores them sorted so that a is the smallest.
struct CDHParams {
  double a;
  double b;
  double c;

  CDHParams(double a, double b, double c);
};

struct RecurrenceCoeffs {
  double a;
  double b;
};

double meixner(int n, double x, const MeixnerParams& p);
double meixner_orthonormal(int n, double x, const MeixnerParams& p);
double meixner_weight(int x, const MeixnerParams& p);

// S_n(y;a,b,c). The raw overload accepts any real parameters (the polynomial
// is entire in them) and is what the parameter-shift identities use.
double cdh(int n, double y, const CDHParams& p);
double cdh(int n, double y, double a, double b, double c);
double cdh_orthonormal(int n, double y, const CDHParams& p);
// Orthonormal values for degrees 0..count-1 at one point.
Eigen::VectorXd cdh_orthonormal_sequence(int count, double y, const CDHParams& p);
RecurrenceCoeffs cdh_recurrence_coeffs(int n, const CDHParams& p);

// phi_sigma^{(alpha,beta)}(t) = 2F1((alpha+beta+1-i sigma)/2, (alpha+beta+1+i sigma)/2; alpha+1; -t).
ComplexValue jacobi_function(double alpha, double beta, ComplexValue sigma, double t);
// Same divided by Gamma(alpha+1); finite when alpha+1 is a non-positive integer.
ComplexValue jacobi_function_regularized(double alpha, double beta, ComplexValue sigma, double t);

namespace detail {
// Returns m >= 0 with y = -(a+m)^2 to relative 1e-13, or -1.
int cdh_mass_index(double y, double a, int limit);
}  // namespace detail

}  // namespace su11

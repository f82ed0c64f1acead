#pragma once

#include "su11/special.hpp"

namespace su11 {

// Parameter regimes of the Meixner functions. The regime is always chosen
// by the caller; construction only checks that the parameters fit it.
enum class MeixnerRegime {
  Principal,      // lambda = -1/2 + i rho, rho >= 0
  Complementary,  // real lambda in the complementary interval
  Terminating,    // real lambda with eps-lambda or eps+lambda an integer
};

struct MeixnerFunctionParams {
  MeixnerRegime regime;
  ComplexValue lambda;
  double epsilon;
  double c;

  MeixnerFunctionParams(MeixnerRegime regime, ComplexValue lambda, double epsilon, double c);

  static MeixnerFunctionParams principal(double rho, double epsilon, double c);
  static MeixnerFunctionParams complementary(double lambda, double epsilon, double c);
  static MeixnerFunctionParams terminating(double lambda, double epsilon, double c);

  // Parameters attached to a spectral point y of the CDH measure, with
  // lambda = -1/2 + i sqrt(y). For y < 0 the equivalent real lambda
  // -1/2 + sqrt(-y) is used (the functions are invariant under
  // lambda -> -1-lambda); the regime is Complementary when it fits and
  // Terminating otherwise.
  static MeixnerFunctionParams from_spectral_point(double y, double epsilon, double c);
};

// m^_n(x; lambda, eps, c).
double meixner_function(int n, int x, const MeixnerFunctionParams& p);
// w~(x; lambda, eps, c).
double meixner_function_weight(int x, const MeixnerFunctionParams& p);
// m^_n(x) sqrt(w~(x)): the eigenvector coefficient. Finite in every regime,
// including terminating points where m^_n and w~ separately are not.
double meixner_function_weighted(int n, int x, const MeixnerFunctionParams& p);

// The regularized 2F1 factor 2F1(A,B;n+1-x;c/(c-1))/Gamma(n+1-x) of m^_n(x).
ComplexValue meixner_function_hypergeometric(int n, int x, const MeixnerFunctionParams& p);

}  // namespace su11

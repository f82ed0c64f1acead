#pragma once

#include <complex>
#include <limits>

#include "su11/errors.hpp"

namespace su11 {

using ComplexValue = std::complex<double>;

// Stopping rule for hypergeometric series. A series stops once
// `consecutive_small` successive terms are below rel_tol relative to the
// running sum; `max_terms` is a hard cap.
struct SeriesControl {
  int max_terms = 100000;
  double rel_tol = std::numeric_limits<double>::epsilon();
  int consecutive_small = 8;

  void validate() const;
};

enum class Hyp2F1Path { Automatic, Direct, Pfaff };

struct Hyp2F1Result {
  ComplexValue value;
  int terms = 0;
  Hyp2F1Path path = Hyp2F1Path::Direct;
};

// Throws DomainError when either component is NaN or infinite.
void require_finite(ComplexValue z, const char* what);

// True when z lies within tol of 0, -1, -2, ... on the real axis.
bool near_nonpositive_integer(ComplexValue z, double tol = 1e-12);

double sinpi(double x);
double cospi(double x);
ComplexValue sinpi(ComplexValue z);

// Principal branch of log Gamma for Re z > -20; further left the imaginary
// part is only defined modulo 2*pi (the reflection formula is used).
ComplexValue log_gamma(ComplexValue z);
ComplexValue gamma(ComplexValue z);
// 1/Gamma(z), entire; exact zeros at the non-positive integers.
ComplexValue rgamma(ComplexValue z);

// log|Gamma(x)| for real x; *sign receives the sign of Gamma(x).
double log_abs_gamma(double x, int* sign = nullptr);
double rgamma(double x);

ComplexValue pochhammer(ComplexValue z, int n);
double pochhammer(double x, int n);

ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                       const SeriesControl& ctl = {});
Hyp2F1Result gauss_2f1_detailed(ComplexValue a, ComplexValue b, ComplexValue c,
                                ComplexValue z, const SeriesControl& ctl = {},
                                Hyp2F1Path path = Hyp2F1Path::Automatic);

// 2F1(a,b;c;z)/Gamma(c), continuous in c through the non-positive integers.
ComplexValue gauss_2f1_regularized(ComplexValue a, ComplexValue b, ComplexValue c,
                                   ComplexValue z, const SeriesControl& ctl = {});

ComplexValue hyp_3f2_terminating(int n, ComplexValue num2, ComplexValue num3,
                                 ComplexValue den1, ComplexValue den2);

namespace detail {

// Plain power series of 2F1 at z with |z| < 1. The caller guarantees that c
// is not a pole. Returns the value and writes the number of terms used.
ComplexValue sum_2f1_series(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                            const SeriesControl& ctl, int* terms = nullptr);

// Gamma(u+m)/Gamma(u) for real u and integer m, finite whenever the ratio
// is, including the case where u and u+m are both poles.
double gamma_ratio(double u, int m);

// Neumaier summation on both components.
class CompensatedSum {
 public:
  void add(ComplexValue t);
  ComplexValue value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add1(double& s, double& comp, double t);
  double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

}  // namespace detail
}  // namespace su11

#include "su11/mfunctions.hpp"
#include "su11/orthopoly.hpp"
#include "test_util.hpp"

using namespace su11;

namespace {

const std::vector<MeixnerFunctionParams>& unitary_samples() {
  static const std::vector<MeixnerFunctionParams> v = {
      MeixnerFunctionParams::principal(0.7, 0.3, 0.4), MeixnerFunctionParams::principal(1.5, 0.75, 0.3),
      MeixnerFunctionParams::principal(0.2, 0.0, 0.6), MeixnerFunctionParams::complementary(-0.35, 0.2, 0.5),
      MeixnerFunctionParams::complementary(-0.45, 0.8, 0.35)};
  return v;
}

double recurrence_residual(int n, int x, const MeixnerFunctionParams& p) {
  const double eps = p.epsilon, c = p.c, rc = std::sqrt(c);
  const ComplexValue l = p.lambda;
  const double up = std::sqrt(((n + eps + l + 1.0) * (n + eps - l)).real());
  const double dn = std::sqrt(((n + eps + l) * (n + eps - l - 1.0)).real());
  const double lhs = (c - 1.0) * (eps + x) / rc * meixner_function(n, x, p);
  const double rhs = up * meixner_function(n + 1, x, p) - (1.0 + c) * (n + eps) / rc * meixner_function(n, x, p) +
                     dn * meixner_function(n - 1, x, p);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace

TEST_SUITE("mfunctions") {
  TEST_CASE("regime validation") {
    CHECK_THROWS_AS(MeixnerFunctionParams::principal(0.0, 0.5, 0.3), InvalidRegime);
    CHECK_THROWS_AS(MeixnerFunctionParams::principal(0.5, 1.0, 0.3), InvalidRegime);
    CHECK_THROWS_AS(MeixnerFunctionParams::principal(0.5, 0.2, 1.0), InvalidRegime);
    CHECK_THROWS_AS(MeixnerFunctionParams::complementary(-0.1, 0.2, 0.3), InvalidRegime);
    CHECK_THROWS_AS(MeixnerFunctionParams::terminating(-0.35, 0.2, 0.3), InvalidRegime);
    CHECK_NOTHROW(MeixnerFunctionParams::terminating(-1.5, 0.5, 0.3));
  }

  TEST_CASE("three-term recurrence in n") {
    for (const auto& p : unitary_samples())
      for (int n = -20; n <= 20; ++n)
        for (int x = -10; x <= 10; ++x) {
          INFO("n=" << n << " x=" << x << " lambda=" << p.lambda << " eps=" << p.epsilon);
          CHECK(recurrence_residual(n, x, p) < 1e-10);
        }
  }

  TEST_CASE("weight") {
    const auto p = MeixnerFunctionParams::principal(0.0, 0.3, 0.4);
    CHECK(meixner_function_weight(0, p) == doctest::Approx(std::pow(0.6, -0.6) / std::pow(std::tgamma(0.8), 2)));
    for (const auto& q : unitary_samples())
      for (int x = -15; x <= 15; ++x) {
        CHECK(meixner_function_weight(x, q) > 0.0);
        const double ratio = meixner_function_weight(x, q) / meixner_function_weight(x + 1, q);
        const double expect = q.c * ((q.epsilon + x - q.lambda) * (q.epsilon + x + q.lambda + 1.0)).real();
        CHECK(ratio == doctest::Approx(expect).epsilon(1e-12));
      }
  }

  TEST_CASE("orthonormality in x and in n") {
    for (const auto& p : unitary_samples()) {
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
          double s = 0.0;
          for (int x = -120; x <= 120; ++x) s += meixner_function_weighted(m, x, p) * meixner_function_weighted(n, x, p);
          CHECK(std::abs(s - (m == n ? 1.0 : 0.0)) < 1e-6);
        }
      for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
          double s = 0.0;
          for (int n = -120; n <= 120; ++n) s += meixner_function_weighted(n, x, p) * meixner_function_weighted(n, y, p);
          CHECK(std::abs(s - (x == y ? 1.0 : 0.0)) < 1e-6);
        }
    }
  }

  TEST_CASE("asymptotic ratio") {
    for (const auto& p : unitary_samples()) {
      const double rc = std::sqrt(p.c);
      for (int x : {-2, 0, 3}) {
        const double up = std::abs(meixner_function(201, x, p) / meixner_function(200, x, p));
        const double dn = std::abs(meixner_function(-201, x, p) / meixner_function(-200, x, p));
        CHECK(std::abs(up / rc - 1.0) < 0.05);
        CHECK(std::abs(dn / rc - 1.0) < 0.05);
      }
    }
  }

  TEST_CASE("2F1 factor is a Jacobi function") {
    const double rho = 0.9, eps = 0.35, c = 0.45;
    const auto p = MeixnerFunctionParams::principal(rho, eps, c);
    for (int n = -5; n <= 5; ++n)
      for (int x = -4; x <= 4; ++x) {
        const ComplexValue f = meixner_function_hypergeometric(n, x, p);
        const ComplexValue j = jacobi_function_regularized(n - x, n + x + 2.0 * eps, 2.0 * rho, c / (1.0 - c));
        INFO("n=" << n << " x=" << x);
        CHECK(test::close(f, j, 1e-10, 1e-300));
      }
  }

  TEST_CASE("terminating reduction to Meixner polynomials") {
    // At y = -(k1-k2+1/2+j)^2 the weighted Meixner function restricted to
    // x <= j-L is a signed weighted Meixner polynomial in j-x-L.
    const double c = 0.3;
    for (const double k2 : {1.0, 2.0}) {
      const double k1 = 0.2;
      const int L = static_cast<int>(std::ceil(k2 - k1));
      const double eps = k1 - k2 + L;
      for (int j = 0; k1 - k2 + 0.5 + j < 0.0; ++j) {
        const double y = -std::pow(k1 - k2 + 0.5 + j, 2);
        const auto p = MeixnerFunctionParams::from_spectral_point(y, eps, c);
        const MeixnerParams mp(2.0 * k2 - 2.0 * k1 - 2.0 * j, c);
        for (int r = -8; r <= 4; ++r)
          for (int x = -8; x <= j - L; ++x) {
            const int n = j - r - L, xm = j - x - L;
            const double sign = (r + L + j) % 2 == 0 ? 1.0 : -1.0;
            const double rhs = n < 0 ? 0.0 : meixner_orthonormal(n, xm, mp) * std::sqrt(meixner_weight(xm, mp));
            INFO("k2=" << k2 << " j=" << j << " r=" << r << " x=" << x);
            CHECK(std::abs(meixner_function_weighted(r, x, p) - sign * rhs) < 1e-12);
          }
      }
    }
  }
}

#include "su11/identities.hpp"
#include "su11/orthopoly.hpp"
#include "test_util.hpp"

using namespace su11;

TEST_SUITE("orthopoly") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(MeixnerParams(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(MeixnerParams(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(CDHParams(-0.5, 0.4, 1.0), DomainError);
    const CDHParams p(1.2, -0.3, 0.9);
    CHECK(p.a == -0.3);  // canonical order keeps the minimum first
  }

  TEST_CASE("meixner examples and self-duality") {
    const MeixnerParams p(1.0, 0.5);
    CHECK(meixner(0, 5, p) == 1.0);
    CHECK(meixner(3, 5, p) == doctest::Approx(meixner(5, 3, p)).epsilon(1e-14));
    const MeixnerParams q(1.7, 0.35);
    for (int n = 0; n <= 30; ++n)
      for (int x = 0; x <= 30; ++x) {
        const double a = meixner(n, x, q), b = meixner(x, n, q);
        INFO("n=" << n << " x=" << x);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(std::abs(b), 1.0));
      }
  }

  TEST_CASE("meixner orthonormality") {
    const MeixnerParams p(1.4, 0.4);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        double s = 0.0;
        for (int x = 0; x < 400; ++x) s += meixner_orthonormal(m, x, p) * meixner_orthonormal(n, x, p) * meixner_weight(x, p);
        CHECK(std::abs(s - (m == n ? 1.0 : 0.0)) < 1e-12);
      }
  }

  TEST_CASE("cdh examples") {
    CHECK(cdh(0, 1.7, 0.3, 0.4, 0.5) == 1.0);
    CHECK(cdh(1, 0.0, 0.5, 0.5, 0.5) == doctest::Approx(0.75));
    CHECK(cdh_orthonormal(1, 0.0, {0.5, 0.5, 0.5}) == doctest::Approx(-0.75));
    // symmetric in a, b, c
    for (int n : {2, 5, 9}) {
      const double ref = cdh(n, 1.3, 0.4, 0.9, 1.6);
      CHECK(cdh(n, 1.3, 0.9, 0.4, 1.6) == doctest::Approx(ref).epsilon(1e-13));
      CHECK(cdh(n, 1.3, 1.6, 0.9, 0.4) == doctest::Approx(ref).epsilon(1e-13));
    }
  }

  TEST_CASE("cdh leading coefficient") {
    // Finite differences of order n in y pick out n! times the leading coefficient.
    const CDHParams p(0.6, 0.8, 1.1);
    for (int n : {1, 2, 3, 4}) {
      double diff = 0.0, binom = 1.0;
      for (int j = 0; j <= n; ++j) {
        diff += ((n - j) % 2 == 0 ? 1.0 : -1.0) * binom * cdh_orthonormal(n, double(j), p);
        binom = binom * (n - j) / (j + 1.0);
      }
      const double lead = diff / std::tgamma(n + 1.0);
      const double expect = 1.0 / std::sqrt(std::tgamma(n + 1.0) * pochhammer(p.a + p.b, n) *
                                            pochhammer(p.a + p.c, n) * pochhammer(p.b + p.c, n));
      CHECK(lead == doctest::Approx(expect).epsilon(1e-9));
    }
  }

  TEST_CASE("cdh recurrence") {
    const auto r0 = cdh_recurrence_coeffs(0, {0.5, 0.5, 0.5});
    CHECK(r0.a == doctest::Approx(1.0));
    CHECK(r0.b == doctest::Approx(0.75));
    for (const CDHParams p : {CDHParams(0.7, 0.9, 1.2), CDHParams(-0.3, 1.0, 1.5), CDHParams(-1.3, 2.0, 2.2)})
      for (double y : {-0.09, 0.3, 2.5, 11.0})
        for (int n = 1; n < 25; ++n) {
          const auto r = cdh_recurrence_coeffs(n, p), rm = cdh_recurrence_coeffs(n - 1, p);
          CHECK(r.a > 0.0);
          const double lhs = y * cdh_orthonormal(n, y, p);
          const double rhs = r.a * cdh_orthonormal(n + 1, y, p) + r.b * cdh_orthonormal(n, y, p) +
                             rm.a * cdh_orthonormal(n - 1, y, p);
          INFO("n=" << n << " y=" << y << " a=" << p.a);
          CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
  }

  TEST_CASE("cdh sequence matches single evaluation") {
    for (const CDHParams p : {CDHParams(0.7, 0.9, 1.2), CDHParams(-1.3, 2.0, 2.2)})
      for (double y : {0.2, 4.0, -1.69, -0.09}) {
        const Eigen::VectorXd s = cdh_orthonormal_sequence(30, y, p);
        for (int n = 0; n < 30; ++n) CHECK(s(n) == doctest::Approx(cdh_orthonormal(n, y, p)).epsilon(1e-9));
      }
  }

  TEST_CASE("jacobi function") {
    CHECK(std::abs(jacobi_function(0.5, 1.5, 1.2, 0.0) - 1.0) < 1e-15);
    // alpha + 1 a non-positive integer only through the regularized form
    const ComplexValue r = jacobi_function_regularized(-2.0, 1.0, 0.8, 0.3);
    CHECK(std::isfinite(r.real()));
    CHECK(test::rel_diff(jacobi_function_regularized(0.5, 1.5, 1.2, 0.4) * std::tgamma(1.5),
                         jacobi_function(0.5, 1.5, 1.2, 0.4)) < 1e-13);
  }
}

#include "su11/coupling.hpp"
#include "test_util.hpp"

using namespace su11;

TEST_SUITE("coupling") {
  TEST_CASE("tensor pair validation") {
    CHECK_THROWS_AS(TensorPair(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(TensorPair(0.2, 0.3), BoundaryError);  // k1 + k2 = 1/2
    CHECK_THROWS_AS(TensorPair(0.2, 0.7), BoundaryError);  // k1 - k2 + 1/2 = 0
    CHECK_THROWS_AS(TensorPair(0.2, 1.7), BoundaryError);  // k1 - k2 + 1/2 + 1 = 0
    CHECK_NOTHROW(TensorPair(0.2, 1.0));
  }

  TEST_CASE("decomposition kinds") {
    const auto c = decomposition_spec(TensorPair(0.7, 0.9));
    CHECK(c.kind == DecompositionKind::ContinuousOnly);
    CHECK(c.L == 1);
    CHECK(c.epsilon == doctest::Approx(0.8));
    const auto q = decomposition_spec(TensorPair(0.1, 0.3));
    CHECK(q.kind == DecompositionKind::WithComplementary);
    CHECK(*q.lambda == doctest::Approx(-0.4));
    const auto d = decomposition_spec(TensorPair(0.2, 2.0));
    CHECK(d.kind == DecompositionKind::WithDiscrete);
    CHECK(*d.K == 1);
    REQUIRE(d.discrete_k.size() == 2);
    CHECK(d.discrete_k[0] == doctest::Approx(1.8));
    CHECK(d.discrete_k[1] == doctest::Approx(0.8));
  }

  TEST_CASE("coupled index") {
    CHECK(CoupledIndex::from_pair(3, 5).n == 3);
    CHECK(CoupledIndex::from_pair(3, 5).p == -2);
    CHECK(CoupledIndex(3, -2).pair() == std::pair{3, 5});
    CHECK(CoupledIndex(3, 2).pair() == std::pair{5, 3});
    CHECK(CoupledIndex(3, 2).sign() == -1);
  }

  TEST_CASE("Casimir on H_p is the CDH Jacobi matrix") {
    for (const TensorPair t : {TensorPair(0.2, 1.0), TensorPair(0.1, 0.3), TensorPair(0.7, 0.9)})
      for (int p = -3; p <= 3; ++p) {
        const auto omega = casimir_on_Hp(t, p, 30);
        const CDHParams P = cdh_params_for_sector(t, p);
        for (int n = 0; n < 29; ++n) {
          const auto r = cdh_recurrence_coeffs(n, P);
          // Casimir = 1/4 + y on the sector
          CHECK(omega.diag()(n) == doctest::Approx(0.25 + r.b).epsilon(1e-13));
          CHECK(omega.upper()(n) == doctest::Approx(r.a).epsilon(1e-13));
        }
      }
  }

  TEST_CASE("spectrum predictions") {
    CHECK(predicted_discrete_points(TensorPair(0.4, 0.45), 0).empty());
    const auto one = predicted_discrete_points(TensorPair(0.2, 1.0), 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(0.16));
    CHECK(predicted_discrete_points(TensorPair(0.2, 1.0), 1).empty());
    CHECK(predicted_discrete_points(TensorPair(0.2, 2.0), -2).size() == 2);
    CHECK(predicted_discrete_points(TensorPair(0.2, 2.0), 1).size() == 1);
    const auto cont = compare_spectrum(TensorPair(0.4, 0.45), 0, 400);
    CHECK(cont.ok());
    CHECK(cont.eigenvalues.minCoeff() >= 0.25 - 1e-6);
  }

  TEST_CASE("round trip and inner products") {
    const QuadratureSpec q = QuadratureSpec::defaults();
    for (const TensorPair t : {TensorPair(0.7, 0.9), TensorPair(0.1, 0.3), TensorPair(0.2, 1.0)}) {
      std::vector<DirectIntegralVector> basis;
      for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2) {
          const auto v = decompose(n1, n2, t);
          const Eigen::MatrixXd back = recompose(v, 6, q);
          Eigen::MatrixXd e = Eigen::MatrixXd::Zero(6, 6);
          e(n1, n2) = 1.0;
          CHECK((back - e).cwiseAbs().maxCoeff() < 1e-8);
          basis.push_back(v);
        }
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          CHECK(std::abs(inner_product(basis[i], basis[j], q) - (i == j ? 1.0 : 0.0)) < 1e-8);
    }
  }

  TEST_CASE("Clebsch-Gordan coefficients carry (-1)^{n2}") {
    const TensorPair t(0.7, 0.9);
    CHECK(clebsch_gordan(2, 1, 0.5, t) == doctest::Approx(-cdh_orthonormal(1, 0.5, cdh_params_for_sector(t, 1))));
    CHECK(clebsch_gordan(1, 2, 0.5, t) == doctest::Approx(cdh_orthonormal(1, 0.5, cdh_params_for_sector(t, -1))));
  }

  TEST_CASE("tensor product eigenvector") {
    const VerificationReport r = coupled_eigenvector_check(2, 1, TensorPair(0.7, 0.9), 0.3, 300);
    INFO("worst rel " << r.rel_err << " abs " << r.abs_err);
    CHECK(r.pass());
  }
}

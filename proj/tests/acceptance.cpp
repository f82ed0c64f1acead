// Acceptance criteria: one PASS/FAIL line each. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "harness.hpp"
#include "su11/coupling.hpp"
#include "su11/identities.hpp"
#include "su11/measures.hpp"
#include "su11/mfunctions.hpp"
#include "su11/orthopoly.hpp"
#include "su11/repn.hpp"
#include "su11/special.hpp"

using namespace su11;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int failures = 0;

void criterion(int number, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < time_limit;
  const bool ok = r.ok && in_time;
  failures += ok ? 0 : 1;
  std::printf("AC%-2d %s  %s: %s; %.2f s (limit %.0f s)%s\n", number, ok ? "PASS" : "FAIL", title, r.detail.c_str(),
              secs, time_limit, in_time ? "" : " TOO SLOW");
  std::fflush(stdout);
}

// Worst error of a grid, measured against the grid tolerance.
Outcome run_grid(const std::vector<IdentityCase>& cases, double tol) {
  int fail = 0, skip = 0;
  double worst = 0.0, worst_tail = 0.0;
  int max_terms = 0;
  for (const auto& c : cases) {
    const VerificationReport r = run_case(c);
    if (r.status == CaseStatus::Skipped) {
      ++skip;
      continue;
    }
    if (!r.pass()) ++fail;
    worst = std::max(worst, std::abs(r.rhs) < tol ? r.abs_err : r.rel_err);
    worst_tail = std::max(worst_tail, r.tail_estimate / std::max(std::abs(r.rhs), tol));
    max_terms = std::max(max_terms, r.terms_used);
  }
  std::ostringstream s;
  s << cases.size() << " cases, " << fail << " failed, " << skip << " skipped, worst " << sci(worst) << " (tol "
    << sci(tol) << ")";
  if (max_terms > 0) s << ", max terms " << max_terms << ", worst relative tail " << sci(worst_tail);
  return {fail == 0, s.str()};
}

std::vector<IdentityCase> grid(const std::string& id, double tol) {
  GridOptions opt;
  opt.tolerance = tol;
  return default_grid(id, opt);
}

}  // namespace

int main() {
  criterion(1, "CDH orthonormality under dmu^2, n,m <= 10", 10.0, [] {
    double worst = 0.0;
    for (const CDHParams p : {CDHParams(0.7, 0.9, 1.2), CDHParams(0.6, 0.6, 0.6), CDHParams(-0.3, 1.0, 1.5),
                              CDHParams(-1.3, 2.0, 2.2)}) {
      auto outer = [&](double y) -> Eigen::MatrixXd {
        const Eigen::VectorXd s = cdh_orthonormal_sequence(11, y, p);
        return s * s.transpose();
      };
      const Eigen::MatrixXd g = integrate_adaptive(outer, CDHMeasure(p, true), QuadratureSpec::defaults()).value;
      worst = std::max(worst, (g - Eigen::MatrixXd::Identity(11, 11)).cwiseAbs().maxCoeff());
    }
    return Outcome{worst < 1e-8, "4 parameter sets, max |G - I| " + sci(worst) + " (tol 1e-8)"};
  });

  criterion(2, "Casimir spectrum at dim=400 against the discrete points", 30.0, [] {
    bool ok = true;
    std::ostringstream s;
    double worst_dev = 0.0, min_rest = 1e300;
    for (const TensorPair t : {TensorPair(0.2, 1.0), TensorPair(0.2, 2.0)}) {
      const int K = *decomposition_spec(t).K;
      for (int p = -2; p <= K + 1; ++p) {
        const SpectrumComparison c = compare_spectrum(t, p, 400, 1e-6);
        const std::size_t expect = p > K ? 0 : p >= 0 ? K + 1 - p : K + 1;
        ok = ok && c.ok() && c.predicted.size() == expect;
        for (double d : c.deviation) worst_dev = std::max(worst_dev, d);
        min_rest = std::min(min_rest, c.min_remaining);
        if (!c.ok()) {
          s << " [k2=" << t.k2 << " p=" << p << ":";
          for (std::size_t i = 0; i < c.predicted.size(); ++i) s << " " << c.predicted[i] << " off by " << sci(c.deviation[i]);
          s << "]";
        }
      }
    }
    return Outcome{ok, "worst deviation " + sci(worst_dev) + ", min other eigenvalue " + std::to_string(min_rest) +
                           " (tol 1e-6)" + s.str()};
  });

  criterion(3, "contiguous relations, 200 random points each", 5.0, [] {
    std::vector<IdentityCase> all;
    for (const char* id : {"conti1", "conti1_companion", "2f1_contiguous"}) {
      auto g = grid(id, 1e-10);
      all.insert(all.end(), g.begin(), g.end());
    }
    return run_grid(all, 1e-10);
  });

  criterion(4, "bilinear generating function, 81-point grid, N <= 600", 60.0, [] {
    auto g = grid("bilinear_sum", 1e-8);
    for (auto& c : g) c.truncation = 600;
    return run_grid(g, 1e-8);
  });

  criterion(5, "Poisson kernel, 72-point grid and t=1, s=c degeneration", 60.0, [] {
    Outcome kernel = run_grid(grid("poisson_kernel", 1e-7), 1e-7);
    double worst = 0.0;
    for (auto [rho, eps] : {std::pair{0.5, 0.2}, {1.5, 0.7}})
      for (double c : {0.3, 0.6}) {
        const auto p = MeixnerFunctionParams::principal(rho, eps, c);
        for (int x = -3; x <= 3; ++x)
          for (int y = -3; y <= 3; ++y) {
            const ComplexValue k = poisson_kernel_sum(x, y, c, c, rho, eps, 1.0).value;
            const double v = k.real() * std::sqrt(meixner_function_weight(x, p) * meixner_function_weight(y, p));
            worst = std::max(worst, std::abs(v - (x == y ? 1.0 : 0.0)));
          }
      }
    return Outcome{kernel.ok && worst < 1e-6, kernel.detail + "; delta_xy worst " + sci(worst) + " (tol 1e-6)"};
  });

  criterion(6, "X_c eigenvector residuals, four series and the tensor product", 30.0, [] {
    double worst = 0.0;
    for (const SeriesLabel s : {SeriesLabel::positive(0.7), SeriesLabel::negative(1.3), SeriesLabel::principal(0.8, 0.3),
                                SeriesLabel::complementary(-0.3, 0.2)})
      for (int x = s.is_discrete() ? 0 : -5; x <= 5; ++x) {
        const XcEigenvector v = xc_eigenvector(s, x, 0.3, 400);
        const auto t = generator_matrix(s, {GeneratorKind::Xc, 0.3}, 400, v.basis_offset);
        worst = std::max(worst, interior_residual(t, v.coefficients, v.eigenvalue));
      }
    const VerificationReport tensor = coupled_eigenvector_check(2, 1, TensorPair(0.7, 0.9), 0.3, 300);
    return Outcome{worst < 1e-8 && tensor.pass(), "single series worst " + sci(worst) + " (tol 1e-8), tensor " +
                                                      to_string(tensor.status) + " worst " + sci(tensor.abs_err) +
                                                      " (tol 1e-7)"};
  });

  criterion(7, "round trip recompose(decompose) on e_n1 (x) e_n2, n1,n2 <= 4", 60.0, [] {
    double worst = 0.0;
    const QuadratureSpec q = QuadratureSpec::defaults();
    for (const TensorPair t : {TensorPair(0.7, 0.9), TensorPair(0.1, 0.3), TensorPair(0.2, 1.0)})
      for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2) {
          Eigen::MatrixXd e = Eigen::MatrixXd::Zero(8, 8);
          e(n1, n2) = 1.0;
          worst = std::max(worst, (recompose(decompose(n1, n2, t), 8, q) - e).cwiseAbs().maxCoeff());
        }
    return Outcome{worst < 1e-8, "3 pairs (one per decomposition kind), worst " + sci(worst) + " (tol 1e-8)"};
  });

  criterion(8, "generating functions to n=30", 5.0, [] { return run_grid(grid("generating_functions", 1e-10), 1e-10); });

  criterion(9, "kernel self-tests", 30.0, [] {
    int bad = 0, total = 0;
    auto check = [&](bool ok) {
      ++total;
      bad += ok ? 0 : 1;
    };
    const CounterRng rng(99);
    for (int i = 0, found = 0; found < 200; ++i) {
      const ComplexValue z(rng.uniform(1, 2 * i, -19.0, 19.0), rng.uniform(1, 2 * i + 1, -6.0, 6.0));
      if (std::abs(z - std::round(z.real())) <= 0.1 || std::abs(z) >= 20.0) continue;
      ++found;
      check(std::abs(gamma(z) * gamma(1.0 - z) * sinpi(z) - std::numbers::pi) / std::numbers::pi < 1e-12);
      check(std::abs(gamma(z + 1.0) - z * gamma(z)) / std::abs(gamma(z + 1.0)) < 1e-13);
    }
    for (int i = 0; i < 100; ++i) {
      const ComplexValue a(rng.uniform(2, 3 * i, -2, 2), rng.uniform(2, 3 * i + 1, -1, 1));
      const double b = rng.uniform(2, 3 * i + 2, -2, 2), c = rng.uniform(3, i, 0.5, 3.0), z = rng.uniform(4, i, -0.95, 0.0);
      const auto d = gauss_2f1_detailed(a, b, c, z, {}, Hyp2F1Path::Direct);
      const auto p = gauss_2f1_detailed(a, b, c, z, {}, Hyp2F1Path::Pfaff);
      check(std::abs(d.value - p.value) <= 1e-10 * std::abs(d.value));
    }
    for (int r = 1; r <= 3; ++r)
      for (int i = 0; i < 20; ++i) {
        const int k = 20 * r + i;
        const ComplexValue a(rng.uniform(6, 5 * k, -2, 2), rng.uniform(6, 5 * k + 1, -1, 1));
        const ComplexValue b(rng.uniform(6, 5 * k + 2, -2, 2), rng.uniform(6, 5 * k + 3, -1, 1));
        const ComplexValue t = std::polar(rng.uniform(6, 5 * k + 4, 0.25, 0.5), 0.37 * k);
        const ComplexValue shifted = pochhammer(a, r) * pochhammer(b, r) * std::pow(t, r) / std::tgamma(r + 1.0) *
                                     gauss_2f1(a + double(r), b + double(r), r + 1.0, t);
        // symmetric limit c -> 1-r of 2F1/Gamma(c) through the non-pole path
        const double d = 1e-7;
        const ComplexValue limit = 0.5 * (gauss_2f1(a, b, 1.0 - r + d, t) * rgamma(1.0 - r + d) +
                                          gauss_2f1(a, b, 1.0 - r - d, t) * rgamma(1.0 - r - d));
        check(std::abs(limit - shifted) <= 1e-10 * std::abs(shifted));
        check(std::abs(gauss_2f1_regularized(a, b, 1.0 - r, t) - shifted) <= 1e-10 * std::abs(shifted));
      }
    for (const CDHParams p : {CDHParams(0.7, 0.9, 1.2), CDHParams(-1.3, 2.0, 2.2)}) {
      const CDHMeasure sq(p, true), lin(p, false);
      for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform(5, i, 0.01, 12.0);
        check(std::abs(lin.density(x) * lin.density(x) - sq.density(x)) <= 1e-12 * sq.density(x));
      }
      for (std::size_t k = 0; k < sq.masses().size(); ++k)
        check(std::abs(lin.masses()[k].weight * lin.masses()[k].weight - sq.masses()[k].weight) <=
              1e-12 * sq.masses()[k].weight);
    }
    const MeixnerParams mp(1.7, 0.35);
    for (int n = 0; n <= 30; ++n)
      for (int x = 0; x <= 30; ++x) {
        const double u = meixner(n, x, mp), v = meixner(x, n, mp);
        check(std::abs(u - v) <= 1e-13 * std::max(1.0, std::abs(v)));
      }
    return Outcome{bad == 0, std::to_string(total) + " checks, " + std::to_string(bad) + " failed"};
  });

  criterion(10, "verify all determinism", 60.0, [] {
    std::ostringstream a, b, ea, eb;
    const int ca = harness::run_cli({"verify", "all", "--seed", "20240101"}, a, ea);
    const int cb = harness::run_cli({"verify", "all", "--seed", "20240101"}, b, eb);
    const bool same = a.str() == b.str() && ca == cb;
    return Outcome{same, std::string(same ? "byte-identical" : "reports differ") + ", " + std::to_string(a.str().size()) +
                             " bytes, exit " + std::to_string(ca)};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "su11/repn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "su11/mfunctions.hpp"
#include "su11/orthopoly.hpp"

namespace su11 {
namespace {

using Op = TridiagonalOperator<double>;

// H, B or C on the window, entries from the series' action formulas.
Op plain_generator(const SeriesLabel& s, GeneratorKind kind, int dim, int offset) {
  Eigen::VectorXd lo = Eigen::VectorXd::Zero(dim), di = Eigen::VectorXd::Zero(dim),
                  up = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    const double m = i + offset;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, PositiveDiscrete>) {
            const double k = v.k;
            if (kind == GeneratorKind::H) di(i) = 2.0 * (k + m);
            if (kind == GeneratorKind::B) lo(i) = std::sqrt(m * (2.0 * k + m - 1.0));
            if (kind == GeneratorKind::C) up(i) = -std::sqrt((m + 1.0) * (2.0 * k + m));
          } else if constexpr (std::is_same_v<T, NegativeDiscrete>) {
            const double k = v.k;
            if (kind == GeneratorKind::H) di(i) = -2.0 * (k + m);
            if (kind == GeneratorKind::B) up(i) = -std::sqrt((m + 1.0) * (2.0 * k + m));
            if (kind == GeneratorKind::C) lo(i) = std::sqrt(m * (2.0 * k + m - 1.0));
          } else if constexpr (std::is_same_v<T, Principal>) {
            const double e = v.epsilon, r2 = v.rho * v.rho;
            if (kind == GeneratorKind::H) di(i) = 2.0 * (e + m);
            if (kind == GeneratorKind::B) lo(i) = std::sqrt((m + e - 0.5) * (m + e - 0.5) + r2);
            if (kind == GeneratorKind::C) up(i) = -std::sqrt((m + e + 0.5) * (m + e + 0.5) + r2);
          } else {
            const double e = v.epsilon, l = v.lambda;
            if (kind == GeneratorKind::H) di(i) = 2.0 * (e + m);
            if (kind == GeneratorKind::B) lo(i) = std::sqrt((m + e + l) * (m + e - l - 1.0));
            if (kind == GeneratorKind::C) up(i) = -std::sqrt((m + e + l + 1.0) * (m + e - l));
          }
        },
        s.value());
  }
  return Op(lo, di, up, offset);
}

void check_c(double c, const char* what) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError(std::string(what) + ": c must lie in (0,1)");
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Interior block: rows and columns at least 2 away from each edge.
Eigen::MatrixXd interior(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (n <= 4) throw WindowError("commutator_check: dim must exceed 4");
  return m.block(2, 2, n - 4, n - 4);
}

std::vector<ReportParam> series_params(const SeriesLabel& s) {
  return std::visit(
      [](const auto& v) -> std::vector<ReportParam> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PositiveDiscrete>) return {{"series", 0.0}, {"k", v.k}};
        else if constexpr (std::is_same_v<T, NegativeDiscrete>) return {{"series", 1.0}, {"k", v.k}};
        else if constexpr (std::is_same_v<T, Principal>)
          return {{"series", 2.0}, {"rho", v.rho}, {"epsilon", v.epsilon}};
        else return {{"series", 3.0}, {"lambda", v.lambda}, {"epsilon", v.epsilon}};
      },
      s.value());
}

}  // namespace

SeriesLabel SeriesLabel::positive(double k) {
  if (!(k > 0.0)) throw DomainError("SeriesLabel: k must be positive");
  return SeriesLabel(PositiveDiscrete{k});
}

SeriesLabel SeriesLabel::negative(double k) {
  if (!(k > 0.0)) throw DomainError("SeriesLabel: k must be positive");
  return SeriesLabel(NegativeDiscrete{k});
}

SeriesLabel SeriesLabel::principal(double rho, double epsilon) {
  if (!(rho >= 0.0) || !(epsilon >= 0.0 && epsilon < 1.0))
    throw DomainError("SeriesLabel: principal series needs rho >= 0, epsilon in [0,1)");
  if (rho == 0.0 && epsilon == 0.5) throw DomainError("SeriesLabel: (rho, epsilon) = (0, 1/2) is reducible");
  return SeriesLabel(Principal{rho, epsilon});
}

SeriesLabel SeriesLabel::complementary(double lambda, double epsilon) {
  const bool low = epsilon >= 0.0 && epsilon < 0.5 && lambda > -0.5 && lambda < -epsilon;
  const bool high = epsilon > 0.5 && epsilon < 1.0 && lambda > -0.5 && lambda < epsilon - 1.0;
  if (!low && !high) throw DomainError("SeriesLabel: (lambda, epsilon) outside the complementary range");
  return SeriesLabel(Complementary{lambda, epsilon});
}

double SeriesLabel::shift() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PositiveDiscrete> || std::is_same_v<T, NegativeDiscrete>) return v.k;
        else return v.epsilon;
      },
      v_);
}

double SeriesLabel::casimir() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PositiveDiscrete> || std::is_same_v<T, NegativeDiscrete>)
          return v.k * (1.0 - v.k);
        else if constexpr (std::is_same_v<T, Principal>) return v.rho * v.rho + 0.25;
        else return -v.lambda * (1.0 + v.lambda);
      },
      v_);
}

Generator::Generator(GeneratorKind kind_, double c_) : kind(kind_), c(c_) {
  const bool needs_c = kind == GeneratorKind::Xc || kind == GeneratorKind::Hc || kind == GeneratorKind::Bc ||
                       kind == GeneratorKind::Cc;
  if (needs_c) check_c(c, "Generator");
}

int default_offset(const SeriesLabel& s, int dim) { return s.is_discrete() ? 0 : -dim / 2; }

TridiagonalOperator<double> generator_matrix(const SeriesLabel& s, const Generator& g, int dim, int offset) {
  if (dim <= 0) throw WindowError("generator_matrix: dim must be positive");
  if (s.is_discrete() && offset != 0) throw WindowError("generator_matrix: discrete series need offset 0");

  auto H = [&] { return plain_generator(s, GeneratorKind::H, dim, offset); };
  auto B = [&] { return plain_generator(s, GeneratorKind::B, dim, offset); };
  auto C = [&] { return plain_generator(s, GeneratorKind::C, dim, offset); };
  const double c = g.c, rc = std::sqrt(c);

  switch (g.kind) {
    case GeneratorKind::H:
    case GeneratorKind::B:
    case GeneratorKind::C:
      return plain_generator(s, g.kind, dim, offset);
    case GeneratorKind::Omega:
      return Op::zero(dim, offset).shifted(s.casimir());
    case GeneratorKind::Xc:
      return H() * (-(1.0 + c) / (2.0 * rc)) + B() - C();
    case GeneratorKind::Hc:
      return (H() * (1.0 + c) - B() * (2.0 * rc) + C() * (2.0 * rc)) / (1.0 - c);
    case GeneratorKind::Bc:
      return (H() * (-rc) + B() - C() * c) / (1.0 - c);
    case GeneratorKind::Cc:
      return (H() * rc - B() * c + C()) / (1.0 - c);
  }
  throw DomainError("generator_matrix: unknown generator");
}

TridiagonalOperator<double> generator_matrix(const SeriesLabel& s, const Generator& g, int dim) {
  return generator_matrix(s, g, dim, default_offset(s, dim));
}

XcEigenvector xc_eigenvector(const SeriesLabel& s, int x, double c, int dim, int offset) {
  if (!(c > 0.0 && c <= 0.95)) throw DomainError("xc_eigenvector: c must lie in (0, 0.95]");
  if (dim <= 0) throw WindowError("xc_eigenvector: dim must be positive");
  if (s.is_discrete() && offset != 0) throw WindowError("xc_eigenvector: discrete series need offset 0");
  if (s.is_discrete() && x < 0) throw DomainError("xc_eigenvector: x must be non-negative for discrete series");

  XcEigenvector out{Eigen::VectorXd(dim), 0.0, offset};
  const double rc = std::sqrt(c);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PositiveDiscrete> || std::is_same_v<T, NegativeDiscrete>) {
          const MeixnerParams mp(2.0 * v.k, c);
          const double sw = std::sqrt(meixner_weight(x, mp));
          for (int i = 0; i < dim; ++i) out.coefficients(i) = meixner_orthonormal(i, x, mp) * sw;
          const double ev = (c - 1.0) * (x + v.k) / rc;
          out.eigenvalue = std::is_same_v<T, PositiveDiscrete> ? ev : -ev;
        } else {
          const MeixnerFunctionParams mp = [&] {
            if constexpr (std::is_same_v<T, Principal>)
              return MeixnerFunctionParams::principal(v.rho, v.epsilon, c);
            else return MeixnerFunctionParams::complementary(v.lambda, v.epsilon, c);
          }();
          for (int i = 0; i < dim; ++i) out.coefficients(i) = meixner_function_weighted(i + offset, x, mp);
          out.eigenvalue = (c - 1.0) * (v.epsilon + x) / rc;
        }
      },
      s.value());
  return out;
}

XcEigenvector xc_eigenvector(const SeriesLabel& s, int x, double c, int dim) {
  return xc_eigenvector(s, x, c, dim, default_offset(s, dim));
}

double interior_residual(const TridiagonalOperator<double>& t, const Eigen::VectorXd& v, double lambda) {
  const int n = t.dim();
  const int cut = static_cast<int>(std::ceil(0.05 * n));
  const int first = t.basis_offset() < 0 ? cut : 0;
  const int last = n - cut;  // exclusive
  if (last <= first) throw WindowError("interior_residual: window too small");
  const Eigen::VectorXd r = t.apply(v) - lambda * v;
  return r.segment(first, last - first).norm() / v.norm();
}

VerificationReport conjugated_action_check(const SeriesLabel& s, double c, int dim, int x_span, double tol) {
  const int offset = default_offset(s, dim);
  const Op hc = generator_matrix(s, {GeneratorKind::Hc, c}, dim, offset);
  const Op bc = generator_matrix(s, {GeneratorKind::Bc, c}, dim, offset);
  const Op cc = generator_matrix(s, {GeneratorKind::Cc, c}, dim, offset);
  const int n = dim;
  const int cut = static_cast<int>(std::ceil(0.05 * n));
  const int first = offset < 0 ? cut : 0, last = n - cut;

  // Expected action coefficients: H_c v_x = h v_x, B_c v_x = beta v_{x+db},
  // C_c v_x = gamma v_{x+dc}.
  struct Action {
    double h, beta, gamma;
    int db, dc;
  };
  auto action = [&](int x) -> Action {
    return std::visit(
        [&](const auto& v) -> Action {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, PositiveDiscrete>) {
            const double k = v.k;
            return {2.0 * (k + x), -std::sqrt((x + 1.0) * (2.0 * k + x)), std::sqrt(x * (2.0 * k + x - 1.0)), 1, -1};
          } else if constexpr (std::is_same_v<T, NegativeDiscrete>) {
            const double k = v.k;
            return {-2.0 * (k + x), std::sqrt(x * (2.0 * k + x - 1.0)), -std::sqrt((x + 1.0) * (2.0 * k + x)), -1, 1};
          } else if constexpr (std::is_same_v<T, Principal>) {
            const double e = v.epsilon, r2 = v.rho * v.rho;
            return {2.0 * (e + x), std::sqrt((x + e + 0.5) * (x + e + 0.5) + r2),
                    -std::sqrt((x + e - 0.5) * (x + e - 0.5) + r2), 1, -1};
          } else {
            const double e = v.epsilon, l = v.lambda;
            return {2.0 * (e + x), std::sqrt((x + e - l) * (x + e + l + 1.0)),
                    -std::sqrt((x + e + l) * (x + e - l - 1.0)), 1, -1};
          }
        },
        s.value());
  };

  const int x_lo = s.is_discrete() ? 0 : -x_span;
  double worst = 0.0;
  int count = 0;
  for (int x = x_lo; x <= x_span; ++x) {
    const Eigen::VectorXd vx = xc_eigenvector(s, x, c, dim, offset).coefficients;
    const Action a = action(x);
    auto neighbour = [&](int d) -> Eigen::VectorXd {
      if (s.is_discrete() && x + d < 0) return Eigen::VectorXd::Zero(n);
      return xc_eigenvector(s, x + d, c, dim, offset).coefficients;
    };
    const Eigen::VectorXd r_h = hc.apply(vx) - a.h * vx;
    const Eigen::VectorXd r_b = bc.apply(vx) - a.beta * neighbour(a.db);
    const Eigen::VectorXd r_c = cc.apply(vx) - a.gamma * neighbour(a.dc);
    for (const Eigen::VectorXd* r : {&r_h, &r_b, &r_c})
      worst = std::max(worst, r->segment(first, last - first).norm() / vx.norm());
    ++count;
  }
  auto params = series_params(s);
  params.push_back({"c", c});
  params.push_back({"dim", static_cast<double>(dim)});
  return VerificationReport::compare("conjugated_action", params, worst, 0.0, tol, count);
}

VerificationReport commutator_check(const SeriesLabel& s, int dim, double c) {
  const int offset = default_offset(s, dim);
  auto mat = [&](GeneratorKind k) { return generator_matrix(s, {k, c}, dim, offset); };
  double worst = 0.0;
  auto relation = [&](const Op& a, const Op& b, const Eigen::MatrixXd& expected) {
    const Eigen::MatrixXd da = a.dense(), db = b.dense();
    const double scale = std::max(1.0, max_abs(da) * max_abs(db));
    worst = std::max(worst, max_abs(interior(commutator(a, b) - expected)) / scale);
  };
  for (bool conj : {false, true}) {
    const Op h = mat(conj ? GeneratorKind::Hc : GeneratorKind::H);
    const Op b = mat(conj ? GeneratorKind::Bc : GeneratorKind::B);
    const Op cm = mat(conj ? GeneratorKind::Cc : GeneratorKind::C);
    relation(h, b, 2.0 * b.dense());
    relation(h, cm, -2.0 * cm.dense());
    relation(b, cm, h.dense());
    if (conj) {
      const Eigen::MatrixXd dh = h.dense();
      const Eigen::MatrixXd omega = -0.25 * (dh * dh + 2.0 * dh + 4.0 * cm.dense() * b.dense());
      const Eigen::MatrixXd expect = s.casimir() * Eigen::MatrixXd::Identity(dim, dim);
      worst = std::max(worst, max_abs(interior(omega - expect)) / std::max(1.0, max_abs(dh) * max_abs(dh)));
    }
  }
  auto params = series_params(s);
  params.push_back({"c", c});
  params.push_back({"dim", static_cast<double>(dim)});
  // Plain relations close to rounding; the conjugated ones lose a few digits
  // to the 1/(1-c) mixing, hence one shared relative bound of 1e-12.
  return VerificationReport::compare("commutator", params, worst, 0.0, 1e-12);
}

}  // namespace su11

#include <doctest.h>

#include <random>

#include "bordereig/error.hpp"
#include "bordereig/system.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bordereig;
using namespace std::complex_literals;

namespace {

Point pt(std::initializer_list<Scalar> xs) {
  Point z(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) z[i++] = x;
  return z;
}

}  // namespace

TEST_CASE("monomial_eval") {
  CHECK(monomial_eval(MultiIndex{0, 0}, pt({3.0, -7.0})) == Scalar(1.0));
  CHECK(monomial_eval(MultiIndex{2, 1}, pt({2.0, 3.0})) == Scalar(12.0));
  CHECK(monomial_eval(MultiIndex{1, 1}, pt({1i, 1i})) == Scalar(-1.0));
  CHECK(monomial_eval(MultiIndex{0, 2}, pt({0.0, 0.0})) == Scalar(0.0));
  CHECK(monomial_eval(MultiIndex{0, 0}, pt({0.0, 0.0})) == Scalar(1.0));
  CHECK_THROWS_AS(monomial_eval(MultiIndex{1}, pt({1.0, 2.0})), InvalidArgumentError);
}

TEST_CASE("eval_relation") {
  const auto x2_eq_1 = fixtures::univariate({1.0, 0.0});
  CHECK(eval_relation(x2_eq_1, MultiIndex{2}, pt({1.0})) == Scalar(0.0));
  CHECK(eval_relation(x2_eq_1, MultiIndex{2}, pt({2.0})) == Scalar(3.0));
  CHECK_THROWS_AS(eval_relation(x2_eq_1, MultiIndex{1}, pt({2.0})), UnknownRelationError);
  CHECK_THROWS_AS(eval_relation(x2_eq_1, MultiIndex{3}, pt({2.0})), UnknownRelationError);

  const auto idem = fixtures::idempotent();
  for (const auto& alpha : idem.border().members()) {
    CHECK(eval_relation(idem, alpha, pt({1.0, 0.0})) == Scalar(0.0));
    CHECK(eval_relation(idem, alpha, pt({0.0, 1.0})) == Scalar(0.0));
    CHECK(eval_relation(idem, alpha, pt({0.0, 0.0})) == Scalar(0.0));
  }
  // xy at (2, 3) is 6, relation says 0.
  CHECK(eval_relation(idem, MultiIndex{1, 1}, pt({2.0, 3.0})) == Scalar(6.0));
}

TEST_CASE("residual") {
  const auto x2_eq_1 = fixtures::univariate({1.0, 0.0});
  CHECK(residual(x2_eq_1, pt({1.0})) <= 1e-12);
  CHECK(residual(x2_eq_1, pt({-1.0})) <= 1e-12);
  CHECK(residual(x2_eq_1, pt({0.0})) == doctest::Approx(1.0));
  // |4 - 1| / max(1, |1|, |2|) = 1.5
  CHECK(residual(x2_eq_1, pt({2.0})) == doctest::Approx(1.5));
  CHECK(residual(x2_eq_1, pt({0.3 + 0.2i})) > 0.0);
}

TEST_CASE("residual vanishes exactly where every relation does") {
  const auto sys = fixtures::idempotent();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const Point z = pt({Scalar(u(rng), u(rng)), Scalar(u(rng), u(rng))});
    const double r = residual(sys, z);
    double worst = 0.0;
    for (const auto& alpha : sys.border().members()) worst = std::max(worst, std::abs(eval_relation(sys, alpha, z)));
    const double scale = std::max(1.0, evaluation_vector(sys.basis(), z).cwiseAbs().maxCoeff());
    CHECK(r == doctest::Approx(worst / scale).epsilon(1e-14));
    CHECK(r > 0.0);
  }
}

TEST_CASE("univariate relation agrees with Horner") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int m = 1; m <= 6; ++m) {
    std::vector<Scalar> a;
    for (int j = 0; j <= m; ++j) a.emplace_back(u(rng), u(rng));
    const auto sys = fixtures::univariate(a);
    // x^{m+1} - sum a_j x^j as a coefficient list
    oracle::Poly p;
    for (const auto& c : a) p.push_back(-c);
    p.push_back(1.0);
    for (int t = 0; t < 10; ++t) {
      const Scalar x(u(rng), u(rng));
      const Scalar got = eval_relation(sys, MultiIndex{m + 1}, pt({x}));
      const Scalar want = oracle::horner(p, x);
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("jacobian matches finite differences") {
  const auto sys = fixtures::unit_square_grid();
  const Point z = pt({0.3 - 0.1i, -0.7 + 0.4i});
  const Eigen::MatrixXcd jac = relation_jacobian(sys, z);
  const double h = 1e-6;
  for (int j = 0; j < 2; ++j) {
    Point zp = z, zm = z;
    zp[j] += h;
    zm[j] -= h;
    const Eigen::VectorXcd fd = (relation_values(sys, zp) - relation_values(sys, zm)) / (2 * h);
    CHECK((fd - jac.col(j)).norm() <= 1e-8);
  }
}

TEST_CASE("system construction rejects bad shapes") {
  const auto lower = total_degree_set(2, 1);
  CHECK_THROWS_AS(BorderSystem(lower, Eigen::MatrixXcd::Zero(3, 2)), InvalidArgumentError);
  CHECK_THROWS_AS(BorderSystem(lower, Eigen::MatrixXcd::Zero(2, 3)), InvalidArgumentError);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(3, 3);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(BorderSystem(lower, bad), InvalidArgumentError);
}

#include "bordereig/system.hpp"

#include <algorithm>
#include <cmath>

#include "bordereig/error.hpp"

namespace bordereig {

namespace {

void check_point(const BorderSystem& sys, const Point& z) {
  if (z.size() != sys.dimension()) {
    throw InvalidArgumentError("point has " + std::to_string(z.size()) +
                               " coordinates, system has dimension " +
                               std::to_string(sys.dimension()));
  }
}

}  // namespace

BorderSystem::BorderSystem(LowerSet basis, Eigen::MatrixXcd coefficients, std::size_t cap)
    : basis_(std::move(basis)),
      border_(bordereig::border(basis_, cap)),
      coefficients_(std::move(coefficients)) {
  const auto rows = static_cast<Eigen::Index>(border_.size());
  const auto cols = static_cast<Eigen::Index>(basis_.size());
  if (coefficients_.rows() != rows || coefficients_.cols() != cols) {
    throw InvalidArgumentError("coefficient matrix is " + std::to_string(coefficients_.rows()) +
                               "x" + std::to_string(coefficients_.cols()) + ", expected " +
                               std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!coefficients_.allFinite()) throw InvalidArgumentError("non-finite coefficient");
}

bool operator==(const BorderSystem& a, const BorderSystem& b) {
  return a.basis_ == b.basis_ && a.coefficients_.rows() == b.coefficients_.rows() &&
         a.coefficients_.cols() == b.coefficients_.cols() &&
         (a.coefficients_.array() == b.coefficients_.array()).all();
}

Scalar monomial_eval(const MultiIndex& beta, const Point& z) {
  if (z.size() != beta.dimension()) {
    throw InvalidArgumentError("monomial " + beta.to_string() + " evaluated at a point of " +
                               std::to_string(z.size()) + " coordinates");
  }
  Scalar out(1.0, 0.0);
  for (int i = 0; i < beta.dimension(); ++i) {
    for (int p = 0; p < beta[i]; ++p) out *= z[i];
  }
  return out;
}

Eigen::VectorXcd evaluation_vector(const LowerSet& basis, const Point& z) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = monomial_eval(basis[k], z);
  }
  return v;
}

Scalar eval_relation(const BorderSystem& sys, const MultiIndex& alpha, const Point& z) {
  check_point(sys, z);
  const auto k = sys.relation_index(alpha);
  if (!k) throw UnknownRelationError("no relation for " + alpha.to_string());
  const Eigen::VectorXcd v = evaluation_vector(sys.basis(), z);
  const Scalar combination =
      sys.coefficients().row(static_cast<Eigen::Index>(*k)).transpose().cwiseProduct(v).sum();
  return monomial_eval(alpha, z) - combination;
}

Eigen::VectorXcd relation_values(const BorderSystem& sys, const Point& z) {
  check_point(sys, z);
  const Eigen::VectorXcd v = evaluation_vector(sys.basis(), z);
  Eigen::VectorXcd lead(static_cast<Eigen::Index>(sys.border().size()));
  for (std::size_t k = 0; k < sys.border().size(); ++k) {
    lead[static_cast<Eigen::Index>(k)] = monomial_eval(sys.border()[k], z);
  }
  return lead - sys.coefficients() * v;
}

Eigen::MatrixXcd relation_jacobian(const BorderSystem& sys, const Point& z) {
  check_point(sys, z);
  const int n = sys.dimension();
  const auto& basis = sys.basis();
  const auto& bset = sys.border();

  // d/dz_j z^gamma = gamma_j z^(gamma - e_j)
  auto partial = [&](const MultiIndex& gamma, int j) -> Scalar {
    auto lower = gamma.lowered(j);
    if (!lower) return Scalar(0.0);
    return static_cast<double>(gamma[j]) * monomial_eval(*lower, z);
  };

  Eigen::MatrixXcd basis_grad(static_cast<Eigen::Index>(basis.size()), n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (int j = 0; j < n; ++j) basis_grad(static_cast<Eigen::Index>(k), j) = partial(basis[k], j);
  }
  Eigen::MatrixXcd jac = -sys.coefficients() * basis_grad;
  for (std::size_t k = 0; k < bset.size(); ++k) {
    for (int j = 0; j < n; ++j) jac(static_cast<Eigen::Index>(k), j) += partial(bset[k], j);
  }
  return jac;
}

double residual(const BorderSystem& sys, const Point& z) {
  const Eigen::VectorXcd values = relation_values(sys, z);
  const Eigen::VectorXcd v = evaluation_vector(sys.basis(), z);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  const double worst = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  return worst / scale;
}

}  // namespace bordereig

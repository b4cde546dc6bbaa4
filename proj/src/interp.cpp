#include "bordereig/interp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

namespace bordereig {

namespace {

std::string describe(const PoisednessReport& r) {
  std::ostringstream os;
  os << "node set is not poised: sigma_min/sigma_max = "
     << (r.largest_singular_value > 0.0 ? r.smallest_singular_value / r.largest_singular_value
                                        : 0.0)
     << " <= " << r.tolerance_used;
  return os.str();
}

void check_nodes(const LowerSet& basis, const NodeSet& nodes) {
  if (nodes.size() != basis.size()) {
    throw InvalidArgumentError("expected " + std::to_string(basis.size()) + " nodes, got " +
                               std::to_string(nodes.size()));
  }
  if (nodes.dimension != basis.dimension()) {
    throw InvalidArgumentError("node dimension " + std::to_string(nodes.dimension) +
                               " does not match index set dimension " +
                               std::to_string(basis.dimension()));
  }
  for (const auto& p : nodes.nodes) {
    if (p.size() != nodes.dimension) throw InvalidArgumentError("node of wrong length");
    if (!p.allFinite()) throw InvalidArgumentError("non-finite node coordinate");
  }
}

PoisednessReport analyse(const Eigen::MatrixXcd& v, double tol) {
  PoisednessReport r;
  r.tolerance_used = tol;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(v);
  const Eigen::VectorXd sv = svd.singularValues();
  r.largest_singular_value = sv.size() ? sv.maxCoeff() : 0.0;
  r.smallest_singular_value = sv.size() ? sv.minCoeff() : 0.0;
  r.poised = r.largest_singular_value > 0.0 &&
             r.smallest_singular_value > tol * r.largest_singular_value;
  r.condition = r.poised ? r.largest_singular_value / r.smallest_singular_value
                         : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

UnisolvenceError::UnisolvenceError(PoisednessReport report)
    : Error("unisolvence", describe(report)), report_(report) {}

Eigen::MatrixXcd vandermonde(const LowerSet& basis, const NodeSet& nodes) {
  check_nodes(basis, nodes);
  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd v(size, size);
  for (Eigen::Index s = 0; s < size; ++s) {
    v.row(s) = evaluation_vector(basis, nodes.nodes[static_cast<std::size_t>(s)]).transpose();
  }
  return v;
}

PoisednessReport poisedness(const LowerSet& basis, const NodeSet& nodes, double tol) {
  return analyse(vandermonde(basis, nodes), tol);
}

Interpolator::Interpolator(const LowerSet& basis, const NodeSet& nodes, double tol)
    : vandermonde_(vandermonde(basis, nodes)) {
  report_ = analyse(vandermonde_, tol);
  if (!report_.poised) throw UnisolvenceError(report_);
  lu_.compute(vandermonde_);
}

Eigen::MatrixXcd Interpolator::solve(const Eigen::MatrixXcd& values) const {
  if (values.rows() != vandermonde_.rows()) {
    throw InvalidArgumentError("expected " + std::to_string(vandermonde_.rows()) +
                               " values per right-hand side, got " +
                               std::to_string(values.rows()));
  }
  Eigen::MatrixXcd c = lu_.solve(values);
  // One step of iterative refinement.
  c += lu_.solve(values - vandermonde_ * c);
  return c;
}

Eigen::VectorXcd Interpolator::solve(const Eigen::VectorXcd& values) const {
  return solve(Eigen::MatrixXcd(values)).col(0);
}

Eigen::VectorXcd interpolate(const LowerSet& basis, const NodeSet& nodes,
                             const Eigen::VectorXcd& values, double tol) {
  return Interpolator(basis, nodes, tol).solve(values);
}

BorderSystem system_from_nodes(const LowerSet& basis, const NodeSet& nodes, double tol,
                               std::size_t cap) {
  const Interpolator interp(basis, nodes, tol);
  const BorderSet bset = border(basis, cap);
  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd rhs(size, static_cast<Eigen::Index>(bset.size()));
  for (Eigen::Index s = 0; s < size; ++s) {
    for (std::size_t k = 0; k < bset.size(); ++k) {
      rhs(s, static_cast<Eigen::Index>(k)) =
          monomial_eval(bset[k], nodes.nodes[static_cast<std::size_t>(s)]);
    }
  }
  Eigen::MatrixXcd coeffs = interp.solve(rhs).transpose();
  return BorderSystem(basis, std::move(coeffs), cap);
}

}  // namespace bordereig

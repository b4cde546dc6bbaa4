#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bordereig/error.hpp"
#include "bordereig/system.hpp"

namespace bordereig {

inline constexpr double kDefaultTolPoised = 1e-10;

/// Interpolation nodes in C^n.
struct NodeSet {
  int dimension = 0;
  std::vector<Point> nodes;

  std::size_t size() const noexcept { return nodes.size(); }
};

struct PoisednessReport {
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  /// sigma_max / sigma_min, +inf when not poised.
  double condition = 0.0;
  bool poised = false;
  double tolerance_used = 0.0;
};

/// Raised when a node set does not admit unique interpolation from
/// span{x^beta : beta in I}.
class UnisolvenceError : public Error {
 public:
  explicit UnisolvenceError(PoisednessReport report);
  const PoisednessReport& report() const noexcept { return report_; }

 private:
  PoisednessReport report_;
};

/// V[s][k] = nodes[s]^{I[k]}. Throws InvalidArgumentError on size mismatch.
Eigen::MatrixXcd vandermonde(const LowerSet& basis, const NodeSet& nodes);

/// Poised iff sigma_min > tol * sigma_max of the Vandermonde matrix.
PoisednessReport poisedness(const LowerSet& basis, const NodeSet& nodes,
                            double tol = kDefaultTolPoised);

/// Factored Vandermonde matrix of a poised node set; solves any number of
/// interpolation problems on the same nodes.
class Interpolator {
 public:
  /// Throws UnisolvenceError when the nodes are not poised.
  Interpolator(const LowerSet& basis, const NodeSet& nodes, double tol = kDefaultTolPoised);

  const PoisednessReport& report() const noexcept { return report_; }

  /// Coefficients c over I with sum_beta c_beta nodes[s]^beta = values[s].
  Eigen::VectorXcd solve(const Eigen::VectorXcd& values) const;
  /// Column-wise version of solve().
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& values) const;

 private:
  Eigen::MatrixXcd vandermonde_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  PoisednessReport report_;
};

Eigen::VectorXcd interpolate(const LowerSet& basis, const NodeSet& nodes,
                             const Eigen::VectorXcd& values, double tol = kDefaultTolPoised);

/// The border system whose relations all vanish on `nodes`: each border
/// monomial x^alpha is replaced by its interpolant over I.
BorderSystem system_from_nodes(const LowerSet& basis, const NodeSet& nodes,
                               double tol = kDefaultTolPoised,
                               std::size_t cap = kDefaultSizeCap);

}  // namespace bordereig

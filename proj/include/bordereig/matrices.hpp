#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bordereig/system.hpp"

namespace bordereig {

inline constexpr double kDefaultTolCommute = 1e-8;

/// Multiplication-by-x_i operators on span{x^beta : beta in I}, reduced
/// modulo the border relations. Rows expand x_i * x^beta in the monomial
/// basis, so evaluation vectors of solutions are right eigenvectors.
struct MultMatrixFamily {
  LowerSet basis;
  std::vector<Eigen::MatrixXcd> matrices;
  /// Rows that are standard unit vectors (beta + e_i stays inside I).
  std::vector<std::size_t> unit_row_count;
  /// Rows copied from a relation (beta + e_i lies on the border).
  std::vector<std::size_t> coeff_row_count;

  int dimension() const noexcept { return static_cast<int>(matrices.size()); }
};

struct CommutationReport {
  /// defects(i, j) = ||A_i A_j - A_j A_i||_F / max(1, ||A_i||_F ||A_j||_F)
  Eigen::MatrixXd defects;
  double max_defect = 0.0;
  double tolerance_used = 0.0;
  bool commuting = true;
};

/// Matrix of multiplication by x_{direction} (0-based direction).
Eigen::MatrixXcd build_matrix(const BorderSystem& sys, int direction);

MultMatrixFamily build_family(const BorderSystem& sys);

CommutationReport commutation_report(const MultMatrixFamily& family,
                                     double tol = kDefaultTolCommute);

}  // namespace bordereig

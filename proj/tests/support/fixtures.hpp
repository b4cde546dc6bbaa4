#pragma once

// Hand-written systems used across the suites. Coefficient rows follow the
// canonical basis order; the border order is spelled out next to each one.

#include <vector>

#include <Eigen/Dense>

#include "bordereig/index_sets.hpp"
#include "bordereig/system.hpp"

namespace fixtures {

using bordereig::BorderSystem;
using bordereig::LowerSet;
using bordereig::MultiIndex;

/// x^{m+1} = a_0 + a_1 x + ... + a_m x^m
inline BorderSystem univariate(const std::vector<std::complex<double>>& a) {
  const int m = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXcd coeffs(1, m + 1);
  for (int j = 0; j <= m; ++j) coeffs(0, j) = a[static_cast<std::size_t>(j)];
  return BorderSystem(bordereig::total_degree_set(1, m), coeffs);
}

// Basis (1, x, y); border (x^2, xy, y^2).
inline BorderSystem total_degree_2x1(const Eigen::Matrix3cd& rows) {
  return BorderSystem(bordereig::total_degree_set(2, 1), Eigen::MatrixXcd(rows));
}

/// x^2 = x, xy = 0, y^2 = y: vanishes on (0,0), (1,0), (0,1).
inline BorderSystem idempotent() {
  Eigen::Matrix3cd rows;
  rows << 0, 1, 0,
          0, 0, 0,
          0, 0, 1;
  return total_degree_2x1(rows);
}

/// x^2 = 1, xy = 0, y^2 = 1: multiplication matrices do not commute.
inline BorderSystem non_commuting() {
  Eigen::Matrix3cd rows;
  rows << 1, 0, 0,
          0, 0, 0,
          1, 0, 0;
  return total_degree_2x1(rows);
}

inline LowerSet unit_square() {
  return bordereig::validate_lower_set({MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{1, 1}}, 2);
}

/// Basis (1, x, y, xy); border (x^2, y^2, x^2y, xy^2):
/// x^2 = x, y^2 = y, x^2y = xy, xy^2 = xy.
inline BorderSystem unit_square_grid() {
  Eigen::Matrix4cd rows;
  rows << 0, 1, 0, 0,
          0, 0, 1, 0,
          0, 0, 0, 1,
          0, 0, 0, 1;
  return BorderSystem(unit_square(), Eigen::MatrixXcd(rows));
}

}  // namespace fixtures

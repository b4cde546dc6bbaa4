#include "bordereig/matrices.hpp"

#include <algorithm>
#include <cassert>

#include "bordereig/error.hpp"

namespace bordereig {

namespace {

struct BuiltMatrix {
  Eigen::MatrixXcd matrix;
  std::size_t unit_rows = 0;
  std::size_t coeff_rows = 0;
};

BuiltMatrix build(const BorderSystem& sys, int direction) {
  if (direction < 0 || direction >= sys.dimension()) {
    throw InvalidArgumentError("coordinate index " + std::to_string(direction + 1) +
                               " outside 1.." + std::to_string(sys.dimension()));
  }
  const auto& basis = sys.basis();
  const auto size = static_cast<Eigen::Index>(basis.size());
  BuiltMatrix out{Eigen::MatrixXcd::Zero(size, size)};
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const MultiIndex shifted = basis[row].raised(direction);
    const auto r = static_cast<Eigen::Index>(row);
    if (auto col = basis.position(shifted)) {
      out.matrix(r, static_cast<Eigen::Index>(*col)) = 1.0;
      ++out.unit_rows;
    } else if (auto rel = sys.relation_index(shifted)) {
      out.matrix.row(r) = sys.coefficients().row(static_cast<Eigen::Index>(*rel));
      ++out.coeff_rows;
    } else {
      // Unreachable while the border is computed from the basis.
      assert(false && "shifted basis monomial neither in I nor on its border");
      throw Error("internal", "inconsistent border at " + shifted.to_string());
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd build_matrix(const BorderSystem& sys, int direction) {
  return build(sys, direction).matrix;
}

MultMatrixFamily build_family(const BorderSystem& sys) {
  MultMatrixFamily family{sys.basis(), {}, {}, {}};
  const int n = sys.dimension();
  family.matrices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BuiltMatrix b = build(sys, i);
    family.matrices.push_back(std::move(b.matrix));
    family.unit_row_count.push_back(b.unit_rows);
    family.coeff_row_count.push_back(b.coeff_rows);
  }
  return family;
}

CommutationReport commutation_report(const MultMatrixFamily& family, double tol) {
  const auto n = static_cast<Eigen::Index>(family.matrices.size());
  CommutationReport report;
  report.defects = Eigen::MatrixXd::Zero(n, n);
  report.tolerance_used = tol;
  std::vector<double> norms;
  norms.reserve(family.matrices.size());
  for (const auto& a : family.matrices) norms.push_back(a.norm());

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& a = family.matrices[static_cast<std::size_t>(i)];
      const auto& b = family.matrices[static_cast<std::size_t>(j)];
      const double num = (a * b - b * a).norm();
      const double scale =
          std::max(1.0, norms[static_cast<std::size_t>(i)] * norms[static_cast<std::size_t>(j)]);
      report.defects(i, j) = report.defects(j, i) = num / scale;
    }
  }
  report.max_defect = n > 0 ? report.defects.maxCoeff() : 0.0;
  report.commuting = report.max_defect <= tol;
  return report;
}

}  // namespace bordereig

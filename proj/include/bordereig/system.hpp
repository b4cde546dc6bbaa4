#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "bordereig/index_sets.hpp"

namespace bordereig {

using Scalar = std::complex<double>;
/// A point of C^n.
using Point = Eigen::VectorXcd;

/// The border-form system
///
///   x^alpha = sum_{beta in I} a_{alpha,beta} x^beta,   alpha in border(I).
///
/// Row k of `coefficients()` holds a_{alpha_k, .} for the k-th border element,
/// columns follow the canonical order of I.
class BorderSystem {
 public:
  /// Throws InvalidArgumentError when the coefficient shape does not match
  /// (#border x #I) or an entry is not finite.
  BorderSystem(LowerSet basis, Eigen::MatrixXcd coefficients, std::size_t cap = kDefaultSizeCap);

  int dimension() const noexcept { return basis_.dimension(); }
  const LowerSet& basis() const noexcept { return basis_; }
  const BorderSet& border() const noexcept { return border_; }
  const Eigen::MatrixXcd& coefficients() const noexcept { return coefficients_; }

  std::optional<std::size_t> relation_index(const MultiIndex& alpha) const {
    return border_.position(alpha);
  }

  friend bool operator==(const BorderSystem& a, const BorderSystem& b);

 private:
  LowerSet basis_;
  BorderSet border_;
  Eigen::MatrixXcd coefficients_;
};

/// prod_i z_i^{beta_i}; 0^0 = 1.
Scalar monomial_eval(const MultiIndex& beta, const Point& z);

/// (z^beta)_{beta in I} in canonical order.
Eigen::VectorXcd evaluation_vector(const LowerSet& basis, const Point& z);

/// P_alpha(z) = z^alpha - sum_beta a_{alpha,beta} z^beta.
/// Throws UnknownRelationError when alpha is not in the border.
Scalar eval_relation(const BorderSystem& sys, const MultiIndex& alpha, const Point& z);

/// All P_alpha(z), in border order.
Eigen::VectorXcd relation_values(const BorderSystem& sys, const Point& z);

/// d P_alpha / d z_j, one row per border element.
Eigen::MatrixXcd relation_jacobian(const BorderSystem& sys, const Point& z);

/// max_alpha |P_alpha(z)| / max(1, max_{beta in I} |z^beta|).
double residual(const BorderSystem& sys, const Point& z);

}  // namespace bordereig

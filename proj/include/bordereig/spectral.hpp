#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bordereig/matrices.hpp"
#include "bordereig/system.hpp"

namespace bordereig {

/// Tolerances and knobs shared by the criterion and the solver.
struct SolverConfig {
  double tol_commute = 1e-8;
  double tol_cluster = 1e-7;
  double tol_rank = 1e-10;
  double tol_dedup = 1e-6;
  double tol_accept = 1e-6;
  /// Eigenpair acceptance: ||Av - lambda v|| <= tol_eig (1 + ||A||_F).
  double tol_eig = 1e-8;
  std::uint64_t seed = 42;
  int refine_iters = 3;
  int max_retries = 5;
  /// Schur iteration cap passed to the eigensolver; 0 keeps its default.
  int max_eig_iterations = 0;
  /// Skip the single-matrix path even when it applies.
  bool force_generic = false;
};

struct EigenDecomposition {
  Eigen::VectorXcd eigenvalues;
  /// Unit-norm right eigenvectors, one per column.
  Eigen::MatrixXcd eigenvectors;
  Eigen::VectorXd residuals;
  /// sigma_max / sigma_min of the eigenvector matrix (inf when singular).
  double vector_condition = 0.0;
  double matrix_norm = 0.0;
};

/// Dense nonsymmetric eigendecomposition. Throws NonConvergenceError when the
/// Schur iteration stalls or an eigenpair misses the residual bound.
EigenDecomposition eigen(const Eigen::MatrixXcd& a, double tol_eig = 1e-8,
                         int max_iterations = 0);

struct EigenCluster {
  Scalar representative;
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
  /// Indices into EigenDecomposition::eigenvalues.
  std::vector<Eigen::Index> members;
};

struct SemisimplicityReport {
  std::vector<EigenCluster> clusters;
  bool semisimple = true;
  /// Smallest distance between eigenvalues of different clusters (inf with
  /// a single cluster).
  double worst_gap = 0.0;
  double gap_threshold = 0.0;
};

/// Eigenvalues closer than tol_cluster (1 + ||A||_F) are merged (single
/// linkage). A cluster of size s is semisimple when
/// #I - rank(A - mean * Id) == s, with rank counted above tol_rank sigma_max.
SemisimplicityReport semisimplicity(const Eigen::MatrixXcd& a, const EigenDecomposition& dec,
                                    const SolverConfig& cfg);

struct Verdict {
  bool commuting = false;
  bool all_semisimple = false;
  bool maximal = false;
};

struct CriterionReport {
  Verdict verdict;
  CommutationReport commutation;
  std::vector<EigenDecomposition> decompositions;
  std::vector<SemisimplicityReport> semisimplicity;
};

/// The family has #I distinct common zeros iff it commutes and every member
/// is diagonalizable; both sides are evaluated here.
CriterionReport criterion(const MultMatrixFamily& family, const SolverConfig& cfg);

struct Strategy {
  enum class Kind { single, generic };
  Kind kind = Kind::generic;
  /// 0-based matrix index for Kind::single.
  int matrix = 0;
  /// Weights of the random combination for Kind::generic.
  std::vector<double> combination;
  int draws = 0;
  /// False when every draw left a clustered spectrum (non-maximal systems).
  bool distinct_spectrum = true;

  /// "single(i)" with 1-based i, or "generic".
  std::string tag() const;
};

struct Root {
  Point z;
  double residual = 0.0;
  double residual_before_refinement = 0.0;
  int refinement_steps = 0;
  bool accepted = false;
  bool real = false;
  /// ||A_i v - z_i v|| / ||v|| per coordinate.
  Eigen::VectorXd extraction_residuals;
  /// Largest |v[e_i]/v[0] - z_i| over coordinates where the ratio is defined.
  std::optional<double> ratio_discrepancy;
};

struct SolutionSet {
  std::vector<Root> roots;
  std::size_t distinct_count = 0;
  std::size_t basis_size = 0;
  Verdict verdict;
  CriterionReport criterion;
  Strategy strategy;
  std::vector<std::string> warnings;

  bool all_accepted() const;
};

/// Recovers the common zeros of the border system from eigenvectors of its
/// multiplication matrices. Throws DegenerateSpectrumError when the family is
/// judged maximal yet no combination separates its eigenvalues.
SolutionSet solve(const BorderSystem& sys, const SolverConfig& cfg = {});

/// Up to `max_iters` Gauss-Newton steps on the overdetermined relations
/// P_alpha(z) = 0; a step is kept only if residual() does not increase.
struct Refinement {
  Point z;
  double residual_before = 0.0;
  double residual_after = 0.0;
  int accepted_steps = 0;
};

Refinement refine_root(const BorderSystem& sys, Point z, int max_iters);

}  // namespace bordereig

#include "bordereig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bordereig/error.hpp"

namespace bordereig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Trailing block of a (possibly partial) complex Schur form whose
// subdiagonal has been deflated to exact zeros.
long deflated_block_size(const Eigen::MatrixXcd& t) {
  const Eigen::Index n = t.rows();
  if (n == 0) return 0;
  long size = 1;
  for (Eigen::Index k = n - 1; k > 0; --k) {
    if (t(k, k - 1) != Scalar(0.0)) break;
    ++size;
  }
  return size;
}

std::size_t numerical_rank(const Eigen::MatrixXcd& m, double tol_rank) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv.size() == 0 || sv.maxCoeff() == 0.0) return 0;
  const double threshold = tol_rank * sv.maxCoeff();
  return static_cast<std::size_t>((sv.array() > threshold).count());
}

struct UnionFind {
  std::vector<Eigen::Index> parent;
  explicit UnionFind(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Single-linkage clusters of eigenvalues at distance <= threshold, ordered by
// their smallest member index. Also returns the smallest inter-cluster gap.
std::pair<std::vector<std::vector<Eigen::Index>>, double> cluster_eigenvalues(
    const Eigen::VectorXcd& values, double threshold) {
  const Eigen::Index n = values.size();
  UnionFind uf(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= threshold) uf.unite(i, j);
    }
  }
  std::vector<std::vector<Eigen::Index>> clusters;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index root = uf.find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Eigen::Index>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(s)].push_back(i);
  }
  double gap = kInf;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (uf.find(i) != uf.find(j)) gap = std::min(gap, std::abs(values[i] - values[j]));
    }
  }
  return {std::move(clusters), gap};
}

bool has_distinct_spectrum(const EigenDecomposition& dec, double tol_cluster) {
  const double threshold = tol_cluster * (1.0 + dec.matrix_norm);
  const Eigen::Index n = dec.eigenvalues.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(dec.eigenvalues[i] - dec.eigenvalues[j]) <= threshold) return false;
    }
  }
  return true;
}

// Smallest pairwise eigenvalue gap relative to the clustering threshold.
double separation_ratio(const EigenDecomposition& dec, double tol_cluster) {
  const double threshold = tol_cluster * (1.0 + dec.matrix_norm);
  double gap = kInf;
  const Eigen::Index n = dec.eigenvalues.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      gap = std::min(gap, std::abs(dec.eigenvalues[i] - dec.eigenvalues[j]));
    }
  }
  return gap / threshold;
}

double max_abs(const Point& z) { return z.size() ? z.cwiseAbs().maxCoeff() : 0.0; }

bool point_less(const Point& a, const Point& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Strategy::tag() const {
  if (kind == Kind::single) return "single(" + std::to_string(matrix + 1) + ")";
  return "generic";
}

bool SolutionSet::all_accepted() const {
  return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.accepted; });
}

EigenDecomposition eigen(const Eigen::MatrixXcd& a, double tol_eig, int max_iterations) {
  if (a.rows() != a.cols()) throw InvalidArgumentError("eigen: matrix is not square");
  if (!a.allFinite()) throw InvalidArgumentError("eigen: non-finite matrix entry");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  if (max_iterations > 0) solver.setMaxIterations(max_iterations);
  solver.compute(a, true);
  if (solver.info() != Eigen::Success) {
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur;
    if (max_iterations > 0) schur.setMaxIterations(max_iterations);
    schur.compute(a, false);
    const long deflated = deflated_block_size(schur.matrixT());
    throw NonConvergenceError("Schur iteration did not converge (" + std::to_string(deflated) +
                                  " of " + std::to_string(a.rows()) + " eigenvalues deflated)",
                              static_cast<long>(a.rows()), deflated);
  }

  EigenDecomposition dec;
  dec.matrix_norm = a.norm();
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  const Eigen::Index n = a.rows();
  dec.residuals.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    dec.eigenvectors.col(k).normalize();
    const auto v = dec.eigenvectors.col(k);
    dec.residuals[k] = (a * v - dec.eigenvalues[k] * v).norm();
  }
  const double bound = tol_eig * (1.0 + dec.matrix_norm);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(dec.residuals[k] <= bound)) {
      throw NonConvergenceError("eigenpair " + std::to_string(k) + " residual " +
                                    std::to_string(dec.residuals[k]) + " exceeds bound",
                                static_cast<long>(n), static_cast<long>(n));
    }
  }
  if (n > 0) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(dec.eigenvectors);
    const Eigen::VectorXd sv = svd.singularValues();
    const double smin = sv.minCoeff();
    dec.vector_condition = smin > 0.0 ? sv.maxCoeff() / smin : kInf;
  } else {
    dec.vector_condition = 1.0;
  }
  return dec;
}

SemisimplicityReport semisimplicity(const Eigen::MatrixXcd& a, const EigenDecomposition& dec,
                                    const SolverConfig& cfg) {
  SemisimplicityReport report;
  report.gap_threshold = cfg.tol_cluster * (1.0 + a.norm());
  auto [groups, gap] = cluster_eigenvalues(dec.eigenvalues, report.gap_threshold);
  report.worst_gap = gap;

  const Eigen::Index n = a.rows();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);
  for (auto& members : groups) {
    EigenCluster c;
    Scalar sum(0.0);
    for (Eigen::Index k : members) sum += dec.eigenvalues[k];
    c.representative = sum / static_cast<double>(members.size());
    c.algebraic = members.size();
    const std::size_t rank = numerical_rank(a - c.representative * identity, cfg.tol_rank);
    c.geometric = static_cast<std::size_t>(n) - rank;
    c.members = std::move(members);
    if (c.geometric != c.algebraic) report.semisimple = false;
    report.clusters.push_back(std::move(c));
  }
  return report;
}

CriterionReport criterion(const MultMatrixFamily& family, const SolverConfig& cfg) {
  if (family.matrices.empty()) throw InvalidArgumentError("criterion: empty matrix family");
  CriterionReport report;
  report.commutation = commutation_report(family, cfg.tol_commute);
  report.verdict.commuting = report.commutation.commuting;
  report.verdict.all_semisimple = true;
  for (const auto& a : family.matrices) {
    report.decompositions.push_back(eigen(a, cfg.tol_eig, cfg.max_eig_iterations));
    report.semisimplicity.push_back(semisimplicity(a, report.decompositions.back(), cfg));
    if (!report.semisimplicity.back().semisimple) report.verdict.all_semisimple = false;
  }
  report.verdict.maximal = report.verdict.commuting && report.verdict.all_semisimple;
  return report;
}

Refinement refine_root(const BorderSystem& sys, Point z, int max_iters) {
  Refinement out;
  out.residual_before = residual(sys, z);
  double current = out.residual_before;
  for (int it = 0; it < max_iters && current > 0.0; ++it) {
    const Eigen::VectorXcd values = relation_values(sys, z);
    const Eigen::MatrixXcd jac = relation_jacobian(sys, z);
    const Eigen::VectorXcd step = jac.completeOrthogonalDecomposition().solve(-values);
    if (!step.allFinite()) break;
    Point candidate = z + step;
    const double next = residual(sys, candidate);
    if (!(next <= current)) break;
    z = std::move(candidate);
    current = next;
    ++out.accepted_steps;
  }
  out.z = std::move(z);
  out.residual_after = current;
  return out;
}

SolutionSet solve(const BorderSystem& sys, const SolverConfig& cfg) {
  const MultMatrixFamily family = build_family(sys);
  const int n = family.dimension();
  const auto size = static_cast<Eigen::Index>(sys.basis().size());

  SolutionSet out;
  out.basis_size = sys.basis().size();
  out.criterion = criterion(family, cfg);
  out.verdict = out.criterion.verdict;

  // Joint eigenvector candidates: either one matrix with a simple spectrum,
  // or a random real combination of all of them.
  const EigenDecomposition* basis_dec = nullptr;
  EigenDecomposition combined;
  if (!cfg.force_generic) {
    for (int i = 0; i < n; ++i) {
      const auto& report = out.criterion.semisimplicity[static_cast<std::size_t>(i)];
      if (report.clusters.size() == static_cast<std::size_t>(size)) {
        out.strategy.kind = Strategy::Kind::single;
        out.strategy.matrix = i;
        basis_dec = &out.criterion.decompositions[static_cast<std::size_t>(i)];
        break;
      }
    }
  }
  if (basis_dec == nullptr) {
    out.strategy.kind = Strategy::Kind::generic;
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double best_ratio = -1.0;
    const int draws = std::max(1, cfg.max_retries);
    for (int attempt = 0; attempt < draws; ++attempt) {
      std::vector<double> c(static_cast<std::size_t>(n));
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (auto& ci : c) {
          ci = normal(rng);
          norm2 += ci * ci;
        }
      } while (norm2 == 0.0);
      for (auto& ci : c) ci /= std::sqrt(norm2);

      Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(size, size);
      for (int i = 0; i < n; ++i) {
        mix += c[static_cast<std::size_t>(i)] * family.matrices[static_cast<std::size_t>(i)];
      }
      EigenDecomposition dec = eigen(mix, cfg.tol_eig, cfg.max_eig_iterations);
      out.strategy.draws = attempt + 1;
      const double ratio = separation_ratio(dec, cfg.tol_cluster);
      if (ratio > best_ratio) {
        best_ratio = ratio;
        combined = std::move(dec);
        out.strategy.combination = c;
      }
      if (has_distinct_spectrum(combined, cfg.tol_cluster)) break;
    }
    out.strategy.distinct_spectrum = has_distinct_spectrum(combined, cfg.tol_cluster);
    if (!out.strategy.distinct_spectrum) {
      if (out.verdict.maximal) {
        throw DegenerateSpectrumError(
            "no random combination of the multiplication matrices has a simple spectrum after " +
            std::to_string(draws) + " draws; inspect the criterion report");
      }
      out.warnings.push_back(
          "clustered spectrum in every combination; candidates come from a defective or "
          "non-commuting family and are not certified");
    }
    basis_dec = &combined;
  }

  // Coordinates from Rayleigh quotients of each A_i.
  const auto zero_pos = sys.basis().position(MultiIndex::zero(n));
  std::vector<std::optional<std::size_t>> unit_pos;
  for (int i = 0; i < n; ++i) unit_pos.push_back(sys.basis().position(MultiIndex::unit(n, i)));

  std::vector<Root> candidates;
  candidates.reserve(static_cast<std::size_t>(size));
  for (Eigen::Index k = 0; k < size; ++k) {
    const Eigen::VectorXcd v = basis_dec->eigenvectors.col(k);
    const double vv = v.squaredNorm();
    const double vnorm = std::sqrt(vv);
    Root root;
    root.z.resize(n);
    root.extraction_residuals.resize(n);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXcd av = family.matrices[static_cast<std::size_t>(i)] * v;
      root.z[i] = v.dot(av) / vv;
      root.extraction_residuals[i] = (av - root.z[i] * v).norm() / vnorm;
    }
    if (zero_pos && std::abs(v[static_cast<Eigen::Index>(*zero_pos)]) > 1e-8) {
      double worst = 0.0;
      bool any = false;
      for (int i = 0; i < n; ++i) {
        if (!unit_pos[static_cast<std::size_t>(i)]) continue;
        const Scalar ratio = v[static_cast<Eigen::Index>(*unit_pos[static_cast<std::size_t>(i)])] /
                             v[static_cast<Eigen::Index>(*zero_pos)];
        worst = std::max(worst, std::abs(ratio - root.z[i]));
        any = true;
      }
      if (any) root.ratio_discrepancy = worst;
    }
    Refinement refined = refine_root(sys, root.z, cfg.refine_iters);
    root.z = std::move(refined.z);
    root.residual_before_refinement = refined.residual_before;
    root.residual = refined.residual_after;
    root.refinement_steps = refined.accepted_steps;
    candidates.push_back(std::move(root));
  }

  // Merge near-coincident candidates, keeping the smaller residual.
  for (auto& cand : candidates) {
    bool merged = false;
    for (auto& kept : out.roots) {
      const double scale = 1.0 + std::max(max_abs(cand.z), max_abs(kept.z));
      if ((cand.z - kept.z).norm() <= cfg.tol_dedup * scale) {
        if (cand.residual < kept.residual) kept = std::move(cand);
        merged = true;
        break;
      }
    }
    if (!merged) out.roots.push_back(std::move(cand));
  }
  for (auto& root : out.roots) {
    root.accepted = root.residual <= cfg.tol_accept;
    const double imag = root.z.size() ? root.z.imag().cwiseAbs().maxCoeff() : 0.0;
    root.real = imag <= cfg.tol_dedup * (1.0 + max_abs(root.z));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return point_less(a.z, b.z); });
  out.distinct_count = out.roots.size();

  if (out.verdict.maximal && out.distinct_count != out.basis_size) {
    out.warnings.push_back("tolerance inconsistency: criterion holds but " +
                           std::to_string(out.distinct_count) + " distinct roots were found for #I = " +
                           std::to_string(out.basis_size));
  }
  if (!out.verdict.maximal && out.distinct_count == out.basis_size && out.all_accepted()) {
    out.warnings.push_back(
        "tolerance inconsistency: #I distinct accepted roots but the criterion fails");
  }
  for (const auto& root : out.roots) {
    if (!root.accepted) {
      out.warnings.push_back("some roots exceed tol_accept after refinement");
      break;
    }
  }
  return out;
}

}  // namespace bordereig

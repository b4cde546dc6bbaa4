// Acceptance runner. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bordereig/cli.hpp"
#include "bordereig/error.hpp"
#include "bordereig/interp.hpp"
#include "bordereig/json_io.hpp"
#include "bordereig/matrices.hpp"
#include "bordereig/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bordereig;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

std::vector<Point> points_of(const SolutionSet& s) {
  std::vector<Point> out;
  for (const auto& r : s.roots) out.push_back(r.z);
  return out;
}

Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) p[k++] = x;
  return p;
}

std::string data(const std::string& name) { return std::string(BORDEREIG_TEST_DATA) + "/" + name; }

struct Instance {
  BorderSystem sys;
  std::vector<Point> nodes;
};

// Shared forward-direction corpus: 200 poised node sets over (n, m) in {1,2,3}^2.
std::vector<Instance> forward_corpus(int& rejected) {
  std::mt19937_64 rng(20240601);
  std::vector<Instance> out;
  rejected = 0;
  int k = 0;
  while (out.size() < 200) {
    const int n = 1 + k % 3;
    const int m = 1 + (k / 3) % 3;
    ++k;
    const auto lower = total_degree_set(n, m);
    const auto nodes = oracle::sample_nodes(n, lower.size(), 1e-2, rng);
    if (!poisedness(lower, nodes).poised) {
      ++rejected;
      continue;
    }
    out.push_back({system_from_nodes(lower, nodes), nodes.nodes});
  }
  return out;
}

Result ac1(const std::vector<Instance>& corpus, int rejected) {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int failures = 0;
  for (const auto& inst : corpus) {
    const auto s = solve(inst.sys);
    const double err = oracle::matching_error(points_of(s), inst.nodes);
    worst = std::max(worst, err);
    if (!s.verdict.maximal || s.distinct_count != inst.sys.basis().size() || !(err <= 1e-6)) ++failures;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = failures == 0 && secs <= 30.0;
  std::ostringstream d;
  d << corpus.size() << " instances, " << failures << " failures, worst matching error " << worst << ", "
    << secs << " s, " << rejected << " unpoised draws redrawn";
  res.detail = d.str();
  return res;
}

Result ac2() {
  Result res;
  std::ostringstream d;

  const auto defective = solve(fixtures::univariate({0.0, 0.0}));
  const bool a = !defective.verdict.maximal && defective.distinct_count == 1;
  d << "x^2=0: maximal=" << defective.verdict.maximal << " distinct=" << defective.distinct_count;

  const auto nc = criterion(build_family(fixtures::non_commuting()), SolverConfig{});
  const auto fam = build_family(fixtures::non_commuting());
  Eigen::Matrix3cd comm = Eigen::Matrix3cd::Zero();
  comm(1, 2) = 1.0;
  comm(2, 1) = -1.0;
  const bool commutator_ok = fam.matrices[0] * fam.matrices[1] - fam.matrices[1] * fam.matrices[0] == Eigen::MatrixXcd(comm);
  const bool b = !nc.verdict.maximal && commutator_ok;
  d << "; non-commuting: maximal=" << nc.verdict.maximal << " commutator E23-E32=" << commutator_ok;

  const auto idem = solve(fixtures::idempotent());
  const double err = oracle::matching_error(points_of(idem), {pt({0, 0}), pt({1, 0}), pt({0, 1})});
  const bool c = idem.verdict.maximal && err <= 1e-10;
  d << "; idempotent: maximal=" << idem.verdict.maximal << " error=" << err;

  res.pass = a && b && c;
  res.detail = d.str();
  return res;
}

Result ac3() {
  Result res;
  double worst = 0.0;
  bool structure = true;
  bool maximal = true;
  for (int m = 1; m <= 6; ++m) {
    std::vector<std::complex<double>> roots;
    for (int k = 0; k <= m; ++k) roots.emplace_back(std::cos(k * std::numbers::pi / m), 0.0);
    const auto p = oracle::poly_from_roots(roots);
    // x^{m+1} = sum_j a_j x^j with a_j = -p_j
    std::vector<std::complex<double>> a;
    for (int j = 0; j <= m; ++j) a.push_back(-p[static_cast<std::size_t>(j)]);
    const auto sys = fixtures::univariate(a);
    const auto mat = build_matrix(sys, 0);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    for (int r = 0; r < m; ++r) companion(r, r + 1) = 1.0;
    for (int j = 0; j <= m; ++j) companion(m, j) = a[static_cast<std::size_t>(j)];
    structure = structure && mat == companion;
    const auto s = solve(sys);
    maximal = maximal && s.verdict.maximal;
    std::vector<Point> expected;
    for (const auto& r : roots) expected.push_back(pt({r.real()}));
    worst = std::max(worst, oracle::matching_error(points_of(s), expected));
  }
  res.pass = structure && maximal && worst <= 1e-8;
  std::ostringstream d;
  d << "m=1..6 companion exact=" << structure << ", worst root error " << worst;
  res.detail = d.str();
  return res;
}

Result ac4(const std::vector<Instance>& corpus) {
  Result res;
  std::vector<BorderSystem> systems{fixtures::idempotent(), fixtures::univariate({1.0, 0.0}), fixtures::unit_square_grid()};
  for (const auto& inst : corpus) systems.push_back(inst.sys);
  int eligible = 0, failures = 0;
  double worst = 0.0;
  const SolverConfig base;
  for (const auto& sys : systems) {
    const auto fast = solve(sys, base);
    if (fast.strategy.kind != Strategy::Kind::single) continue;
    ++eligible;
    SolverConfig forced = base;
    forced.force_generic = true;
    const auto slow = solve(sys, forced);
    const double err = oracle::matching_error(points_of(fast), points_of(slow));
    worst = std::max(worst, err);
    if (!(err <= base.tol_dedup)) ++failures;
  }
  res.pass = eligible > 0 && failures == 0;
  std::ostringstream d;
  d << eligible << " eligible instances, " << failures << " disagreements, worst " << worst;
  res.detail = d.str();
  return res;
}

Result ac5() {
  Result res;
  NodeSet grid{2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}};
  const auto sys = system_from_nodes(fixtures::unit_square(), grid);
  std::vector<MultiIndex> expected_border{MultiIndex{2, 0}, MultiIndex{2, 1}, MultiIndex{1, 2}, MultiIndex{0, 2}};
  bool border_ok = sys.border().size() == expected_border.size();
  for (const auto& b : expected_border) border_ok = border_ok && sys.border().contains(b);
  const auto hand = fixtures::unit_square_grid();
  double worst = 0.0;
  for (const auto& b : expected_border) {
    const auto k = sys.relation_index(b);
    const auto h = hand.relation_index(b);
    if (!k || !h) {
      border_ok = false;
      continue;
    }
    worst = std::max(worst, (sys.coefficients().row(static_cast<Eigen::Index>(*k)) -
                             hand.coefficients().row(static_cast<Eigen::Index>(*h)))
                                .cwiseAbs()
                                .maxCoeff());
  }
  const auto s = solve(sys);
  const double err = oracle::matching_error(points_of(s), grid.nodes);
  res.pass = border_ok && worst <= 1e-10 && s.verdict.maximal && err <= 1e-6;
  std::ostringstream d;
  d << "border ok=" << border_ok << ", relation error " << worst << ", root error " << err;
  res.detail = d.str();
  return res;
}

Result ac6() {
  Result res;
  std::mt19937_64 rng(606);
  std::normal_distribution<double> g;
  int bad = 0, total_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const int m = 1 + (trial / 3) % 3;
    const bool total = trial % 2 == 0;
    const LowerSet lower = total ? total_degree_set(n, m)
                                 : validate_lower_set(oracle::random_lower_set(n, 1 + trial % 12, rng), n);
    const auto bset = border(lower);
    Eigen::MatrixXcd coeffs(static_cast<Eigen::Index>(bset.size()), static_cast<Eigen::Index>(lower.size()));
    for (Eigen::Index r = 0; r < coeffs.rows(); ++r) {
      for (Eigen::Index c = 0; c < coeffs.cols(); ++c) coeffs(r, c) = std::complex<double>(g(rng), g(rng));
    }
    const BorderSystem sys(lower, coeffs);
    const auto fam = build_family(sys);
    for (int i = 0; i < n; ++i) {
      const auto& a = fam.matrices[static_cast<std::size_t>(i)];
      std::size_t coeff_rows = 0;
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        const auto shifted = lower[static_cast<std::size_t>(r)].raised(i);
        if (const auto k = sys.relation_index(shifted)) {
          ++coeff_rows;
          if (a.row(r) != coeffs.row(static_cast<Eigen::Index>(*k))) ++bad;
        } else {
          const auto pos = lower.position(shifted);
          Eigen::RowVectorXcd unit = Eigen::RowVectorXcd::Zero(a.cols());
          if (pos) unit(static_cast<Eigen::Index>(*pos)) = 1.0;
          if (!pos || a.row(r) != unit) ++bad;
        }
      }
      if (coeff_rows != fam.coeff_row_count[static_cast<std::size_t>(i)]) ++bad;
      if (total) {
        ++total_checked;
        // #J_m = number of exponents of degree exactly m in n variables
        std::size_t jm = 0;
        for (const auto& e : oracle::enumerate_total_degree(n, m)) {
          int deg = 0;
          for (int x : e) deg += x;
          jm += deg == m;
        }
        if (fam.coeff_row_count[static_cast<std::size_t>(i)] != jm) ++bad;
      }
    }
  }
  res.pass = bad == 0;
  std::ostringstream d;
  d << "100 systems, " << total_checked << " total-degree count checks, " << bad << " violations";
  res.detail = d.str();
  return res;
}

Result ac7() {
  Result res;
  std::ostringstream d;
  bool ok = true;
  const auto lower = total_degree_set(2, 1);
  const std::vector<std::pair<std::string, NodeSet>> cases{
      {"collinear", NodeSet{2, {pt({0, 0}), pt({1, 1}), pt({2, 2})}}},
      {"repeated", NodeSet{2, {pt({0.3, 0.1}), pt({1, 0}), pt({0.3, 0.1})}}},
  };
  for (const auto& [name, nodes] : cases) {
    bool thrown = false;
    try {
      system_from_nodes(lower, nodes);
    } catch (const UnisolvenceError&) {
      thrown = true;
    }
    ok = ok && thrown;
    d << name << " unisolvence=" << thrown << "; ";
  }
  for (const std::string file : {"collinear_points.json", "repeated_points.json"}) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::cmd_from_points(data("total_degree_2_1.json"), data(file), cli::RunConfig{}, {in, out, err});
    const bool kind_ok = err.str().find("\"unisolvence\"") != std::string::npos;
    ok = ok && code == 1 && kind_ok;
    d << file << " exit=" << code << "; ";
  }
  res.pass = ok;
  res.detail = d.str();
  return res;
}

Result ac8() {
  Result res;
  std::ostringstream d;
  bool ok = true;
  for (const std::string file : {"idempotent.json", "x2_eq_1.json", "x2_eq_0.json"}) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      std::istringstream in;
      std::ostringstream out, err;
      cli::cmd_solve(data(file), cli::RunConfig{}, {in, out, err});
      if (run == 0) first = out.str();
      else ok = ok && !first.empty() && first == out.str();
    }
    d << file << " ";
  }
  res.pass = ok;
  res.detail = d.str() + (ok ? "byte-identical" : "differ");
  return res;
}

Result guarded(const std::function<Result()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  int rejected = 0;
  std::vector<Instance> corpus;
  try {
    corpus = forward_corpus(rejected);
  } catch (const std::exception& e) {
    std::printf("corpus generation failed: %s\n", e.what());
    return 1;
  }

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1 forward round trip on random poised nodes", [&] { return ac1(corpus, rejected); }},
      {"AC2 converse direction on curated systems", ac2},
      {"AC3 univariate companion matrix and roots", ac3},
      {"AC4 single-matrix shortcut agrees with generic combination", [&] { return ac4(corpus); }},
      {"AC5 unit square lower set", ac5},
      {"AC6 structural invariants of multiplication matrices", ac6},
      {"AC7 unpoised nodes rejected", ac7},
      {"AC8 deterministic solve output", ac8},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto r = guarded(fn);
    failed += !r.pass;
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

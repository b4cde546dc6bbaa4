#include "bordereig/json_io.hpp"

#include <cmath>
#include <unordered_set>

#include "bordereig/error.hpp"

namespace bordereig::json_io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

int positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000) {
    throw ParseError(path, "expected a positive integer");
  }
  return j.get<int>();
}

MultiIndex multi_index_from_json(const Json& j, int n, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of exponents");
  if (static_cast<int>(j.size()) != n) {
    throw ParseError(path, "multi-index has " + std::to_string(j.size()) + " entries, expected " +
                               std::to_string(n));
  }
  std::vector<int> e;
  e.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& x = j[k];
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1'000'000) {
      throw ParseError(at(path, k), "expected a nonnegative integer exponent");
    }
    e.push_back(x.get<int>());
  }
  return MultiIndex(std::move(e));
}

Json multi_index_to_json(const MultiIndex& a) {
  Json out = Json::array();
  for (int e : a.exponents()) out.push_back(e);
  return out;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

Json scalar_to_json(Scalar s) { return Json::array({s.real(), s.imag()}); }

Scalar scalar_from_json(const Json& j, const std::string& path) {
  double re = 0.0;
  double im = 0.0;
  if (j.is_number()) {
    re = j.get<double>();
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    re = j[0].get<double>();
    im = j[1].get<double>();
  } else {
    throw ParseError(path, "expected a number or a [re, im] pair");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(path, "non-finite scalar");
  return {re, im};
}

Json point_to_json(const Point& z) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < z.size(); ++i) out.push_back(scalar_to_json(z[i]));
  return out;
}

Point point_from_json(const Json& j, int n, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of coordinates");
  if (static_cast<int>(j.size()) != n) {
    throw ParseError(path, "point has " + std::to_string(j.size()) + " coordinates, expected " +
                               std::to_string(n));
  }
  Point z(n);
  for (int i = 0; i < n; ++i) z[i] = scalar_from_json(j[static_cast<std::size_t>(i)], at(path, static_cast<std::size_t>(i)));
  return z;
}

// ---------------------------------------------------------------------------

Json index_set_to_json(const LowerSet& lower) {
  const int n = lower.dimension();
  const int m = lower.max_degree();
  if (m >= 1 && lower.size() == binomial(static_cast<std::uint64_t>(n + m),
                                         static_cast<std::uint64_t>(n))) {
    return Json{{"type", "total_degree"}, {"n", n}, {"m", m}};
  }
  Json indices = Json::array();
  for (const auto& a : lower.members()) indices.push_back(multi_index_to_json(a));
  return Json{{"type", "explicit"}, {"n", n}, {"indices", std::move(indices)}};
}

LowerSet index_set_from_json(const Json& j, const std::string& path, std::size_t cap) {
  const Json& type = require(j, "type", path);
  if (!type.is_string()) throw ParseError(at(path, "type"), "expected a string");
  const int n = positive_int(require(j, "n", path), at(path, "n"));
  const auto kind = type.get<std::string>();
  try {
    if (kind == "total_degree") {
      const int m = positive_int(require(j, "m", path), at(path, "m"));
      return total_degree_set(n, m, cap);
    }
    if (kind == "explicit") {
      const Json& idx = require(j, "indices", path);
      if (!idx.is_array()) throw ParseError(at(path, "indices"), "expected an array");
      std::vector<MultiIndex> candidates;
      candidates.reserve(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) {
        candidates.push_back(multi_index_from_json(idx[k], n, at(at(path, "indices"), k)));
      }
      if (candidates.empty()) throw ParseError(at(path, "indices"), "index set is empty");
      return validate_lower_set(std::move(candidates), n, cap);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(at(path, "type"), "unknown index set type '" + kind + "'");
}

// ---------------------------------------------------------------------------

Json system_to_json(const BorderSystem& sys) {
  Json basis = Json::array();
  for (const auto& b : sys.basis().members()) basis.push_back(multi_index_to_json(b));
  Json relations = Json::array();
  const auto& coeffs = sys.coefficients();
  for (std::size_t k = 0; k < sys.border().size(); ++k) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
      row.push_back(scalar_to_json(coeffs(static_cast<Eigen::Index>(k), c)));
    }
    relations.push_back(Json{{"alpha", multi_index_to_json(sys.border()[k])}, {"coeffs", std::move(row)}});
  }
  return Json{{"index_set", index_set_to_json(sys.basis())},
              {"basis", std::move(basis)},
              {"relations", std::move(relations)}};
}

BorderSystem system_from_json(const Json& j, std::size_t cap) {
  if (!j.is_object()) throw ParseError("", "expected a system object");
  LowerSet lower = index_set_from_json(require(j, "index_set", ""), "/index_set", cap);
  const int n = lower.dimension();

  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != lower.size()) {
      throw ParseError("/basis", "basis does not list the " + std::to_string(lower.size()) +
                                     " members of the index set");
    }
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (multi_index_from_json((*it)[k], n, at("/basis", k)) != lower[k]) {
        throw ParseError(at("/basis", k), "basis is not in canonical (graded) order of the index set");
      }
    }
  }

  const BorderSet bset = border(lower, cap);
  const auto rows = static_cast<Eigen::Index>(bset.size());
  const auto cols = static_cast<Eigen::Index>(lower.size());
  Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(rows, cols);
  std::vector<bool> seen(bset.size(), false);

  const Json& rel = require(j, "relations", "");
  if (!rel.is_array()) throw ParseError("/relations", "expected an array");
  for (std::size_t r = 0; r < rel.size(); ++r) {
    const std::string path = at("/relations", r);
    const MultiIndex alpha = multi_index_from_json(require(rel[r], "alpha", path), n, at(path, "alpha"));
    if (lower.contains(alpha)) {
      throw ParseError(at(path, "alpha"), "alpha inside I: " + alpha.to_string());
    }
    const auto pos = bset.position(alpha);
    if (!pos) {
      throw ParseError(at(path, "alpha"), "alpha " + alpha.to_string() + " is not on the border of I");
    }
    if (seen[*pos]) {
      throw ParseError(at(path, "alpha"), "duplicate relation for alpha " + alpha.to_string());
    }
    seen[*pos] = true;
    const Json& row = require(rel[r], "coeffs", path);
    if (!row.is_array()) throw ParseError(at(path, "coeffs"), "expected an array");
    if (row.size() != lower.size()) {
      throw ParseError(at(path, "coeffs"), "coefficient row has " + std::to_string(row.size()) +
                                               " entries, expected #I = " +
                                               std::to_string(lower.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      coeffs(static_cast<Eigen::Index>(*pos), static_cast<Eigen::Index>(c)) =
          scalar_from_json(row[c], at(at(path, "coeffs"), c));
    }
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw ParseError("/relations", "missing relation for alpha " + bset[k].to_string());
  }
  return BorderSystem(std::move(lower), std::move(coeffs), cap);
}

std::string serialize_system(const BorderSystem& sys) { return system_to_json(sys).dump(2) + "\n"; }

BorderSystem parse_system(std::string_view text, std::size_t cap) {
  return system_from_json(parse_document(text), cap);
}

// ---------------------------------------------------------------------------

Json points_to_json(const NodeSet& nodes) {
  Json pts = Json::array();
  for (const auto& p : nodes.nodes) pts.push_back(point_to_json(p));
  return Json{{"n", nodes.dimension}, {"points", std::move(pts)}};
}

NodeSet points_from_json(const Json& j) {
  NodeSet out;
  out.dimension = positive_int(require(j, "n", ""), "/n");
  const Json& pts = require(j, "points", "");
  if (!pts.is_array()) throw ParseError("/points", "expected an array");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    out.nodes.push_back(point_from_json(pts[k], out.dimension, at("/points", k)));
  }
  return out;
}

NodeSet parse_points(std::string_view text) { return points_from_json(parse_document(text)); }

std::vector<Point> roots_from_json(const Json& j, int n) {
  if (!j.is_object()) throw ParseError("", "expected an object");
  std::vector<Point> out;
  if (auto it = j.find("roots"); it != j.end()) {
    if (!it->is_array()) throw ParseError("/roots", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const Json& r = (*it)[k];
      const std::string path = at("/roots", k);
      if (r.is_object()) {
        out.push_back(point_from_json(require(r, "z", path), n, at(path, "z")));
      } else {
        out.push_back(point_from_json(r, n, path));
      }
    }
    return out;
  }
  NodeSet pts = points_from_json(j);
  if (pts.dimension != n) {
    throw ParseError("/n", "points have dimension " + std::to_string(pts.dimension) +
                               ", system has " + std::to_string(n));
  }
  return std::move(pts.nodes);
}

// ---------------------------------------------------------------------------

Json poisedness_to_json(const PoisednessReport& r) {
  return Json{{"poised", r.poised},
              {"smallest_singular_value", r.smallest_singular_value},
              {"largest_singular_value", r.largest_singular_value},
              {"condition", finite_or_null(r.condition)},
              {"tolerance_used", r.tolerance_used}};
}

Json commutation_to_json(const CommutationReport& r) {
  Json defects = Json::array();
  for (Eigen::Index i = 0; i < r.defects.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < r.defects.cols(); ++k) row.push_back(r.defects(i, k));
    defects.push_back(std::move(row));
  }
  return Json{{"commuting", r.commuting},
              {"max_defect", r.max_defect},
              {"tolerance_used", r.tolerance_used},
              {"defects", std::move(defects)}};
}

Json semisimplicity_to_json(const SemisimplicityReport& r, const EigenDecomposition& dec) {
  Json clusters = Json::array();
  for (const auto& c : r.clusters) {
    clusters.push_back(Json{{"eigenvalue", scalar_to_json(c.representative)},
                            {"algebraic", c.algebraic},
                            {"geometric", c.geometric}});
  }
  Json eigenvalues = Json::array();
  for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
    eigenvalues.push_back(scalar_to_json(dec.eigenvalues[k]));
  }
  return Json{{"semisimple", r.semisimple},
              {"worst_gap", finite_or_null(r.worst_gap)},
              {"gap_threshold", r.gap_threshold},
              {"vector_condition", finite_or_null(dec.vector_condition)},
              {"max_eigen_residual", dec.residuals.size() ? dec.residuals.maxCoeff() : 0.0},
              {"eigenvalues", std::move(eigenvalues)},
              {"clusters", std::move(clusters)}};
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"commuting", v.commuting}, {"all_semisimple", v.all_semisimple}, {"maximal", v.maximal}};
}

Json criterion_to_json(const CriterionReport& r) {
  Json matrices = Json::array();
  for (std::size_t i = 0; i < r.semisimplicity.size(); ++i) {
    Json entry = semisimplicity_to_json(r.semisimplicity[i], r.decompositions[i]);
    entry["matrix"] = i + 1;
    matrices.push_back(std::move(entry));
  }
  return Json{{"verdict", verdict_to_json(r.verdict)},
              {"commutation", commutation_to_json(r.commutation)},
              {"semisimplicity", std::move(matrices)}};
}

Json solution_to_json(const SolutionSet& s) {
  Json roots = Json::array();
  for (const auto& r : s.roots) {
    Json entry{{"z", point_to_json(r.z)},
               {"residual", r.residual},
               {"real", r.real},
               {"accepted", r.accepted},
               {"residual_before_refinement", r.residual_before_refinement},
               {"refinement_steps", r.refinement_steps},
               {"extraction_residual",
                r.extraction_residuals.size() ? r.extraction_residuals.maxCoeff() : 0.0}};
    if (r.ratio_discrepancy) entry["ratio_discrepancy"] = *r.ratio_discrepancy;
    roots.push_back(std::move(entry));
  }
  Json strategy{{"tag", s.strategy.tag()},
                {"draws", s.strategy.draws},
                {"combination", s.strategy.combination},
                {"distinct_spectrum", s.strategy.distinct_spectrum}};
  Json diagnostics = criterion_to_json(s.criterion);
  diagnostics.erase("verdict");
  diagnostics["strategy"] = std::move(strategy);
  diagnostics["warnings"] = s.warnings;
  return Json{{"verdict", verdict_to_json(s.verdict)},
              {"strategy", s.strategy.tag()},
              {"basis_size", s.basis_size},
              {"distinct_count", s.distinct_count},
              {"roots", std::move(roots)},
              {"diagnostics", std::move(diagnostics)}};
}

Json family_to_json(const MultMatrixFamily& family) {
  Json basis = Json::array();
  for (const auto& b : family.basis.members()) basis.push_back(multi_index_to_json(b));
  Json mats = Json::array();
  for (const auto& a : family.matrices) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(scalar_to_json(a(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return Json{{"basis", std::move(basis)},
              {"A", std::move(mats)},
              {"unit_row_count", family.unit_row_count},
              {"coeff_row_count", family.coeff_row_count}};
}

}  // namespace bordereig::json_io

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bordereig/index_sets.hpp"
#include "bordereig/interp.hpp"
#include "bordereig/matrices.hpp"
#include "bordereig/spectral.hpp"
#include "bordereig/system.hpp"

// JSON wire formats. Scalars are written as [re, im]; on input a bare
// number is accepted as a real scalar. All readers throw ParseError with a
// JSON-pointer path to the offending field.
namespace bordereig::json_io {

using Json = nlohmann::json;

Json parse_document(std::string_view text);

Json scalar_to_json(Scalar s);
Scalar scalar_from_json(const Json& j, const std::string& path);

Json point_to_json(const Point& z);
Point point_from_json(const Json& j, int n, const std::string& path);

/// {"type":"total_degree","n":..,"m":..} when the set is a full total-degree
/// set, {"type":"explicit","n":..,"indices":[...]} otherwise.
Json index_set_to_json(const LowerSet& lower);
LowerSet index_set_from_json(const Json& j, const std::string& path = "",
                             std::size_t cap = kDefaultSizeCap);

/// {"index_set":..., "basis":[...], "relations":[{"alpha":[..],"coeffs":[[re,im],..]}]}
Json system_to_json(const BorderSystem& sys);
BorderSystem system_from_json(const Json& j, std::size_t cap = kDefaultSizeCap);

std::string serialize_system(const BorderSystem& sys);
BorderSystem parse_system(std::string_view text, std::size_t cap = kDefaultSizeCap);

/// {"n":2, "points":[[[re,im],[re,im]], ...]}
Json points_to_json(const NodeSet& nodes);
NodeSet points_from_json(const Json& j);
NodeSet parse_points(std::string_view text);

/// Claimed roots for verification: either solve() output ({"roots":[{"z":..}]})
/// or a points document. Every point must have n coordinates.
std::vector<Point> roots_from_json(const Json& j, int n);

Json poisedness_to_json(const PoisednessReport& r);
Json commutation_to_json(const CommutationReport& r);
Json semisimplicity_to_json(const SemisimplicityReport& r, const EigenDecomposition& dec);
Json verdict_to_json(const Verdict& v);
Json criterion_to_json(const CriterionReport& r);
Json solution_to_json(const SolutionSet& s);
Json family_to_json(const MultMatrixFamily& family);

}  // namespace bordereig::json_io

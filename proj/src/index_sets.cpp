#include "bordereig/index_sets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "bordereig/error.hpp"

namespace bordereig {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InvalidArgumentError("negative exponent in multi-index");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents)) {}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int direction) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(direction)] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::raised(int direction) const {
  MultiIndex out = *this;
  ++out.exponents_[static_cast<std::size_t>(direction)];
  ++out.degree_;
  return out;
}

std::optional<MultiIndex> MultiIndex::lowered(int direction) const {
  if (exponents_[static_cast<std::size_t>(direction)] == 0) return std::nullopt;
  MultiIndex out = *this;
  --out.exponents_[static_cast<std::size_t>(direction)];
  --out.degree_;
  return out;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) os << ',';
    os << exponents_[i];
  }
  os << ')';
  return os.str();
}

bool canonical_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  // Larger leading exponent comes first within a degree.
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : a.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // result * (n - k + j) / j stays integral at every step.
    const std::uint64_t factor = n - k + j;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / j;
  }
  return result;
}

// ---------------------------------------------------------------------------

LowerSet::LowerSet(int dimension, std::vector<MultiIndex> sorted_members)
    : dimension_(dimension), members_(std::move(sorted_members)) {
  position_.reserve(members_.size());
  for (std::size_t k = 0; k < members_.size(); ++k) position_.emplace(members_[k], k);
}

std::optional<std::size_t> LowerSet::position(const MultiIndex& a) const {
  auto it = position_.find(a);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

int LowerSet::max_degree() const noexcept {
  return members_.empty() ? -1 : members_.back().degree();
}

BorderSet::BorderSet(std::vector<MultiIndex> members, std::vector<BorderGenerator> generators)
    : members_(std::move(members)), generators_(std::move(generators)) {
  position_.reserve(members_.size());
  for (std::size_t k = 0; k < members_.size(); ++k) position_.emplace(members_[k], k);
}

std::optional<std::size_t> BorderSet::position(const MultiIndex& a) const {
  auto it = position_.find(a);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

// Appends every exponent vector of total degree `degree` in n variables,
// in descending lexicographic order.
void append_degree(int n, int degree, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  const int remaining_vars = n - static_cast<int>(prefix.size());
  if (remaining_vars == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    append_degree(n, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

LowerSet total_degree_set(int n, int m, std::size_t cap) {
  if (n < 1) throw InvalidArgumentError("dimension n must be >= 1");
  if (m < 1) throw InvalidArgumentError("degree m must be >= 1");
  const std::uint64_t count =
      binomial(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(m),
               static_cast<std::uint64_t>(n));
  if (count > cap) {
    throw SizeLimitError("total-degree set n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " exceeds size cap " + std::to_string(cap));
  }
  std::vector<MultiIndex> members;
  members.reserve(static_cast<std::size_t>(count));
  std::vector<int> prefix;
  for (int d = 0; d <= m; ++d) append_degree(n, d, prefix, members);
  return LowerSet(n, std::move(members));
}

LowerSet validate_lower_set(std::vector<MultiIndex> candidates, int n, std::size_t cap) {
  if (n < 1) throw InvalidArgumentError("dimension n must be >= 1");
  if (candidates.size() > cap) {
    throw SizeLimitError("lower set of " + std::to_string(candidates.size()) +
                         " indices exceeds size cap " + std::to_string(cap));
  }
  for (const auto& a : candidates) {
    if (a.dimension() != n) {
      throw InvalidArgumentError("multi-index " + a.to_string() + " has length " +
                                 std::to_string(a.dimension()) + ", expected " +
                                 std::to_string(n));
    }
  }
  std::sort(candidates.begin(), candidates.end(), canonical_less);
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k] == candidates[k - 1]) {
      throw DuplicateIndexError("duplicate multi-index " + candidates[k].to_string());
    }
  }
  LowerSet out(n, std::move(candidates));
  for (const auto& a : out.members()) {
    for (int i = 0; i < n; ++i) {
      auto below = a.lowered(i);
      if (below && !out.contains(*below)) {
        throw ClosureViolationError("multi-index " + a.to_string() + " is missing predecessor " +
                                    below->to_string());
      }
    }
  }
  return out;
}

BorderSet border(const LowerSet& lower, std::size_t cap) {
  if (lower.empty()) throw InvalidArgumentError("border of an empty lower set");
  const int n = lower.dimension();
  std::vector<std::pair<MultiIndex, BorderGenerator>> found;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> seen;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      MultiIndex up = lower[k].raised(i);
      if (lower.contains(up) || seen.contains(up)) continue;
      seen.emplace(up, found.size());
      found.push_back({std::move(up), BorderGenerator{k, i}});
      if (found.size() > cap) {
        throw SizeLimitError("border exceeds size cap " + std::to_string(cap));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::vector<MultiIndex> members;
  std::vector<BorderGenerator> generators;
  members.reserve(found.size());
  generators.reserve(found.size());
  for (auto& [alpha, gen] : found) {
    members.push_back(std::move(alpha));
    generators.push_back(gen);
  }
  return BorderSet(std::move(members), std::move(generators));
}

}  // namespace bordereig

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bordereig {

inline constexpr std::size_t kDefaultSizeCap = 10000;

/// Exponent vector of a monomial x^alpha in n variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents);

  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int direction);

  int dimension() const noexcept { return static_cast<int>(exponents_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const noexcept { return exponents_; }

  /// alpha + e_i
  MultiIndex raised(int direction) const;
  /// alpha - e_i, or nullopt when alpha_i == 0.
  std::optional<MultiIndex> lowered(int direction) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Canonical order: total degree first, then lexicographically descending
/// with the first coordinate most significant, so in two variables the
/// order reads 1, x, y, x^2, xy, y^2, ...
bool canonical_less(const MultiIndex& a, const MultiIndex& b);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const noexcept;
};

/// Saturating binomial coefficient; returns UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Finite downward-closed set of multi-indices in canonical order.
class LowerSet {
 public:
  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<MultiIndex>& members() const noexcept { return members_; }
  const MultiIndex& operator[](std::size_t k) const { return members_[k]; }

  bool contains(const MultiIndex& a) const { return position_.contains(a); }
  std::optional<std::size_t> position(const MultiIndex& a) const;

  /// Largest total degree among members, -1 when empty.
  int max_degree() const noexcept;

  friend bool operator==(const LowerSet& a, const LowerSet& b) {
    return a.dimension_ == b.dimension_ && a.members_ == b.members_;
  }

 private:
  friend LowerSet total_degree_set(int, int, std::size_t);
  friend LowerSet validate_lower_set(std::vector<MultiIndex>, int, std::size_t);

  LowerSet(int dimension, std::vector<MultiIndex> sorted_members);

  int dimension_ = 0;
  std::vector<MultiIndex> members_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> position_;
};

/// How a border element was reached: members[base] + e_direction.
struct BorderGenerator {
  std::size_t base = 0;
  int direction = 0;
};

/// Multi-indices one unit step outside a lower set.
class BorderSet {
 public:
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<MultiIndex>& members() const noexcept { return members_; }
  const MultiIndex& operator[](std::size_t k) const { return members_[k]; }
  const std::vector<BorderGenerator>& generators() const noexcept { return generators_; }

  bool contains(const MultiIndex& a) const { return position_.contains(a); }
  std::optional<std::size_t> position(const MultiIndex& a) const;

 private:
  friend BorderSet border(const LowerSet&, std::size_t);

  BorderSet(std::vector<MultiIndex> members, std::vector<BorderGenerator> generators);

  std::vector<MultiIndex> members_;
  std::vector<BorderGenerator> generators_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> position_;
};

/// {alpha : |alpha| <= m} in n variables. Throws SizeLimitError when the
/// cardinality binomial(n+m, n) exceeds `cap`.
LowerSet total_degree_set(int n, int m, std::size_t cap = kDefaultSizeCap);

/// Checks that `candidates` is a downward-closed set of n-variate
/// multi-indices and returns it in canonical order.
/// Throws DuplicateIndexError, ClosureViolationError, SizeLimitError or
/// InvalidArgumentError (wrong length, negative entry).
LowerSet validate_lower_set(std::vector<MultiIndex> candidates, int n,
                            std::size_t cap = kDefaultSizeCap);

/// {beta + e_i : beta in I, beta + e_i not in I}, canonical order, with one
/// generator per member (the first one met scanning I in canonical order).
BorderSet border(const LowerSet& lower, std::size_t cap = kDefaultSizeCap);

}  // namespace bordereig

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latrec/multi_index.hpp"

namespace latrec {

enum class Domain { integers, nonnegative };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

/// Finite, deduplicated, lexicographically ordered set of multi-indices
/// sharing one dimension. Immutable after construction.
class IndexSet {
public:
  IndexSet() = default;
  /// Sorts and deduplicates `indices`; throws if a component has the wrong
  /// dimension or a negative entry appears in a nonnegative set.
  IndexSet(std::size_t dim, Domain domain, std::vector<MultiIndex> indices);

  std::size_t dim() const noexcept { return dim_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }

  const MultiIndex& operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }
  const std::vector<MultiIndex>& indices() const noexcept { return idx_; }

  bool contains(const MultiIndex& k) const { return pos_.count(k) != 0; }
  std::optional<std::size_t> position(const MultiIndex& k) const;
  bool contains_zero() const { return contains(MultiIndex(dim_)); }

  /// max_{k} max_j |k_j|, 0 for the empty set.
  Index max_abs() const noexcept;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.dim_ == b.dim_ && a.idx_ == b.idx_;
  }

private:
  std::size_t dim_ = 0;
  Domain domain_ = Domain::integers;
  std::vector<MultiIndex> idx_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> pos_;
};

/// Parameters of the weighted index sets {k in N_0^d : r(k) <= m}.
struct WeightedSetRule {
  enum class Kind { max, sum, product };
  Kind kind = Kind::max;
  std::vector<double> betas;  // 1 = beta_1 >= beta_2 >= ... > 0
  int degree = 1;             // m

  void validate(std::size_t d) const;
};

std::string to_string(WeightedSetRule::Kind k);
WeightedSetRule::Kind rule_kind_from_string(const std::string& s);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

IndexSet make_weighted_set(const WeightedSetRule& rule, std::size_t d,
                           std::size_t cap = kDefaultEnumerationCap);

/// M(L): every componentwise sign change of every index.
IndexSet mirrored(const IndexSet& L);
/// A (+) B = {a + b}.
IndexSet sum_set(const IndexSet& A, const IndexSet& B);
/// L (-) L = {k - k'}.
IndexSet difference_set(const IndexSet& L);

enum class ProjectionMode { zero, full };
std::string to_string(ProjectionMode m);
ProjectionMode projection_from_string(const std::string& s);

/// Projection onto the first s coordinates. `zero` keeps indices whose
/// trailing components vanish, `full` keeps every truncation.
IndexSet project(const IndexSet& L, std::size_t s, ProjectionMode mode);

/// sum_{k in L} 2^{|k|_0}
std::size_t sign_change_sum(const IndexSet& L);

bool is_downward_closed(const IndexSet& L);
bool is_centrally_symmetric(const IndexSet& L);
bool is_fully_sign_symmetric(const IndexSet& L);
bool is_tensor_product(const IndexSet& L);

struct SetReport {
  std::size_t cardinality = 0;
  Index max_abs = 0;
  bool downward_closed = false;
  bool centrally_symmetric = false;
  bool fully_sign_symmetric = false;
  bool tensor_product = false;
  std::size_t sign_change_sum = 0;  // sum 2^{|k|_0}
  std::size_t max_sign_changes = 0; // max 2^{|k|_0}
  std::size_t mirrored_size = 0;
  double log3_bound = 0.0;          // |L|^{ln 3 / ln 2}
  /// Populated only for downward closed sets; a nonempty list is an
  /// internal-consistency failure.
  std::vector<std::string> violations;
};

SetReport properties(const IndexSet& L);

}  // namespace latrec

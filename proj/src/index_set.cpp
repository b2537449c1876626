#include "latrec/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "latrec/errors.hpp"

namespace latrec {

std::string to_string(Domain d) { return d == Domain::integers ? "signed" : "nonneg"; }

Domain domain_from_string(const std::string& s) {
  if (s == "signed") return Domain::integers;
  if (s == "nonneg") return Domain::nonnegative;
  throw ParseError("unknown domain '" + s + "'");
}

IndexSet::IndexSet(std::size_t dim, Domain domain, std::vector<MultiIndex> indices)
    : dim_(dim), domain_(domain), idx_(std::move(indices)) {
  if (dim_ == 0) throw InvalidArgument("index set dimension must be >= 1");
  for (const auto& k : idx_) {
    if (k.dim() != dim_)
      throw DimensionMismatch("index " + k.to_string() + " does not have dimension " +
                              std::to_string(dim_));
    if (domain_ == Domain::nonnegative)
      for (Index v : k)
        if (v < 0) throw InvalidArgument("negative component in nonnegative set: " + k.to_string());
  }
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  pos_.reserve(idx_.size());
  for (std::size_t i = 0; i < idx_.size(); ++i) pos_.emplace(idx_[i], i);
}

std::optional<std::size_t> IndexSet::position(const MultiIndex& k) const {
  auto it = pos_.find(k);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

Index IndexSet::max_abs() const noexcept {
  Index m = 0;
  for (const auto& k : idx_) m = std::max(m, k.max_abs());
  return m;
}

// ---------------------------------------------------------------------------
// weighted sets

void WeightedSetRule::validate(std::size_t d) const {
  if (d == 0) throw InvalidArgument("dimension must be >= 1");
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  if (betas.size() < d)
    throw InvalidArgument("need " + std::to_string(d) + " weights, got " +
                          std::to_string(betas.size()));
  if (betas.front() != 1.0) throw InvalidArgument("first weight must equal 1");
  for (std::size_t j = 0; j < betas.size(); ++j) {
    if (!(betas[j] > 0.0) || !std::isfinite(betas[j]))
      throw InvalidArgument("weights must be positive and finite");
    if (j > 0 && betas[j] > betas[j - 1]) throw InvalidArgument("weights must be non-increasing");
  }
}

std::string to_string(WeightedSetRule::Kind k) {
  switch (k) {
    case WeightedSetRule::Kind::max: return "max";
    case WeightedSetRule::Kind::sum: return "sum";
    case WeightedSetRule::Kind::product: return "product";
  }
  return "?";
}

WeightedSetRule::Kind rule_kind_from_string(const std::string& s) {
  if (s == "max") return WeightedSetRule::Kind::max;
  if (s == "sum") return WeightedSetRule::Kind::sum;
  if (s == "product") return WeightedSetRule::Kind::product;
  throw ParseError("unknown rule kind '" + s + "'");
}

namespace {

// r(k) <= m is tested with a relative slack so that values such as
// 0.1 * 10 compare as intended.
constexpr double kRuleSlack = 1e-12;

bool within(double value, double m) { return value <= m * (1.0 + kRuleSlack); }

}  // namespace

IndexSet make_weighted_set(const WeightedSetRule& rule, std::size_t d, std::size_t cap) {
  rule.validate(d);
  const double m = rule.degree;
  std::vector<MultiIndex> out;
  MultiIndex k(d);

  // state: running value of r on the prefix (max / sum / product)
  std::function<void(std::size_t, double)> rec = [&](std::size_t j, double acc) {
    if (j == d) {
      if (out.size() >= cap)
        throw EnumerationCapExceeded("weighted set exceeds enumeration cap of " +
                                     std::to_string(cap));
      out.push_back(k);
      return;
    }
    const double beta = rule.betas[j];
    for (Index v = 0;; ++v) {
      const double ratio = static_cast<double>(v) / beta;
      double next = 0.0;
      switch (rule.kind) {
        case WeightedSetRule::Kind::max: next = std::max(acc, ratio); break;
        case WeightedSetRule::Kind::sum: next = acc + ratio; break;
        case WeightedSetRule::Kind::product: next = acc * std::max(1.0, ratio); break;
      }
      if (!within(next, m)) break;
      k[j] = v;
      rec(j + 1, next);
    }
    k[j] = 0;
  };
  rec(0, rule.kind == WeightedSetRule::Kind::product ? 1.0 : 0.0);
  return IndexSet(d, Domain::nonnegative, std::move(out));
}

// ---------------------------------------------------------------------------
// set algebra

IndexSet mirrored(const IndexSet& L) {
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  std::vector<MultiIndex> out;
  for (const auto& k : L)
    for (auto& h : unique_sign_changes(k))
      if (seen.insert(h).second) out.push_back(std::move(h));
  return IndexSet(L.dim(), Domain::integers, std::move(out));
}

IndexSet sum_set(const IndexSet& A, const IndexSet& B) {
  if (A.dim() != B.dim()) throw DimensionMismatch("sum_set: dimensions differ");
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  seen.reserve(A.size() * 2);
  std::vector<MultiIndex> out;
  for (const auto& a : A)
    for (const auto& b : B) {
      MultiIndex s = a + b;
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  const Domain dom = (A.domain() == Domain::nonnegative && B.domain() == Domain::nonnegative)
                         ? Domain::nonnegative
                         : Domain::integers;
  return IndexSet(A.dim(), dom, std::move(out));
}

IndexSet difference_set(const IndexSet& L) {
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  std::vector<MultiIndex> out;
  for (const auto& a : L)
    for (const auto& b : L) {
      MultiIndex s = a - b;
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  return IndexSet(L.dim(), Domain::integers, std::move(out));
}

std::string to_string(ProjectionMode m) { return m == ProjectionMode::zero ? "zero" : "full"; }

ProjectionMode projection_from_string(const std::string& s) {
  if (s == "zero") return ProjectionMode::zero;
  if (s == "full") return ProjectionMode::full;
  throw ParseError("unknown projection '" + s + "'");
}

IndexSet project(const IndexSet& L, std::size_t s, ProjectionMode mode) {
  if (s < 1 || s > L.dim())
    throw InvalidArgument("projection length " + std::to_string(s) + " outside [1, " +
                          std::to_string(L.dim()) + "]");
  if (s == L.dim()) return L;
  std::vector<MultiIndex> out;
  for (const auto& k : L)
    if (mode == ProjectionMode::full || k.tail_is_zero(s)) out.push_back(k.truncated(s));
  return IndexSet(s, L.domain(), std::move(out));
}

std::size_t sign_change_sum(const IndexSet& L) {
  std::size_t total = 0;
  for (const auto& k : L) total += std::size_t{1} << k.zero_count();
  return total;
}

// ---------------------------------------------------------------------------
// predicates

bool is_downward_closed(const IndexSet& L) {
  for (const auto& k : L)
    for (std::size_t j = 0; j < k.dim(); ++j) {
      if (k[j] == 0) continue;
      MultiIndex p = k;
      p[j] += k[j] > 0 ? -1 : 1;
      if (!L.contains(p)) return false;
    }
  return true;
}

bool is_centrally_symmetric(const IndexSet& L) {
  return std::all_of(L.begin(), L.end(), [&](const MultiIndex& k) { return L.contains(-k); });
}

bool is_fully_sign_symmetric(const IndexSet& L) {
  for (const auto& k : L)
    for (std::size_t j = 0; j < k.dim(); ++j) {
      if (k[j] == 0) continue;
      MultiIndex p = k;
      p[j] = -p[j];
      if (!L.contains(p)) return false;
    }
  return true;
}

bool is_tensor_product(const IndexSet& L) {
  if (L.empty()) return false;
  const std::size_t d = L.dim();
  MultiIndex lo = L[0], hi = L[0];
  for (const auto& k : L)
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], k[j]);
      hi[j] = std::max(hi[j], k[j]);
    }
  // L is inside its bounding box, so equal cardinality means equality.
  std::size_t box = 1;
  for (std::size_t j = 0; j < d; ++j) {
    box *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    if (box > L.size()) return false;
  }
  return box == L.size();
}

SetReport properties(const IndexSet& L) {
  SetReport r;
  r.cardinality = L.size();
  r.max_abs = L.max_abs();
  r.downward_closed = is_downward_closed(L);
  r.centrally_symmetric = is_centrally_symmetric(L);
  r.fully_sign_symmetric = is_fully_sign_symmetric(L);
  r.tensor_product = is_tensor_product(L);
  r.sign_change_sum = sign_change_sum(L);
  for (const auto& k : L)
    r.max_sign_changes = std::max(r.max_sign_changes, std::size_t{1} << k.zero_count());
  r.mirrored_size = L.empty() ? 0 : mirrored(L).size();
  const double card = static_cast<double>(L.size());
  r.log3_bound = std::pow(card, std::log(3.0) / std::log(2.0));

  if (r.downward_closed && !L.empty()) {
    const double slack = 1.0 + 1e-9;
    if (static_cast<double>(r.max_sign_changes) > card)
      r.violations.push_back("max 2^|k|_0 exceeds |L|");
    if (static_cast<double>(r.sign_change_sum) > r.log3_bound * slack)
      r.violations.push_back("sum 2^|k|_0 exceeds |L|^(ln3/ln2)");
    const double mirror_bound =
        std::min(std::ldexp(card, static_cast<int>(L.dim())), r.log3_bound) * slack;
    if (static_cast<double>(r.mirrored_size) > mirror_bound)
      r.violations.push_back("|M(L)| exceeds min(2^d |L|, |L|^(ln3/ln2))");
  }
  return r;
}

}  // namespace latrec

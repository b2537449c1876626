#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latrec/index_set.hpp"
#include "latrec/lattice.hpp"

namespace latrec {

enum class Space { fourier, cosine, chebyshev };
enum class Goal { integration, reconstruction };
enum class Plan { none, A, B, C };
enum class Strategy { brute_force, elimination, mixed };

std::string to_string(Space s);
std::string to_string(Goal g);
std::string to_string(Plan p);
std::string to_string(Strategy s);
Space space_from_string(const std::string& s);
Goal goal_from_string(const std::string& s);
Plan plan_from_string(const std::string& s);
Strategy strategy_from_string(const std::string& s);

/// Sampling map for a space: identity (Fourier), tent (cosine) or
/// cosine of tent (Chebyshev).
TransformKind transform_kind(Space s);

/// c_k: number of sign changes of k that alias onto k itself.
using CTable = std::map<MultiIndex, int>;

struct CbcTask {
  Space space = Space::fourier;
  Goal goal = Goal::reconstruction;
  Plan plan = Plan::none;
  IndexSet base_set;
  std::int64_t n = 0;  // 0 selects required_n
  ProjectionMode projection = ProjectionMode::full;
  Strategy strategy = Strategy::mixed;
  double mixed_switch_factor = 1.0;
  int retry_limit = 64;
  bool reduce_n = false;

  /// Throws InvalidTask on inconsistent combinations.
  void validate() const;
  /// True for plan C reconstruction (pairwise condition with self-aliasing).
  bool uses_plan_c() const { return goal == Goal::reconstruction && plan == Plan::C; }
};

/// Index set A whose nonzero members must avoid the dual lattice. Not
/// defined for plan C.
IndexSet condition_set(const CbcTask& task);

/// Smallest prime strictly above the existence bound for the task.
std::int64_t required_n(const CbcTask& task);

struct StepStats {
  int step = 0;
  std::string strategy;       // "brute_force" or "elimination"
  std::int64_t n_fail = 0;    // rejected brute-force candidates
  std::int64_t eliminated = 0;
  std::int64_t survivors = 0;
  std::int64_t chosen = 0;
};

struct CbcStats {
  std::vector<StepStats> steps;  // steps of the successful attempt
  std::optional<int> switch_step;
  std::vector<std::int64_t> attempted_n;
  std::int64_t required_n = 0;
  std::optional<std::int64_t> reduced_from;
  std::uint64_t verifier_visits = 0;
};

struct CbcResult {
  Rank1Lattice lattice;
  CTable c_table;  // plan C only
  CbcStats stats;
};

CbcResult cbc_construct(const CbcTask& task);

/// Full exactness check of a finished lattice with naive pairwise
/// arithmetic. Fills c_out for plan C.
bool condition_holds(const CbcTask& task, const Rank1Lattice& L, CTable* c_out = nullptr);

/// sigma(k') . z != k . z for all k != k' in L, sigma in S_{k'}; on success
/// returns the self-aliasing counts.
std::optional<CTable> naive_plan_c(const Rank1Lattice& L, const IndexSet& Lambda);

// ---------------------------------------------------------------------------
// smart lookup verifiers

enum class LookupKind { fourier, plan_a, plan_b, plan_c };

/// Residue lookup for one CBC step. Prefix residues of every (signed)
/// index of Ls are precomputed from z_prefix; check(z_s) then costs one
/// multiply-add per visited residue.
class SmartLookup {
public:
  SmartLookup(LookupKind kind, const IndexSet& Ls, std::span<const Index> z_prefix, std::int64_t n);

  bool check(std::int64_t z_last, CTable* c_out = nullptr);
  /// Residues visited by the last check.
  std::uint64_t last_visits() const noexcept { return visits_; }

private:
  struct Entry {
    std::int64_t prefix;
    std::int64_t last;
  };
  LookupKind kind_;
  std::int64_t n_;
  const IndexSet* set_;
  std::vector<Entry> entries_;
  std::vector<std::uint32_t> begin_;  // entries_ range of index i: [begin_[i], begin_[i+1])
  std::vector<std::uint32_t> s1_, s2_;
  std::uint32_t epoch_ = 0;
  std::uint64_t visits_ = 0;

  std::int64_t residue(const Entry& e, std::int64_t z) const { return (e.prefix + e.last * z) % n_; }
};

struct VerifyResult {
  bool ok = false;
  std::uint64_t visits = 0;
};

VerifyResult verify_fourier(const MultiIndex& z, std::int64_t n, const IndexSet& Ls);
VerifyResult verify_plan_a(const MultiIndex& z, std::int64_t n, const IndexSet& Ls);
/// Halved plan A: fixes the sign of the first nonzero component and marks
/// alpha and n - alpha together.
VerifyResult verify_plan_a_halved(const MultiIndex& z, std::int64_t n, const IndexSet& Ls);
VerifyResult verify_plan_b(const MultiIndex& z, std::int64_t n, const IndexSet& Ls);
VerifyResult verify_plan_c(const MultiIndex& z, std::int64_t n, const IndexSet& Ls, CTable* c_out = nullptr);

// ---------------------------------------------------------------------------
// elimination

/// Candidates 1..n-1 in a doubly linked list with O(1) removal.
class CandidateList {
public:
  explicit CandidateList(std::int64_t n);
  void remove(std::int64_t v);
  bool contains(std::int64_t v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  bool empty() const { return size_ == 0; }
  std::int64_t size() const { return size_; }
  /// Smallest surviving candidate, 0 if empty.
  std::int64_t first() const { return next_[0] == sentinel() ? 0 : next_[0]; }
  std::vector<std::int64_t> values() const;

private:
  std::int64_t sentinel() const { return static_cast<std::int64_t>(alive_.size()); }
  std::vector<std::int64_t> next_, prev_;
  std::vector<char> alive_;
  std::int64_t size_ = 0;
};

/// Removes every z_s with h . (z_prefix, z_s) == 0 (mod n) for some nonzero
/// h in A_s. Requires prime n. Throws EmptyCandidateSet when nothing
/// survives or a constraint excludes every z_s.
CandidateList eliminate_step(const IndexSet& A_s, std::span<const Index> z_prefix, std::int64_t n,
                             std::int64_t* eliminated = nullptr);

/// Plan C counterpart over the full projection Ls.
CandidateList eliminate_step_plan_c(const IndexSet& Ls, std::span<const Index> z_prefix, std::int64_t n,
                                    std::int64_t* eliminated = nullptr);

}  // namespace latrec

#include "latrec/cbc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latrec/errors.hpp"
#include "latrec/primes.hpp"

namespace latrec {

// ---------------------------------------------------------------------------
// enums

std::string to_string(Space s) {
  switch (s) {
    case Space::fourier: return "fourier";
    case Space::cosine: return "cosine";
    case Space::chebyshev: return "chebyshev";
  }
  return "?";
}

std::string to_string(Goal g) { return g == Goal::integration ? "integration" : "reconstruction"; }

std::string to_string(Plan p) {
  switch (p) {
    case Plan::none: return "none";
    case Plan::A: return "A";
    case Plan::B: return "B";
    case Plan::C: return "C";
  }
  return "?";
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::brute_force: return "brute_force";
    case Strategy::elimination: return "elimination";
    case Strategy::mixed: return "mixed";
  }
  return "?";
}

Space space_from_string(const std::string& s) {
  if (s == "fourier") return Space::fourier;
  if (s == "cosine") return Space::cosine;
  if (s == "chebyshev") return Space::chebyshev;
  throw ParseError("unknown space '" + s + "'");
}

Goal goal_from_string(const std::string& s) {
  if (s == "integration") return Goal::integration;
  if (s == "reconstruction") return Goal::reconstruction;
  throw ParseError("unknown goal '" + s + "'");
}

Plan plan_from_string(const std::string& s) {
  if (s == "none" || s.empty()) return Plan::none;
  if (s == "A" || s == "a") return Plan::A;
  if (s == "B" || s == "b") return Plan::B;
  if (s == "C" || s == "c") return Plan::C;
  throw ParseError("unknown plan '" + s + "'");
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "brute_force" || s == "brute") return Strategy::brute_force;
  if (s == "elimination") return Strategy::elimination;
  if (s == "mixed") return Strategy::mixed;
  throw ParseError("unknown strategy '" + s + "'");
}

TransformKind transform_kind(Space s) {
  switch (s) {
    case Space::fourier: return TransformKind::identity;
    case Space::cosine: return TransformKind::tent;
    case Space::chebyshev: return TransformKind::cosine_of_tent;
  }
  return TransformKind::identity;
}

// ---------------------------------------------------------------------------
// task

void CbcTask::validate() const {
  if (base_set.empty()) throw InvalidTask("index set is empty");
  if (space != Space::fourier) {
    if (base_set.domain() != Domain::nonnegative)
      for (const auto& k : base_set)
        for (Index v : k)
          if (v < 0) throw InvalidTask("cosine/Chebyshev index sets must be nonnegative");
  }
  const bool needs_plan = space != Space::fourier && goal == Goal::reconstruction;
  if (needs_plan && plan == Plan::none) throw InvalidTask("reconstruction in this space needs a plan");
  if (!needs_plan && plan != Plan::none)
    throw InvalidTask("plans apply only to cosine/Chebyshev reconstruction");
  if (n != 0 && n < 2) throw InvalidTask("n must be >= 2");
  if (n != 0 && strategy != Strategy::brute_force && !is_prime(static_cast<std::uint64_t>(n)))
    throw InvalidTask("elimination needs a prime n, got " + std::to_string(n));
  if (uses_plan_c() && projection != ProjectionMode::full)
    throw InvalidTask("plan C requires the full projection");
  if (!(mixed_switch_factor > 0.0)) throw InvalidTask("mixed switch factor must be positive");
  if (retry_limit < 0) throw InvalidTask("retry limit must be nonnegative");
}

IndexSet condition_set(const CbcTask& task) {
  const IndexSet& L = task.base_set;
  if (task.space == Space::fourier)
    return task.goal == Goal::integration ? L : difference_set(L);
  if (task.goal == Goal::integration) return mirrored(L);
  switch (task.plan) {
    case Plan::A: {
      IndexSet M = mirrored(L);
      return sum_set(M, M);
    }
    case Plan::B: return sum_set(L, mirrored(L));
    default: throw InvalidTask("plan C has no single condition set");
  }
}

namespace {

std::int64_t prime_above(double bound) {
  const double f = std::floor(std::max(bound, 0.0));
  return static_cast<std::int64_t>(next_prime(static_cast<std::uint64_t>(f)));
}

std::size_t without_zero(const IndexSet& A) { return A.size() - (A.contains_zero() ? 1 : 0); }

}  // namespace

std::int64_t required_n(const CbcTask& task) {
  const IndexSet& L = task.base_set;
  if (L.empty()) throw InvalidTask("index set is empty");
  const double mx = static_cast<double>(L.max_abs());
  double bound = 0.0;
  if (task.space == Space::fourier) {
    if (task.goal == Goal::integration) {
      const double kappa = is_centrally_symmetric(L) ? 2.0 : 1.0;
      bound = std::max(static_cast<double>(without_zero(L)) / kappa + 1.0, mx);
    } else {
      bound = std::max((static_cast<double>(difference_set(L).size()) + 1.0) / 2.0, 2.0 * mx);
    }
  } else if (task.goal == Goal::integration) {
    bound = std::max(static_cast<double>(without_zero(mirrored(L))) / 2.0 + 1.0, mx);
  } else {
    const IndexSet M = mirrored(L);
    switch (task.plan) {
      case Plan::A:
        bound = std::max((static_cast<double>(sum_set(M, M).size()) + 1.0) / 2.0, 2.0 * mx);
        break;
      case Plan::B:
        bound = std::max(static_cast<double>(sum_set(L, M).size()), 2.0 * mx);
        break;
      case Plan::C:
        bound = std::max(static_cast<double>(L.size()) * static_cast<double>(M.size()), 2.0 * mx);
        break;
      case Plan::none: throw InvalidTask("reconstruction in this space needs a plan");
    }
  }
  return prime_above(bound);
}

// ---------------------------------------------------------------------------
// naive oracles

std::optional<CTable> naive_plan_c(const Rank1Lattice& L, const IndexSet& Lambda) {
  std::vector<std::int64_t> res;
  std::vector<std::vector<std::int64_t>> mirror_res;
  for (const auto& k : Lambda) {
    res.push_back(L.residue(k));
    std::vector<std::int64_t> r;
    for (const auto& h : unique_sign_changes(k)) r.push_back(L.residue(h));
    mirror_res.push_back(std::move(r));
  }
  CTable c;
  for (std::size_t a = 0; a < Lambda.size(); ++a) {
    int count = 0;
    for (std::int64_t r : mirror_res[a])
      if (r == res[a]) ++count;
    c[Lambda[a]] = count;
    for (std::size_t b = 0; b < Lambda.size(); ++b) {
      if (a == b) continue;
      for (std::int64_t r : mirror_res[b])
        if (r == res[a]) return std::nullopt;
    }
  }
  return c;
}

bool condition_holds(const CbcTask& task, const Rank1Lattice& L, CTable* c_out) {
  if (L.dim() != task.base_set.dim()) throw DimensionMismatch("lattice and index set dimensions differ");
  if (task.uses_plan_c()) {
    auto c = naive_plan_c(L, task.base_set);
    if (!c) return false;
    if (c_out) *c_out = std::move(*c);
    return true;
  }
  return dual_check(L, condition_set(task));
}

// ---------------------------------------------------------------------------
// smart lookup

SmartLookup::SmartLookup(LookupKind kind, const IndexSet& Ls, std::span<const Index> z_prefix,
                         std::int64_t n)
    : kind_(kind), n_(n), set_(&Ls) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const std::size_t s = Ls.dim();
  if (z_prefix.size() + 1 != s) throw DimensionMismatch("generating vector prefix has wrong length");
  auto make = [&](const MultiIndex& h) {
    std::int64_t p = 0;
    for (std::size_t j = 0; j + 1 < s; ++j) p = (p + mod(h[j], n) * mod(z_prefix[j], n)) % n;
    return Entry{p, mod(h[s - 1], n)};
  };
  begin_.reserve(Ls.size() + 1);
  for (const auto& k : Ls) {
    begin_.push_back(static_cast<std::uint32_t>(entries_.size()));
    if (kind == LookupKind::fourier) {
      entries_.push_back(make(k));
    } else {
      for (const auto& h : unique_sign_changes(k)) entries_.push_back(make(h));
    }
  }
  begin_.push_back(static_cast<std::uint32_t>(entries_.size()));
  s1_.assign(static_cast<std::size_t>(n), 0);
  if (kind == LookupKind::plan_b || kind == LookupKind::plan_c) s2_.assign(static_cast<std::size_t>(n), 0);
}

bool SmartLookup::check(std::int64_t z_last, CTable* c_out) {
  if (++epoch_ == 0) {
    std::fill(s1_.begin(), s1_.end(), 0);
    std::fill(s2_.begin(), s2_.end(), 0);
    epoch_ = 1;
  }
  const std::uint32_t ep = epoch_;
  const std::int64_t z = mod(z_last, n_);
  visits_ = 0;
  if (c_out) c_out->clear();

  if (kind_ == LookupKind::fourier || kind_ == LookupKind::plan_a) {
    for (const auto& e : entries_) {
      const auto a = static_cast<std::size_t>(residue(e, z));
      ++visits_;
      if (s1_[a] == ep) return false;
      s1_[a] = ep;
    }
    return true;
  }

  const bool plan_c = kind_ == LookupKind::plan_c;
  for (std::size_t i = 0; i + 1 < begin_.size(); ++i) {
    const auto a = static_cast<std::size_t>(residue(entries_[begin_[i]], z));
    ++visits_;
    if (s2_[a] == ep) return false;
    s2_[a] = ep;
    if (!plan_c) s1_[a] = ep;
    int c = 1;
    for (std::uint32_t t = begin_[i] + 1; t < begin_[i + 1]; ++t) {
      const auto b = static_cast<std::size_t>(residue(entries_[t], z));
      ++visits_;
      if (b == a) ++c;
      if (s1_[b] == ep) return false;
      s2_[b] = ep;
    }
    if (plan_c) {
      s1_[a] = ep;
      if (c_out) (*c_out)[(*set_)[i]] = c;
    }
  }
  return true;
}

namespace {

VerifyResult run_lookup(LookupKind kind, const MultiIndex& z, std::int64_t n, const IndexSet& Ls,
                        CTable* c_out) {
  if (z.dim() != Ls.dim()) throw DimensionMismatch("generating vector and index set dimensions differ");
  auto comps = z.components();
  SmartLookup look(kind, Ls, comps.first(comps.size() - 1), n);
  VerifyResult r;
  r.ok = look.check(comps.back(), c_out);
  r.visits = look.last_visits();
  return r;
}

}  // namespace

VerifyResult verify_fourier(const MultiIndex& z, std::int64_t n, const IndexSet& Ls) {
  return run_lookup(LookupKind::fourier, z, n, Ls, nullptr);
}

VerifyResult verify_plan_a(const MultiIndex& z, std::int64_t n, const IndexSet& Ls) {
  return run_lookup(LookupKind::plan_a, z, n, Ls, nullptr);
}

VerifyResult verify_plan_b(const MultiIndex& z, std::int64_t n, const IndexSet& Ls) {
  return run_lookup(LookupKind::plan_b, z, n, Ls, nullptr);
}

VerifyResult verify_plan_c(const MultiIndex& z, std::int64_t n, const IndexSet& Ls, CTable* c_out) {
  CTable c;
  VerifyResult r = run_lookup(LookupKind::plan_c, z, n, Ls, &c);
  if (r.ok && c_out) *c_out = std::move(c);
  return r;
}

VerifyResult verify_plan_a_halved(const MultiIndex& z, std::int64_t n, const IndexSet& Ls) {
  if (z.dim() != Ls.dim()) throw DimensionMismatch("generating vector and index set dimensions differ");
  std::vector<char> S(static_cast<std::size_t>(n), 0);
  VerifyResult r;
  auto dot = [&](const MultiIndex& h) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < h.dim(); ++j) acc = (acc + mod(h[j], n) * mod(z[j], n)) % n;
    return acc;
  };
  if (Ls.contains_zero()) {
    S[0] = 1;
    ++r.visits;
  }
  for (const auto& k : Ls) {
    if (k.is_zero()) continue;
    const auto changes = unique_sign_changes(k);
    // the first half of the list keeps the sign of the first nonzero entry
    for (std::size_t t = 0; t < changes.size() / 2; ++t) {
      const std::int64_t a = dot(changes[t]);
      const std::int64_t b = (n - a) % n;
      r.visits += 2;
      if (S[static_cast<std::size_t>(a)]) return r;
      S[static_cast<std::size_t>(a)] = 1;
      if (S[static_cast<std::size_t>(b)]) return r;
      S[static_cast<std::size_t>(b)] = 1;
    }
  }
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------
// elimination

CandidateList::CandidateList(std::int64_t n) {
  const auto m = static_cast<std::size_t>(n);
  next_.resize(m);
  prev_.resize(m + 1);
  alive_.assign(m, 1);
  alive_[0] = 0;
  // node 0 is the head, node n the tail sentinel
  for (std::size_t v = 0; v < m; ++v) next_[v] = static_cast<std::int64_t>(v + 1);
  for (std::size_t v = 1; v <= m; ++v) prev_[v] = static_cast<std::int64_t>(v - 1);
  size_ = n - 1;
}

void CandidateList::remove(std::int64_t v) {
  if (v <= 0 || v >= sentinel() || !alive_[static_cast<std::size_t>(v)]) return;
  alive_[static_cast<std::size_t>(v)] = 0;
  const std::int64_t p = prev_[static_cast<std::size_t>(v)];
  const std::int64_t q = next_[static_cast<std::size_t>(v)];
  next_[static_cast<std::size_t>(p)] = q;
  prev_[static_cast<std::size_t>(q)] = p;
  --size_;
}

std::vector<std::int64_t> CandidateList::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = next_[0]; v != sentinel(); v = next_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

std::int64_t prefix_dot(const MultiIndex& h, std::span<const Index> z, std::int64_t n) {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < z.size(); ++j) acc = (acc + mod(h[j], n) * mod(z[j], n)) % n;
  return acc;
}

void require_prime(std::int64_t n) {
  if (!is_prime(static_cast<std::uint64_t>(n)))
    throw InvalidArgument("elimination needs a prime n, got " + std::to_string(n));
}

}  // namespace

CandidateList eliminate_step(const IndexSet& A_s, std::span<const Index> z_prefix, std::int64_t n,
                             std::int64_t* eliminated) {
  require_prime(n);
  const std::size_t s = A_s.dim();
  if (z_prefix.size() + 1 != s) throw DimensionMismatch("generating vector prefix has wrong length");
  const int step = static_cast<int>(s);
  CandidateList cand(n);
  std::int64_t removed = 0;
  for (const auto& h : A_s) {
    if (h.is_zero()) continue;
    const std::int64_t hs = mod(h[s - 1], n);
    const std::int64_t p = prefix_dot(h, z_prefix, n);
    if (hs == 0) {
      if (p == 0) throw EmptyCandidateSet("index " + h.to_string() + " lies in the dual lattice for every z_s", step);
      continue;
    }
    if (p == 0) continue;
    const auto inv = static_cast<std::int64_t>(inverse_mod_prime(static_cast<std::uint64_t>(hs), static_cast<std::uint64_t>(n)));
    const std::int64_t bad = mod(-p, n) * inv % n;
    if (cand.contains(bad)) {
      cand.remove(bad);
      ++removed;
    }
  }
  if (eliminated) *eliminated = removed;
  if (cand.empty()) throw EmptyCandidateSet("all candidates eliminated", step);
  return cand;
}

CandidateList eliminate_step_plan_c(const IndexSet& Ls, std::span<const Index> z_prefix, std::int64_t n,
                                    std::int64_t* eliminated) {
  require_prime(n);
  const std::size_t s = Ls.dim();
  if (z_prefix.size() + 1 != s) throw DimensionMismatch("generating vector prefix has wrong length");
  const int step = static_cast<int>(s);
  struct Item {
    std::int64_t prefix;
    std::int64_t last;
  };
  std::vector<Item> base;
  std::vector<std::vector<Item>> changes;
  for (const auto& k : Ls) {
    base.push_back({prefix_dot(k, z_prefix, n), mod(k[s - 1], n)});
    std::vector<Item> m;
    for (const auto& h : unique_sign_changes(k)) m.push_back({prefix_dot(h, z_prefix, n), mod(h[s - 1], n)});
    changes.push_back(std::move(m));
  }
  CandidateList cand(n);
  std::int64_t removed = 0;
  for (std::size_t a = 0; a < Ls.size(); ++a)
    for (std::size_t b = 0; b < Ls.size(); ++b) {
      if (a == b) continue;
      for (const auto& sg : changes[b]) {
        // (sigma_s k'_s - k_s) z_s == -(sigma(k') . z - k . z)
        const std::int64_t coef = mod(sg.last - base[a].last, n);
        const std::int64_t rhs = mod(-(sg.prefix - base[a].prefix), n);
        if (coef == 0) {
          if (rhs == 0)
            throw EmptyCandidateSet("indices " + Ls[a].to_string() + " and " + Ls[b].to_string() +
                                        " alias for every z_s",
                                    step);
          continue;
        }
        const auto inv = static_cast<std::int64_t>(
            inverse_mod_prime(static_cast<std::uint64_t>(coef), static_cast<std::uint64_t>(n)));
        const std::int64_t bad = rhs * inv % n;
        if (cand.contains(bad)) {
          cand.remove(bad);
          ++removed;
        }
      }
    }
  if (eliminated) *eliminated = removed;
  if (cand.empty()) throw EmptyCandidateSet("all candidates eliminated", step);
  return cand;
}

// ---------------------------------------------------------------------------
// construction

namespace {

LookupKind lookup_kind(const CbcTask& t) {
  if (t.space == Space::fourier) return LookupKind::fourier;
  switch (t.plan) {
    case Plan::A: return LookupKind::plan_a;
    case Plan::B: return LookupKind::plan_b;
    default: return LookupKind::plan_c;
  }
}

/// Per-step brute-force check: smart lookup on the full projection of the
/// base set for reconstruction, otherwise a dual-lattice scan of A_s.
class StepChecker {
public:
  StepChecker(const CbcTask& task, const IndexSet& A, std::size_t s, std::span<const Index> z_prefix,
              std::int64_t n)
      : n_(n) {
    const bool smart = task.goal == Goal::reconstruction && task.projection == ProjectionMode::full;
    if (smart) {
      Ls_ = project(task.base_set, s, ProjectionMode::full);
      lookup_.emplace(lookup_kind(task), Ls_, z_prefix, n);
      return;
    }
    const IndexSet As = project(A, s, task.projection);
    for (const auto& h : As) {
      if (h.is_zero()) continue;
      dual_.push_back({prefix_dot(h, z_prefix, n), mod(h[s - 1], n)});
    }
  }

  bool check(std::int64_t z, std::uint64_t& visits) {
    if (lookup_) {
      const bool ok = lookup_->check(z);
      visits += lookup_->last_visits();
      return ok;
    }
    for (const auto& [p, c] : dual_) {
      ++visits;
      if ((p + c * z) % n_ == 0) return false;
    }
    return true;
  }

private:
  std::int64_t n_;
  IndexSet Ls_;
  std::optional<SmartLookup> lookup_;
  std::vector<std::pair<std::int64_t, std::int64_t>> dual_;
};

struct Attempt {
  std::vector<Index> z;
  CbcStats stats;
};

Attempt run_attempt(const CbcTask& task, const IndexSet& A, std::int64_t n) {
  const std::size_t d = task.base_set.dim();
  Attempt out;
  std::vector<Index>& z = out.z;
  bool eliminating = task.strategy == Strategy::elimination;

  for (std::size_t s = 1; s <= d; ++s) {
    StepStats st;
    st.step = static_cast<int>(s);
    std::span<const Index> prefix(z.data(), z.size());

    if (!eliminating) {
      StepChecker checker(task, A, s, prefix, n);
      double threshold = std::numeric_limits<double>::infinity();
      if (task.strategy == Strategy::mixed) {
        const IndexSet Ls = project(task.base_set, s, ProjectionMode::full);
        const double size = task.space == Space::fourier ? static_cast<double>(Ls.size())
                                                         : static_cast<double>(mirrored(Ls).size());
        threshold = task.mixed_switch_factor * size;
      }
      // z_1 = 1 is the only candidate in the first step
      const std::int64_t tries = s == 1 ? 1 : n - 1;
      std::int64_t cand = s == 1 ? 1 : (z.back() % (n - 1)) + 1;
      bool found = false;
      for (std::int64_t t = 0; t < tries; ++t) {
        if (checker.check(cand, out.stats.verifier_visits)) {
          found = true;
          break;
        }
        ++st.n_fail;
        if (static_cast<double>(st.n_fail) > threshold) break;
        cand = cand % (n - 1) + 1;
      }
      if (found) {
        st.strategy = "brute_force";
        st.chosen = cand;
        z.push_back(cand);
        out.stats.steps.push_back(st);
        continue;
      }
      if (task.strategy != Strategy::mixed || !(static_cast<double>(st.n_fail) > threshold))
        throw EmptyCandidateSet("no candidate passed in step " + std::to_string(s), static_cast<int>(s));
      eliminating = true;
      out.stats.switch_step = static_cast<int>(s);
    }

    std::int64_t removed = 0;
    CandidateList cand = [&] {
      if (task.uses_plan_c())
        return eliminate_step_plan_c(project(task.base_set, s, ProjectionMode::full), prefix, n, &removed);
      const ProjectionMode mode =
          task.strategy == Strategy::mixed ? ProjectionMode::zero : task.projection;
      return eliminate_step(project(A, s, mode), prefix, n, &removed);
    }();
    std::int64_t pick = cand.first();
    if (s == 1) {
      if (!cand.contains(1)) throw EmptyCandidateSet("z_1 = 1 was eliminated", 1);
      pick = 1;
    }
    st.strategy = "elimination";
    st.eliminated = removed;
    st.survivors = cand.size();
    st.chosen = pick;
    z.push_back(pick);
    out.stats.steps.push_back(st);
  }
  return out;
}

bool is_zero_set(const IndexSet& L) { return L.size() == 1 && L.contains_zero(); }

}  // namespace

CbcResult cbc_construct(const CbcTask& task) {
  task.validate();
  const std::size_t d = task.base_set.dim();
  const IndexSet A = task.uses_plan_c() ? IndexSet() : condition_set(task);
  CbcResult res;
  res.stats.required_n = required_n(task);
  std::int64_t n = task.n != 0 ? task.n : res.stats.required_n;

  if (is_zero_set(task.base_set)) {
    res.lattice = Rank1Lattice(std::max<std::int64_t>(n, 2), MultiIndex(std::vector<Index>(d, 1)));
    res.stats.attempted_n.push_back(res.lattice.n());
    if (task.uses_plan_c()) res.c_table[task.base_set[0]] = 1;
    return res;
  }

  for (int attempt = 0;; ++attempt) {
    res.stats.attempted_n.push_back(n);
    try {
      Attempt a = run_attempt(task, A, n);
      res.lattice = Rank1Lattice(n, MultiIndex(std::move(a.z)));
      const auto attempted = std::move(res.stats.attempted_n);
      const auto reqn = res.stats.required_n;
      res.stats = std::move(a.stats);
      res.stats.attempted_n = attempted;
      res.stats.required_n = reqn;
      break;
    } catch (const EmptyCandidateSet& e) {
      if (attempt >= task.retry_limit)
        throw RetryLimitExceeded("construction failed at step " + std::to_string(e.step()) + " with n=" +
                                     std::to_string(n) + ": " + e.what(),
                                 e.step(), n);
      n = static_cast<std::int64_t>(next_prime(static_cast<std::uint64_t>(n)));
    }
  }

  if (!condition_holds(task, res.lattice, &res.c_table))
    throw Error("constructed lattice fails the exactness check (internal error)");

  if (task.reduce_n) {
    const std::int64_t start = res.lattice.n();
    for (auto p = static_cast<std::int64_t>(prev_prime(static_cast<std::uint64_t>(start))); p >= 2;
         p = static_cast<std::int64_t>(prev_prime(static_cast<std::uint64_t>(p)))) {
      std::vector<Index> zz;
      bool zero = false;
      for (Index v : res.lattice.z()) {
        zz.push_back(v % p);
        zero = zero || zz.back() == 0;
      }
      if (zero) break;
      Rank1Lattice cand(p, MultiIndex(std::move(zz)));
      CTable c;
      if (!condition_holds(task, cand, &c)) break;
      res.lattice = std::move(cand);
      res.c_table = std::move(c);
    }
    if (res.lattice.n() != start) res.stats.reduced_from = start;
  }
  return res;
}

}  // namespace latrec

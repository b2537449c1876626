#include <doctest.h>

#include "latrec/cbc.hpp"
#include "latrec/errors.hpp"
#include "test_support.hpp"

using namespace latrec;

namespace {

IndexSet nonneg(std::size_t d, std::vector<MultiIndex> v) { return IndexSet(d, Domain::nonnegative, std::move(v)); }

CbcTask task_for(Space sp, Goal g, Plan p, IndexSet L, Strategy st = Strategy::mixed) {
  CbcTask t;
  t.space = sp;
  t.goal = g;
  t.plan = p;
  t.base_set = std::move(L);
  t.strategy = st;
  return t;
}

std::vector<Index> zvec(const MultiIndex& z) { return {z.begin(), z.end()}; }

}  // namespace

TEST_CASE("required n") {
  WeightedSetRule box{WeightedSetRule::Kind::max, {1, 1}, 2};
  CHECK(required_n(task_for(Space::fourier, Goal::reconstruction, Plan::none, make_weighted_set(box, 2))) == 17);
  CHECK(required_n(task_for(Space::cosine, Goal::reconstruction, Plan::C, nonneg(1, {{0}, {1}}))) == 7);
  CHECK(required_n(task_for(Space::fourier, Goal::integration, Plan::none,
                            IndexSet(1, Domain::integers, {{0}, {1}, {-1}}))) == 3);
  // plan A on {0,1}: M + M = {-2..2}, bound max(3, 2) -> 5
  CHECK(required_n(task_for(Space::cosine, Goal::reconstruction, Plan::A, nonneg(1, {{0}, {1}}))) == 5);
  // plan B on {0,1}: L + M = {-1,0,1,2}, bound 4 -> 5
  CHECK(required_n(task_for(Space::chebyshev, Goal::reconstruction, Plan::B, nonneg(1, {{0}, {1}}))) == 5);
  // cosine integration on {0,1}: |M \ 0| = 2, bound max(2, 1) -> 3
  CHECK(required_n(task_for(Space::cosine, Goal::integration, Plan::none, nonneg(1, {{0}, {1}}))) == 3);
}

TEST_CASE("task validation") {
  auto t = task_for(Space::cosine, Goal::reconstruction, Plan::C, nonneg(1, {{0}, {1}}));
  t.projection = ProjectionMode::zero;
  CHECK_THROWS_AS(t.validate(), InvalidTask);
  t = task_for(Space::fourier, Goal::reconstruction, Plan::A, nonneg(1, {{0}, {1}}));
  CHECK_THROWS_AS(t.validate(), InvalidTask);
  t = task_for(Space::cosine, Goal::reconstruction, Plan::none, nonneg(1, {{0}, {1}}));
  CHECK_THROWS_AS(t.validate(), InvalidTask);
  t = task_for(Space::fourier, Goal::reconstruction, Plan::none, nonneg(1, {{0}, {1}}), Strategy::elimination);
  t.n = 4;
  CHECK_THROWS_AS(t.validate(), InvalidTask);
  t.strategy = Strategy::brute_force;
  CHECK_NOTHROW(t.validate());
  t = task_for(Space::cosine, Goal::integration, Plan::none, IndexSet(1, Domain::integers, {{-1}}));
  CHECK_THROWS_AS(t.validate(), InvalidTask);
}

TEST_CASE("verifier examples") {
  const IndexSet L01 = nonneg(1, {{0}, {1}});
  CHECK(verify_plan_a(MultiIndex{1}, 5, L01).ok);
  CHECK_FALSE(verify_plan_a(MultiIndex{1}, 2, L01).ok);
  CHECK(verify_plan_a(MultiIndex{3}, 7, nonneg(1, {{0}})).ok);

  CHECK(verify_plan_b(MultiIndex{1}, 3, L01).ok);
  CHECK_FALSE(verify_plan_b(MultiIndex{1}, 2, nonneg(1, {{1}})).ok);
  CHECK(verify_plan_b(MultiIndex{1}, 3, nonneg(1, {{0}})).ok);

  CTable c;
  CHECK(verify_plan_c(MultiIndex{1}, 2, nonneg(1, {{1}}), &c).ok);
  CHECK(c == CTable{{MultiIndex{1}, 2}});
  CHECK(verify_plan_c(MultiIndex{1}, 5, L01, &c).ok);
  CHECK(c == CTable{{MultiIndex{0}, 1}, {MultiIndex{1}, 1}});
  CHECK(verify_plan_c(MultiIndex{1}, 4, nonneg(1, {{0}, {1}, {2}}), &c).ok);
  CHECK(c == CTable{{MultiIndex{0}, 1}, {MultiIndex{1}, 1}, {MultiIndex{2}, 2}});

  const IndexSet box = nonneg(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(verify_fourier(MultiIndex{1, 4}, 17, box).ok);
  CHECK_FALSE(verify_fourier(MultiIndex{1}, 17, nonneg(1, {{0}, {17}})).ok);
  CHECK(verify_fourier(MultiIndex{1}, 17, nonneg(1, {{5}})).ok);
}

TEST_CASE("verifiers agree with oracles and nest") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    const std::size_t d = 1 + rng() % 4;
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 100);
    const IndexSet L = t % 2 ? testing::random_downward_closed(rng, d, 1 + rng() % 12, false)
                             : testing::random_set(rng, d, 1 + rng() % 8, 0, 4);
    std::vector<Index> z(d);
    for (auto& v : z) v = static_cast<Index>(rng() % n);
    const MultiIndex zm(z);
    const auto M = testing::all_sign_images(L);

    const bool f = verify_fourier(zm, n, L).ok;
    CHECK(f == testing::pairwise_distinct_oracle(L.indices(), z, n));
    const bool a = verify_plan_a(zm, n, L).ok;
    CHECK(a == testing::pairwise_distinct_oracle(M, z, n));
    CHECK(a == verify_plan_a_halved(zm, n, L).ok);
    const bool b = verify_plan_b(zm, n, L).ok;
    // plan B: k . z differs from every sigma(k') . z with sigma(k') != k
    bool b_oracle = true;
    for (const auto& k : L)
      for (const auto& h : M)
        if (h != k && testing::residue(h, z, n) == testing::residue(k, z, n)) b_oracle = false;
    CHECK(b == b_oracle);
    CTable c;
    const bool cc = verify_plan_c(zm, n, L, &c).ok;
    CHECK(cc == testing::plan_c_oracle(L, z, n));
    if (a) CHECK(b);
    if (b) {
      CHECK(cc);
      for (const auto& [k, v] : c) CHECK(v == 1);
    }
    if (cc) {
      for (const auto& [k, v] : c) {
        CHECK(v >= 1);
        CHECK(v <= (1 << k.zero_count()));
      }
    }
  }
}

TEST_CASE("elimination step") {
  const std::vector<Index> none;
  auto c1 = eliminate_step(nonneg(1, {{1}}), none, 5);
  CHECK(c1.values() == std::vector<std::int64_t>{1, 2, 3, 4});
  const std::vector<Index> one{1};
  auto c2 = eliminate_step(nonneg(2, {{1, 2}}), one, 5);
  CHECK(c2.values() == std::vector<std::int64_t>{1, 3, 4});
  CHECK(c2.first() == 1);
  CHECK_THROWS_AS(eliminate_step(nonneg(2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}), one, 5), EmptyCandidateSet);
  CHECK_THROWS_AS(eliminate_step(nonneg(2, {{5, 5}}), one, 5), EmptyCandidateSet);
  CHECK_THROWS_AS(eliminate_step(nonneg(2, {{1, 2}}), one, 6), InvalidArgument);

  CandidateList cl(7);
  cl.remove(3);
  cl.remove(1);
  cl.remove(1);
  CHECK(cl.size() == 4);
  CHECK(cl.first() == 2);
  CHECK(cl.values() == std::vector<std::int64_t>{2, 4, 5, 6});
}

TEST_CASE("elimination survivors pass the condition") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng() % 3;
    const IndexSet L = testing::random_downward_closed(rng, d, 2 + rng() % 10, true);
    const IndexSet A = difference_set(L);
    const std::int64_t n = testing::random_prime_at_most(rng, 3, 61);
    std::vector<Index> prefix(d - 1);
    for (auto& v : prefix) v = 1 + static_cast<Index>(rng() % (n - 1));
    const IndexSet As = project(A, d, ProjectionMode::zero);
    try {
      std::int64_t removed = 0;
      auto cand = eliminate_step(As, prefix, n, &removed);
      for (std::int64_t zs = 1; zs < n; ++zs) {
        std::vector<Index> z = prefix;
        z.push_back(zs);
        bool good = true;
        for (const auto& h : As)
          if (!h.is_zero() && testing::residue(h, z, n) == 0) good = false;
        // survivors are exactly the z_s whose new indices avoid the dual lattice,
        // given a prefix that is itself good on the lower-dimensional indices
        bool prefix_good = true;
        for (const auto& h : As)
          if (h[d - 1] == 0 && !h.is_zero() && testing::residue(h, z, n) == 0) prefix_good = false;
        if (prefix_good) CHECK(cand.contains(zs) == good);
      }
      // central symmetry: h and -h remove the same candidate
      const auto fresh = static_cast<std::int64_t>(As.size() - project(A, d - 1, ProjectionMode::zero).size());
      CHECK(removed <= fresh / 2);
    } catch (const EmptyCandidateSet&) {
    }
  }
}

TEST_CASE("cbc examples") {
  WeightedSetRule r{WeightedSetRule::Kind::max, {1, 1}, 1};
  const IndexSet box = make_weighted_set(r, 2);
  auto t = task_for(Space::fourier, Goal::reconstruction, Plan::none, box);
  t.n = 17;
  const CbcResult res = cbc_construct(t);
  CHECK(res.lattice.n() == 17);
  CHECK(res.lattice.z()[0] == 1);
  CHECK(testing::pairwise_distinct_oracle(box.indices(), zvec(res.lattice.z()), 17));

  auto ta = task_for(Space::cosine, Goal::reconstruction, Plan::A, nonneg(1, {{0}, {1}}));
  const CbcResult ra = cbc_construct(ta);
  CHECK(ra.lattice == Rank1Lattice(5, MultiIndex{1}));

  auto t0 = task_for(Space::chebyshev, Goal::reconstruction, Plan::C, nonneg(3, {{0, 0, 0}}));
  const CbcResult r0 = cbc_construct(t0);
  CHECK(r0.lattice.z() == MultiIndex{1, 1, 1});
  CHECK(r0.c_table.at(MultiIndex{0, 0, 0}) == 1);
}

TEST_CASE("strategies agree on validity") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + rng() % 4;
    const IndexSet L = testing::random_downward_closed(rng, d, 2 + rng() % 15, false);
    const Space sp = static_cast<Space>(rng() % 3);
    const Goal g = rng() % 4 == 0 ? Goal::integration : Goal::reconstruction;
    Plan p = Plan::none;
    if (sp != Space::fourier && g == Goal::reconstruction) p = static_cast<Plan>(1 + rng() % 3);
    for (auto st : {Strategy::brute_force, Strategy::elimination, Strategy::mixed}) {
      auto task = task_for(sp, g, p, L, st);
      const CbcResult res = cbc_construct(task);
      CHECK(condition_holds(task, res.lattice));
      CHECK(res.lattice.n() == required_n(task));
      CHECK(res.stats.attempted_n.size() == 1);
      CHECK(res.lattice.z()[0] == 1);
      if (task.uses_plan_c()) CHECK(res.c_table.size() == L.size());
    }
  }
}

TEST_CASE("mixed strategy switches and still validates") {
  WeightedSetRule r{WeightedSetRule::Kind::product, {1, 1, 1}, 6};
  const IndexSet L = make_weighted_set(r, 3);
  for (Plan p : {Plan::A, Plan::B, Plan::C}) {
    auto task = task_for(Space::cosine, Goal::reconstruction, p, L, Strategy::mixed);
    task.mixed_switch_factor = 1e-3;
    const CbcResult res = cbc_construct(task);
    REQUIRE(res.stats.switch_step.has_value());
    const int s = *res.stats.switch_step;
    CHECK(s >= 2);
    for (const auto& st : res.stats.steps) CHECK(st.strategy == (st.step < s ? "brute_force" : "elimination"));
    CHECK(condition_holds(task, res.lattice));
  }
  auto gen = task_for(Space::fourier, Goal::reconstruction, Plan::none, L);
  gen.n = 1009;
  CHECK_FALSE(cbc_construct(gen).stats.switch_step.has_value());
}

TEST_CASE("restart, retry limit and n reduction") {
  WeightedSetRule r{WeightedSetRule::Kind::sum, {1, 1}, 4};
  const IndexSet L = make_weighted_set(r, 2);
  auto t = task_for(Space::fourier, Goal::reconstruction, Plan::none, L, Strategy::brute_force);
  t.n = 5;
  const CbcResult res = cbc_construct(t);
  CHECK(res.stats.attempted_n.front() == 5);
  CHECK(res.stats.attempted_n.size() > 1);
  CHECK(res.lattice.n() == res.stats.attempted_n.back());
  CHECK(condition_holds(t, res.lattice));

  t.retry_limit = 0;
  try {
    cbc_construct(t);
    FAIL("expected RetryLimitExceeded");
  } catch (const RetryLimitExceeded& e) {
    CHECK(e.last_n() == 5);
    CHECK(e.failing_step() >= 1);
  }

  auto u = task_for(Space::cosine, Goal::reconstruction, Plan::B, L);
  u.reduce_n = true;
  const CbcResult red = cbc_construct(u);
  CHECK(red.lattice.n() <= required_n(u));
  CHECK(condition_holds(u, red.lattice));
  if (red.stats.reduced_from) CHECK(*red.stats.reduced_from == required_n(u));
}

TEST_CASE("composite n with brute force") {
  auto t = task_for(Space::fourier, Goal::integration, Plan::none, nonneg(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                    Strategy::brute_force);
  t.n = 8;
  const CbcResult res = cbc_construct(t);
  CHECK(res.lattice.n() == 8);
  CHECK(condition_holds(t, res.lattice));
}

TEST_CASE("visit counters") {
  WeightedSetRule r{WeightedSetRule::Kind::product, {1, 0.8, 0.6}, 5};
  const IndexSet L = make_weighted_set(r, 3);
  auto t = task_for(Space::cosine, Goal::reconstruction, Plan::A, L);
  const CbcResult res = cbc_construct(t);
  for (std::size_t s = 1; s <= 3; ++s) {
    const IndexSet Ls = project(L, s, ProjectionMode::full);
    MultiIndex z = res.lattice.z().truncated(s);
    const auto n = res.lattice.n();
    const auto fa = verify_plan_a(z, n, Ls), fb = verify_plan_b(z, n, Ls), fc = verify_plan_c(z, n, Ls),
               ff = verify_fourier(z, n, Ls);
    REQUIRE(fa.ok);
    CHECK(fa.visits == mirrored(Ls).size());
    CHECK(fb.visits == mirrored(Ls).size());
    CHECK(fc.visits == mirrored(Ls).size());
    CHECK(ff.visits == Ls.size());
  }
}

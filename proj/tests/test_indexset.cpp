#include <doctest.h>

#include <cmath>

#include "latrec/errors.hpp"
#include "latrec/index_set.hpp"
#include "test_support.hpp"

using namespace latrec;

namespace {

IndexSet nonneg(std::size_t d, std::vector<MultiIndex> v) { return IndexSet(d, Domain::nonnegative, std::move(v)); }
IndexSet signed_set(std::size_t d, std::vector<MultiIndex> v) { return IndexSet(d, Domain::integers, std::move(v)); }

IndexSet box(std::size_t d, Index lo, Index hi) {
  std::vector<MultiIndex> v;
  MultiIndex k(d);
  for (std::size_t j = 0; j < d; ++j) k[j] = lo;
  for (;;) {
    v.push_back(k);
    std::size_t j = 0;
    while (j < d && k[j] == hi) k[j++] = lo;
    if (j == d) break;
    ++k[j];
  }
  return IndexSet(d, lo >= 0 ? Domain::nonnegative : Domain::integers, v);
}

/// Exhaustive filter of a bounding box by the rule.
IndexSet weighted_oracle(const WeightedSetRule& r, std::size_t d, Index bound) {
  std::vector<MultiIndex> v;
  for (const auto& k : box(d, 0, bound)) {
    double val = r.kind == WeightedSetRule::Kind::product ? 1.0 : 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double q = static_cast<double>(k[j]) / r.betas[j];
      if (r.kind == WeightedSetRule::Kind::max) val = std::max(val, q);
      if (r.kind == WeightedSetRule::Kind::sum) val += q;
      if (r.kind == WeightedSetRule::Kind::product) val *= std::max(1.0, q);
    }
    if (val <= r.degree + 1e-9) v.push_back(k);
  }
  return nonneg(d, v);
}

}  // namespace

TEST_CASE("multi-index basics") {
  MultiIndex k{2, 0, -3};
  CHECK(k.zero_count() == 2);
  CHECK(k.max_abs() == 3);
  CHECK(k.truncated(2) == MultiIndex{2, 0});
  CHECK(MultiIndex{1, 0, 0}.tail_is_zero(1));
  CHECK_FALSE(k.tail_is_zero(2));
  CHECK((k + MultiIndex{1, 1, 1}) == MultiIndex{3, 1, -2});
  CHECK(-k == MultiIndex{-2, 0, 3});
  CHECK(MultiIndex{3}.to_string() == "(3,)");
  CHECK_THROWS_AS((k + MultiIndex{1, 2}), DimensionMismatch);
}

TEST_CASE("unique sign changes") {
  CHECK(unique_sign_changes(MultiIndex{0, 0}) == std::vector<MultiIndex>{{0, 0}});
  CHECK(unique_sign_changes(MultiIndex{1, 0}) == std::vector<MultiIndex>{{1, 0}, {-1, 0}});
  CHECK(unique_sign_changes(MultiIndex{2, 3}) == std::vector<MultiIndex>{{2, 3}, {2, -3}, {-2, 3}, {-2, -3}});
  for (const auto& k : {MultiIndex{0, 4, 0, -1}, MultiIndex{1, 1, 1}}) {
    auto s = unique_sign_changes(k);
    CHECK(s.size() == (std::size_t{1} << k.zero_count()));
    CHECK(s.front() == k);
    CHECK(std::set<MultiIndex>(s.begin(), s.end()).size() == s.size());
  }
}

TEST_CASE("index set construction") {
  IndexSet L = signed_set(2, {{1, 0}, {0, 0}, {1, 0}});
  CHECK(L.size() == 2);
  CHECK(L[0] == MultiIndex{0, 0});
  CHECK(L.contains_zero());
  CHECK(L.position(MultiIndex{1, 0}) == 1u);
  CHECK_THROWS_AS((IndexSet(2, Domain::nonnegative, {{-1, 0}})), InvalidArgument);
  CHECK_THROWS_AS((IndexSet(2, Domain::integers, {{1}})), DimensionMismatch);
}

TEST_CASE("weighted sets") {
  WeightedSetRule r;
  r.kind = WeightedSetRule::Kind::max;
  r.betas = {1, 1};
  r.degree = 2;
  CHECK(make_weighted_set(r, 2) == box(2, 0, 2));

  r.kind = WeightedSetRule::Kind::product;
  r.degree = 3;
  const IndexSet hc = make_weighted_set(r, 2);
  CHECK(hc == nonneg(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}));
  CHECK(hc == weighted_oracle(r, 2, 3));

  r.kind = WeightedSetRule::Kind::sum;
  r.betas = {1, 0.5};
  r.degree = 1;
  CHECK(make_weighted_set(r, 2) == nonneg(2, {{0, 0}, {1, 0}}));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + rng() % 4;
    WeightedSetRule q;
    q.kind = static_cast<WeightedSetRule::Kind>(rng() % 3);
    q.degree = 1 + static_cast<int>(rng() % 6);
    q.betas = {1.0};
    for (std::size_t j = 1; j < d; ++j) q.betas.push_back(q.betas.back() * (0.3 + 0.7 * (rng() % 100) / 100.0));
    const IndexSet L = make_weighted_set(q, d);
    CHECK(L == weighted_oracle(q, d, q.degree));
    CHECK(is_downward_closed(L));
  }

  CHECK_THROWS_AS((make_weighted_set(WeightedSetRule{WeightedSetRule::Kind::max, {0.5, 1}, 2}, 2)), InvalidArgument);
  CHECK_THROWS_AS((make_weighted_set(WeightedSetRule{WeightedSetRule::Kind::max, {1, 1}, 0}, 2)), InvalidArgument);
  CHECK_THROWS_AS((make_weighted_set(WeightedSetRule{WeightedSetRule::Kind::max, {1, 1, 1}, 20}, 3, 1000)),
                  EnumerationCapExceeded);
}

TEST_CASE("max-rule closed forms") {
  WeightedSetRule r{WeightedSetRule::Kind::max, {1.0, 0.7, 0.5, 0.25}, 5};
  for (std::size_t d = 1; d <= 4; ++d) {
    const IndexSet L = make_weighted_set(r, d);
    std::size_t a = 1, b = 1;
    for (std::size_t j = 0; j < d; ++j) {
      const auto f = static_cast<std::size_t>(std::floor(r.betas[j] * r.degree + 1e-12));
      a *= 1 + f;
      b *= 1 + 2 * f;
    }
    CHECK(L.size() == a);
    CHECK(mirrored(L).size() == b);
  }
}

TEST_CASE("mirrored set") {
  CHECK(mirrored(box(2, 0, 1)) == box(2, -1, 1));
  CHECK(mirrored(nonneg(1, {{0}})) == signed_set(1, {{0}}));
  CHECK(mirrored(nonneg(2, {{1, 2}})) == signed_set(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const IndexSet L = testing::random_set(rng, 1 + rng() % 4, 1 + rng() % 20, -3, 3);
    const IndexSet M = mirrored(L);
    const auto o = testing::mirror_oracle(L);
    CHECK(M == signed_set(L.dim(), {o.begin(), o.end()}));
    CHECK(is_fully_sign_symmetric(M));
    CHECK(mirrored(M) == M);
    CHECK(M.size() <= sign_change_sum(L));
  }
}

TEST_CASE("sum and difference sets") {
  CHECK(sum_set(box(2, -1, 1), box(2, -1, 1)) == box(2, -2, 2));
  CHECK(sum_set(nonneg(1, {{0}}), nonneg(1, {{3}})) == nonneg(1, {{3}}));
  CHECK(sum_set(nonneg(2, {{0, 0}, {1, 0}}), nonneg(2, {{0, 0}, {0, 1}})) == box(2, 0, 1));
  CHECK_THROWS_AS(sum_set(nonneg(1, {{0}}), nonneg(2, {{0, 0}})), DimensionMismatch);
  CHECK(difference_set(box(2, 0, 1)) == box(2, -1, 1));
  CHECK(difference_set(nonneg(1, {{0}, {2}})) == signed_set(1, {{-2}, {0}, {2}}));

  WeightedSetRule r{WeightedSetRule::Kind::product, {1, 1}, 3};
  const IndexSet hc = make_weighted_set(r, 2);
  std::set<MultiIndex> oracle;
  for (const auto& a : hc)
    for (const auto& b : hc) oracle.insert(a - b);
  const IndexSet D = difference_set(hc);
  CHECK(D == signed_set(2, {oracle.begin(), oracle.end()}));
  CHECK(is_centrally_symmetric(D));
  CHECK(D.contains_zero());
  CHECK(D.size() <= hc.size() * hc.size());
}

TEST_CASE("projections") {
  const IndexSet L = nonneg(2, {{1, 2}, {3, 0}});
  CHECK(project(L, 1, ProjectionMode::zero) == nonneg(1, {{3}}));
  CHECK(project(L, 1, ProjectionMode::full) == nonneg(1, {{1}, {3}}));
  CHECK(project(box(2, 0, 1), 1, ProjectionMode::zero) == nonneg(1, {{0}, {1}}));
  CHECK(project(box(2, 0, 1), 1, ProjectionMode::full) == nonneg(1, {{0}, {1}}));
  CHECK(project(L, 2, ProjectionMode::zero) == L);
  CHECK_THROWS_AS(project(L, 0, ProjectionMode::zero), InvalidArgument);
  CHECK_THROWS_AS(project(L, 3, ProjectionMode::full), InvalidArgument);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 2 + rng() % 3;
    const bool dc = t % 2 == 0;
    const IndexSet S = dc ? testing::random_downward_closed(rng, d, 30, t % 4 == 0)
                          : testing::random_set(rng, d, 15, 0, 3);
    for (std::size_t s = 1; s <= d; ++s) {
      const IndexSet z = project(S, s, ProjectionMode::zero);
      const IndexSet f = project(S, s, ProjectionMode::full);
      for (const auto& k : z) CHECK(f.contains(k));
      if (is_downward_closed(S)) CHECK(z == f);
    }
  }
}

TEST_CASE("set properties") {
  const SetReport r = properties(box(2, 0, 2));
  CHECK(r.downward_closed);
  CHECK(r.max_abs == 2);
  CHECK(r.cardinality == 9);
  CHECK(r.sign_change_sum == 25);
  CHECK(r.log3_bound == doctest::Approx(std::pow(9.0, std::log(3.0) / std::log(2.0))));
  CHECK(r.violations.empty());
  CHECK(r.tensor_product);

  const SetReport s = properties(nonneg(2, {{1, 1}}));
  CHECK_FALSE(s.downward_closed);
  CHECK_FALSE(s.centrally_symmetric);

  const SetReport u = properties(box(2, -1, 1));
  CHECK(u.fully_sign_symmetric);
  CHECK(u.centrally_symmetric);
  CHECK(u.downward_closed);

  CHECK_FALSE(is_tensor_product(nonneg(2, {{0, 0}, {1, 1}})));
  CHECK_FALSE(is_downward_closed(signed_set(1, {{0}, {-2}})));
  CHECK(is_downward_closed(signed_set(1, {{0}, {-1}, {-2}, {1}})));
}

TEST_CASE("downward closed bounds on random sets") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const IndexSet L = testing::random_downward_closed(rng, 1 + rng() % 6, 1 + rng() % 120, t % 2 == 1);
    REQUIRE(is_downward_closed(L));
    const SetReport r = properties(L);
    CHECK(r.violations.empty());
    CHECK(r.mirrored_size <= r.sign_change_sum);
  }
}

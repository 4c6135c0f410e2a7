#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mhres/complex.hpp"
#include "mhres/search.hpp"
#include "test_util.hpp"

using namespace mhres;

static const SystemData bilinear = validate_system({1, 1}, {1, 1}, {1, 1, 2});
static const SystemData quadrics = validate_system({2}, {2}, {1, 1, 1});
static const SystemData counter = validate_system({1, 2, 2}, {1, 1, 1}, {1, 1, 1, 1, 2, 3});

TEST_CASE("m_bounds") {
  auto b = m_bounds(bilinear);
  CHECK(b.lo == IntVec{-1, -1});
  CHECK(b.hi == IntVec{3, 3});
  b = m_bounds(quadrics);
  CHECK(b.lo == IntVec{-2});
  CHECK(b.hi == IntVec{5});
  b = m_bounds(validate_system({1}, {1}, {1, 1}));
  CHECK(b.lo == IntVec{-1});
  CHECK(b.hi == IntVec{1});
}

TEST_CASE("cheap_filter") {
  CHECK(cheap_filter(bilinear, {2, 0}));
  CHECK_FALSE(cheap_filter(bilinear, {3, 3}));
  CHECK_FALSE(cheap_filter(bilinear, {-1, -1}));
}

TEST_CASE("is_determinantal_vector") {
  CHECK(is_determinantal_vector(bilinear, {2, 0}));
  CHECK_FALSE(is_determinantal_vector(bilinear, {0, 0}));
  CHECK(is_determinantal_vector(bilinear, {1, 1}));
}

TEST_CASE("enumerate_det_vectors on the bilinear example") {
  const std::vector<std::pair<IntVec, int>> expected{
      {{2, 0}, 4},   {{0, 2}, 4},  {{3, 0}, 6},  {{2, 1}, 6},  {{2, -1}, 6}, {{1, 2}, 6},
      {{1, 1}, 6},   {{1, 0}, 6},  {{0, 3}, 6},  {{0, 1}, 6},  {{-1, 2}, 6}, {{3, 1}, 8},
      {{1, 3}, 8},   {{1, -1}, 8}, {{-1, 1}, 8}, {{3, -1}, 10}, {{-1, 3}, 10}};
  auto v = enumerate_det_vectors(bilinear);
  REQUIRE(v.size() == expected.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(v[i].m == expected[i].first);
    CHECK(v[i].dim == expected[i].second);
  }
}

TEST_CASE("enumerate_det_vectors r=1") {
  auto v = enumerate_det_vectors(quadrics);
  std::set<int> ms;
  for (const auto& x : v) ms.insert(x.m[0]);
  CHECK(ms == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("self-dual count parity") {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    auto sys = testutil::random_system(rng, 2, 3, 3);
    auto v = enumerate_det_vectors(sys);
    const IntVec rho = critical_degree(sys);
    int self = 0;
    for (const auto& x : v) self += dual_vector(sys, x.m) == x.m;
    CHECK(self % 2 == static_cast<int>(v.size()) % 2);
  }
}

TEST_CASE("filter never changes the result and outputs lie in bounds") {
  std::mt19937 rng(9);
  for (int t = 0; t < 15; ++t) {
    auto sys = testutil::random_system(rng, 3, 4, 3);
    auto a = enumerate_det_vectors(sys, true);
    auto b = enumerate_det_vectors(sys, false);
    CHECK(a == b);
    const Box bb = m_bounds(sys);
    for (const auto& x : a) {
      CHECK(bb.contains(x.m));
      CHECK(cheap_filter(sys, x.m));
    }
  }
}

TEST_CASE("det_boxes") {
  auto b = det_boxes(bilinear);
  REQUIRE(b.size() == 2);
  CHECK(b[0].lo == IntVec{-1, 1});
  CHECK(b[0].hi == IntVec{1, 3});
  CHECK(b[1].lo == IntVec{1, -1});
  CHECK(b[1].hi == IntVec{3, 1});
  auto c = det_boxes(quadrics);
  REQUIRE(c.size() == 1);
  CHECK(c[0].lo == IntVec{0});
  CHECK(c[0].hi == IntVec{3});
  CHECK(det_boxes(counter).empty());
}

TEST_CASE("has_deter and the necessary condition") {
  auto h = has_deter(bilinear);
  CHECK(h.value);
  CHECK(h.witness.size() == 2);
  CHECK_FALSE(has_deter(counter).value);
  CHECK(necessary_condition_r_le_2(counter));
  CHECK(necessary_condition_r_le_2(bilinear));
  CHECK_FALSE(necessary_condition_r_le_2(validate_system({7}, {2}, IntVec(8, 1))));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 4; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto sys = validate_system({1}, {1}, {a, b});
      CHECK(has_deter(sys).value);
      CHECK(!enumerate_det_vectors(sys).empty());
    }
}

TEST_CASE("pure_vectors") {
  auto p = pure_vectors(bilinear);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == IntVec{-1, 3});
  CHECK(p[1] == IntVec{3, -1});
  auto q = pure_vectors(validate_system({1}, {3}, {1, 2}));
  REQUIRE(q.size() == 2);
  CHECK(q[0] == IntVec{8});
  CHECK(q[1] == IntVec{-1});
  for (const auto& m : q) {
    CHECK(is_determinantal_vector(validate_system({1}, {3}, {1, 2}), m));
  }
  CHECK(pure_vectors(validate_system({2}, {1}, {1, 1, 2})).empty());
  CHECK_THROWS_AS(pure_vectors(validate_system({1, 1}, {1, 1}, {1, 1, 1})), InvalidData);
}

TEST_CASE("pure vectors give single-block complexes") {
  for (auto sys : {bilinear, validate_system({1}, {3}, {1, 2}), validate_system({1, 1}, {2, 1}, {1, 2, 3})}) {
    for (const auto& m : pure_vectors(sys)) {
      CHECK(is_determinantal_vector(sys, m));
      auto c = make_complex(sys, m);
      std::set<int> a, b;
      for (const auto& s : c.term(1)) a.insert(s.p);
      for (const auto& s : c.term(0)) b.insert(s.p);
      REQUIRE(a.size() == 1);
      REQUIRE(b.size() == 1);
      CHECK(*a.begin() == *b.begin() + 1);
    }
  }
}

TEST_CASE("unmixed_pure_exists") {
  CHECK(unmixed_pure_exists(validate_system({1, 1}, {1, 1}, {1, 1, 1})));
  CHECK_FALSE(unmixed_pure_exists(validate_system({2}, {2}, {1, 1, 1})));
  CHECK(unmixed_pure_exists(validate_system({3}, {1}, {1, 1, 1, 1})));
  CHECK_THROWS_AS(unmixed_pure_exists(bilinear), InvalidData);
}

TEST_CASE("homogeneous_interval") {
  auto h = homogeneous_interval(quadrics);
  CHECK(h.lo == -1);
  CHECK(h.hi == 4);
  CHECK(h.members() == std::vector<int>{0, 1, 2, 3});
  auto g = homogeneous_interval(validate_system({1}, {1}, {1, 1}));
  CHECK(g.lo == -2);
  CHECK(g.hi == 2);
  CHECK(h.lo + h.hi == critical_degree(quadrics)[0]);
  CHECK_THROWS_AS(homogeneous_interval(bilinear), InvalidData);
}

TEST_CASE("min_dim_probe") {
  auto r = min_dim_probe(bilinear);
  CHECK(r.min_dim == 4);
  REQUIRE(r.argmin.size() == 2);
  CHECK(r.argmin[0] == IntVec{2, 0});
  CHECK(r.argmin[1] == IntVec{0, 2});
  // (2,0) is the center of the second box, (0,2) of the first
  CHECK(r.distances[0][1].linf == 0);
  CHECK(r.distances[1][0].linf == 0);
  auto s = min_dim_probe(quadrics);
  std::set<int> at;
  for (const auto& m : s.argmin) at.insert(m[0]);
  CHECK(at == std::set<int>{1, 2});
}

#include <doctest.h>

#include <set>
#include <string>

#include <splitcover/lin_system.hpp>
#include <splitcover/split_set.hpp>

#include "test_util.hpp"

using namespace splitcover;
using testutil::draw;
using testutil::iv;
using testutil::rv;
using testutil::split;

TEST_CASE("split construction rejects the zero vector") {
  CHECK_THROWS_AS(SplitSet(IntVec::Zero(3), Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(SplitSet(IntVec(), Integer(0)), std::invalid_argument);
  CHECK(split({0, 1}, 0).sparsity() == 1);
}

TEST_CASE("evaluate places points relative to the slab") {
  const SplitSet s = split({1, 1}, 0);
  CHECK(evaluate(s, rv({Rational(1, 4), Rational(1, 4)})) == Region::Inside);
  CHECK(evaluate(s, rv({Rational(0), Rational(0)})) == Region::Below);
  CHECK(evaluate(s, rv({Rational(1), Rational(1)})) == Region::Above);
  CHECK_THROWS_AS(evaluate(s, rv({Rational(1)})), std::invalid_argument);
}

TEST_CASE("evaluate partitions: exactly one region per point") {
  std::mt19937_64 rng(7001);
  for (int it = 0; it < 300; ++it) {
    const Index n = testutil::draw(rng, 1, 4);
    const SplitSet s = testutil::random_split(rng, n, 5, 8);
    const RatVec x = testutil::random_cube_point(rng, n);
    Rational dot(0);
    for (Index i = 0; i < n; ++i) dot += Rational(s.pi()(i)) * x(i);
    const bool below = dot <= Rational(s.eta());
    const bool inside = Rational(s.eta()) < dot && dot < Rational(s.eta() + 1);
    const bool above = dot >= Rational(s.eta() + 1);
    CHECK(static_cast<int>(below) + static_cast<int>(inside) + static_cast<int>(above) == 1);
    const Region r = evaluate(s, x);
    CHECK(below == (r == Region::Below));
    CHECK(inside == (r == Region::Inside));
    CHECK(above == (r == Region::Above));
  }
}

TEST_CASE("is_cube_empty closed form") {
  CHECK(is_cube_empty(split({1, 1}, 2)));
  CHECK_FALSE(is_cube_empty(split({2, 3}, 0)));
  CHECK(evaluate(split({2, 3}, 0), rv({Rational(1, 4), Rational(0)})) == Region::Inside);
  CHECK(is_cube_empty(split({2, 3}, -1)));

  // fine-grid confirmation that (1,1;2) misses the cube
  bool found_inside = false;
  for (int i = 0; i <= 8 && !found_inside; ++i)
    for (int j = 0; j <= 8 && !found_inside; ++j)
      if (evaluate(split({1, 1}, 2), rv({Rational(i, 8), Rational(j, 8)})) == Region::Inside)
        found_inside = true;
  CHECK_FALSE(found_inside);
}

TEST_CASE("is_cube_empty agrees with the LP-based emptiness check") {
  for (Index n = 1; n <= 3; ++n) {
    std::vector<IntVec> vectors;
    IntVec current(n);
    auto fill = [&](auto&& self, Index pos) -> void {
      if (pos == n) {
        bool zero = true;
        for (Index i = 0; i < n; ++i)
          if (current(i) != 0) zero = false;
        if (!zero) vectors.push_back(current);
        return;
      }
      for (int v = -4; v <= 4; ++v) {
        current(pos) = v;
        self(self, pos + 1);
      }
    };
    fill(fill, 0);
    for (const IntVec& pi : vectors) {
      for (int eta = -12; eta <= 12; ++eta) {
        const SplitSet s(pi, Integer(eta));
        LinSystem interior(n);
        interior.add_strict(-pi.cast<Rational>(), Rational(-eta));
        interior.add_strict(pi.cast<Rational>(), Rational(eta + 1));
        CHECK(is_cube_empty(s) == !feasible_mixed(interior).has_value());
      }
    }
  }
}

TEST_CASE("normalize moves the support forward, sorted, nonnegative") {
  SUBCASE("flip and support-sort") {
    const auto [norm, map] = normalize(split({0, -2, 3}, 1));
    CHECK(norm == split({2, 3, 0}, 3));
    CHECK(map.flips == std::vector<Index>{1});
    CHECK(map.eta_shift == 2);
    CHECK(invert_map(map, norm) == split({0, -2, 3}, 1));
  }
  SUBCASE("already normalized") {
    const auto [norm, map] = normalize(split({1, 1}, 0));
    CHECK(norm == split({1, 1}, 0));
    CHECK(map.flips.empty());
    CHECK(map.perm == std::vector<Index>{0, 1});
  }
  SUBCASE("all-negative coefficients flip to the canonical form") {
    const auto [norm, map] = normalize(split({-1, -1}, -2));
    CHECK(norm == split({1, 1}, 0));
    CHECK(map.flips == std::vector<Index>{0, 1});
    // membership carries across the transform
    const RatVec x = rv({Rational(1, 4), Rational(1, 4)});
    CHECK(evaluate(split({-1, -1}, -2), x) == evaluate(norm, apply_point(map, x)));
  }
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(7002);
  for (int it = 0; it < 200; ++it) {
    const Index n = draw(rng, 1, 5);
    const SplitSet s = testutil::random_split(rng, n, 6, 10);
    const SplitSet once = normalize(s).split;
    CHECK(normalize(once).split == once);
  }
}

TEST_CASE("apply_map matches the flip formula and inverts exactly") {
  const SplitSet s = split({2, 3}, 0);
  NormalizationMap flip1 = identity_map(2);
  flip1.flips = {0};
  CHECK(apply_map(flip1, s) == split({-2, 3}, -2));
  CHECK(invert_map(flip1, apply_map(flip1, s)) == s);

  CHECK(apply_map(identity_map(2), s) == s);

  NormalizationMap bad = identity_map(2);
  bad.perm = {0, 0};
  CHECK_THROWS_AS(apply_map(bad, s), std::invalid_argument);
  CHECK_THROWS_AS(apply_map(identity_map(3), s), std::invalid_argument);
}

TEST_CASE("map round-trip on random splits") {
  std::mt19937_64 rng(7003);
  for (int it = 0; it < 200; ++it) {
    const Index n = draw(rng, 1, 5);
    const SplitSet s = testutil::random_split(rng, n, 6, 10);
    const NormalizationMap map = testutil::random_map(rng, n);
    CHECK(invert_map(map, apply_map(map, s)) == s);
  }
}

TEST_CASE("symmetry preservation: evaluate commutes with cube maps") {
  std::mt19937_64 rng(7004);
  for (int it = 0; it < 500; ++it) {
    const Index n = draw(rng, 1, 4);
    const SplitSet s = testutil::random_split(rng, n, 5, 8);
    const RatVec x = testutil::random_cube_point(rng, n);
    const NormalizationMap map = testutil::random_map(rng, n);
    CHECK(evaluate(s, x) == evaluate(apply_map(map, s), apply_point(map, x)));
    // the normalize map too
    const auto [norm, nmap] = normalize(s);
    CHECK(evaluate(s, x) == evaluate(norm, apply_point(nmap, x)));
  }
}

namespace {

std::uint64_t family_cardinality(Index n, int k) {
  std::uint64_t members = 0;
  std::uint64_t binom = 1;
  for (int j = 1; j <= k; ++j) {
    binom = binom * static_cast<std::uint64_t>(n - j + 1) / static_cast<std::uint64_t>(j);
    members += binom << j;
  }
  return members * static_cast<std::uint64_t>(2 * k + 1);
}

}  // namespace

TEST_CASE("enumerate_family counts and members") {
  CHECK(enumerate_family(2, 1).size() == 12);
  CHECK(enumerate_family(2, 2).size() == 40);

  const SplitFamily f11 = enumerate_family(1, 1);
  CHECK(f11.size() == 6);
  for (const SplitSet& s : f11.splits) {
    CHECK((s.pi()(0) == 1 || s.pi()(0) == -1));
    CHECK(s.eta() >= -1);
    CHECK(s.eta() <= 1);
  }

  CHECK_THROWS_AS(enumerate_family(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_family(2, 0), std::invalid_argument);

  for (Index n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const SplitFamily family = enumerate_family(n, k);
      CHECK(family.size() == family_cardinality(n, k));
      std::set<std::string> unique;
      for (const SplitSet& s : family.splits) {
        CHECK(member_of_family(s, k));
        std::string key;
        for (Index i = 0; i < n; ++i) key += s.pi()(i).str() + "|";
        key += s.eta().str();
        unique.insert(key);
      }
      CHECK(unique.size() == family.size());  // no duplicate (pi, eta) pairs
    }
  }
}

TEST_CASE("member_of_family checks the three conditions") {
  CHECK(member_of_family(split({1, 1, 0}, 1), 2));
  CHECK_FALSE(member_of_family(split({2, 0}, 0), 2));
  CHECK_FALSE(member_of_family(split({1, 1}, 3), 2));
  CHECK(member_of_family(split({-1, 0}, -2), 2));
  CHECK_FALSE(member_of_family(split({1, 1, 1}, 0), 2));  // sparsity 3 > k
}

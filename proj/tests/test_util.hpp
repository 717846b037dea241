#pragma once

#include <initializer_list>
#include <random>

#include <splitcover/split_set.hpp>

namespace testutil {

using namespace splitcover;

inline IntVec iv(std::initializer_list<long> values) {
  IntVec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

inline RatVec rv(std::initializer_list<Rational> values) {
  RatVec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const Rational& x : values) v(i++) = x;
  return v;
}

inline SplitSet split(std::initializer_list<long> pi, long eta) {
  return SplitSet(iv(pi), Integer(eta));
}

// Bounded draws via modulo keep the stream identical across platforms.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline SplitSet random_split(std::mt19937_64& rng, Index n, long coeff_bound, long eta_bound) {
  for (;;) {
    IntVec pi(n);
    bool zero = true;
    for (Index i = 0; i < n; ++i) {
      pi(i) = draw(rng, -coeff_bound, coeff_bound);
      if (pi(i) != 0) zero = false;
    }
    if (zero) continue;
    return SplitSet(std::move(pi), Integer(draw(rng, -eta_bound, eta_bound)));
  }
}

inline SplitSet random_nonempty_split(std::mt19937_64& rng, Index n, long coeff_bound) {
  for (;;) {
    SplitSet s = random_split(rng, n, coeff_bound, 4 * coeff_bound);
    if (!is_cube_empty(s)) return s;
  }
}

inline RatVec random_cube_point(std::mt19937_64& rng, Index n, long denom = 16) {
  RatVec x(n);
  for (Index i = 0; i < n; ++i) x(i) = Rational(draw(rng, 0, denom), denom);
  return x;
}

inline NormalizationMap random_map(std::mt19937_64& rng, Index n) {
  NormalizationMap map = identity_map(n);
  for (Index i = 0; i < n; ++i)
    if (draw(rng, 0, 1)) map.flips.push_back(i);
  for (Index i = n - 1; i > 0; --i)
    std::swap(map.perm[static_cast<std::size_t>(i)],
              map.perm[static_cast<std::size_t>(draw(rng, 0, i))]);
  return map;
}

}  // namespace testutil

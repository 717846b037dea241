#pragma once

#include <vector>

#include "splitcover/types.hpp"

namespace splitcover {

/// The open slab S(pi, eta) = {x : eta < pi.x < eta + 1} for integer pi, eta.
/// The all-zero coefficient vector is rejected at construction: it describes
/// the empty set for every integer eta and carries no information.
class SplitSet {
 public:
  SplitSet(IntVec pi, Integer eta);

  Index dim() const { return pi_.size(); }
  const IntVec& pi() const { return pi_; }
  const Integer& eta() const { return eta_; }

  /// Number of nonzero coefficients.
  int sparsity() const;

  friend bool operator==(const SplitSet& a, const SplitSet& b) {
    return a.eta_ == b.eta_ && a.pi_ == b.pi_;
  }

 private:
  IntVec pi_;
  Integer eta_;
};

/// Position of a point relative to a split: on the closed lower side
/// (pi.x <= eta), strictly inside the slab, or on the closed upper side
/// (pi.x >= eta + 1). Exactly one of the three holds for every point.
enum class Region { Below, Inside, Above };

Region evaluate(const SplitSet& s, const Eigen::Ref<const RatVec>& x);
Region evaluate(const SplitSet& s, const CubePoint& x);

/// Closed form for S(pi, eta) intersected with the unit cube being empty:
/// with m = sum of negative coefficients and M = sum of positive ones, the
/// intersection is nonempty iff m <= eta <= M - 1.
bool is_cube_empty(const SplitSet& s);

/// A cube symmetry: flip x_i -> 1 - x_i at the recorded indices, then move
/// original coordinate i to position perm[i]. eta_shift records the eta
/// adjustment performed by normalize() on its input (the negative of the sum
/// of the pre-flip coefficients at flipped indices); apply_map and invert_map
/// recompute the shift from their operand, so a map is valid for any split of
/// matching dimension.
struct NormalizationMap {
  std::vector<Index> flips;  // sorted coordinate indices
  std::vector<Index> perm;   // perm[i] = new position of original coordinate i
  Integer eta_shift{0};

  Index dim() const { return static_cast<Index>(perm.size()); }
};

NormalizationMap identity_map(Index n);

/// Transforms a split by the map (flip, then permute); membership on the cube
/// is preserved under the matching point transform. Throws on dimension
/// mismatch or a non-bijective permutation.
SplitSet apply_map(const NormalizationMap& map, const SplitSet& s);

/// Exact inverse of apply_map: invert_map(m, apply_map(m, s)) == s.
SplitSet invert_map(const NormalizationMap& map, const SplitSet& s);

/// The point transforms matching apply_map / invert_map.
RatVec apply_point(const NormalizationMap& map, const Eigen::Ref<const RatVec>& x);
RatVec invert_point(const NormalizationMap& map, const Eigen::Ref<const RatVec>& x);

struct NormalizedSplit {
  SplitSet split;
  NormalizationMap map;  // apply_map(map, original) == split
};

/// Canonical form under the cube symmetries: all coefficients >= 0, the
/// support moved to the leading coordinates with its values sorted
/// nondecreasing (ties and trailing zeros keep their original order).
NormalizedSplit normalize(const SplitSet& s);

/// The finite family F_k: coefficients in {-1, 0, 1}, sparsity between 1 and
/// k, eta in {-k, ..., k}, enumerated in a fixed deterministic order.
struct SplitFamily {
  Index n = 0;
  int k = 0;
  std::vector<SplitSet> splits;

  std::size_t size() const { return splits.size(); }
};

/// Enumerates F_k in dimension n: supports as increasing index tuples in
/// lexicographic order, then sign patterns (+1 before -1, counted in binary),
/// then eta ascending. Cardinality is (sum_{j=1..k} C(n,j) 2^j) (2k + 1).
/// Throws unless 1 <= k <= n.
SplitFamily enumerate_family(Index n, int k);

/// Membership in F_k, tested on the split exactly as stored (not its normal
/// form) in the split's own dimension.
bool member_of_family(const SplitSet& s, int k);

}  // namespace splitcover

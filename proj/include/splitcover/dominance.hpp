#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splitcover/lin_system.hpp"
#include "splitcover/split_set.hpp"

namespace splitcover {

/// Verdict of a (union-)dominance query. When dominated is false the witness
/// is a rational point inside S on the cube that lies in no queried split;
/// cells_checked counts the closed-side systems actually examined.
struct DominanceReport {
  bool dominated = false;
  std::optional<CubePoint> witness;
  std::size_t cells_checked = 0;
};

/// One cell of the side arrangement of a split list: for each split i the
/// closed side u[i] (0: pi.x <= eta, 1: pi.x >= eta + 1), over the box.
/// Cells for distinct u have disjoint interiors.
struct Cell {
  std::vector<std::uint8_t> u;
  LinSystem system;
};

Cell make_cell(const std::vector<SplitSet>& list, const std::vector<std::uint8_t>& u);

/// Single-split dominance, eq-style: true iff S0's cube part is contained in
/// S1's. Containment fails iff S0's open slab meets one of S1's closed sides
/// inside the box; the feasible point found there is the witness.
DominanceReport dominates(const SplitSet& s1, const SplitSet& s0);

/// Union dominance by cell decomposition: the list dominates S iff every
/// nonempty cell of the list's side arrangement lies in one closed side of S
/// (a convex cell avoiding the open slab cannot meet both sides). Cells are
/// enumerated depth-first in lexicographic order of u with infeasible
/// prefixes pruned, so a failure reports the lexicographically smallest bad
/// cell. Throws when list.size() exceeds cell_limit.
DominanceReport union_dominates(const std::vector<SplitSet>& list, const SplitSet& s,
                                std::size_t cell_limit = 20);

/// A minimum cover drawn from a family: the indexed members union-dominate
/// the queried split, and no strictly smaller selection does.
struct CoverResult {
  std::vector<SplitSet> splits;
  std::vector<std::size_t> family_indices;  // membership certificates into the family
  int size = 0;
  bool optimal = false;
};

/// Smallest number of family members whose union dominates s, by
/// witness-driven lazy set cover: keep a finite witness set W inside
/// S-on-the-cube (seeded with one interior point), repeatedly solve exact
/// minimum set cover of W by family members (a member covers w iff w
/// evaluates Inside it), test the candidate with union_dominates, and refine
/// W with the failure witness. The candidate's cover size lower-bounds the
/// answer, so the first candidate that dominates is optimal. Returns
/// std::nullopt when no selection of size <= p_max dominates.
std::optional<CoverResult> min_cover(const SplitFamily& family, const SplitSet& s, int p_max);

/// max over the given tests of min_cover size; a NoneWithin outcome counts as
/// infinite and wins immediately.
struct EmpiricalCoveringNumber {
  std::optional<int> value;  // nullopt: some test exceeded p_max (infinite)
  std::optional<SplitSet> argmax;
};

EmpiricalCoveringNumber covering_number_empirical(const SplitFamily& family,
                                                  const std::vector<SplitSet>& tests,
                                                  int p_max);

}  // namespace splitcover

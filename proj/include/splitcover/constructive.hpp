#pragma once

#include <string>
#include <vector>

#include "splitcover/split_set.hpp"

namespace splitcover {

/// Which branch of the constructive case analysis fired. Exactly one tag per
/// invocation; Empty marks a cube-empty input (no cover is needed) and
/// LowerSparsity marks inputs handled by the next-lower construction.
enum class CaseTag {
  Empty,
  LowerSparsity,
  K2Case1,
  K2Case2,
  K2Case3,
  K3Case1,
  K3Case2,
  K3Case3,
  K4Case1,
  K4Case2,
  K4Case3,
  K4Case4,
  K4Case5,
  K4Case6,
  K4Case7,
  K4Case8,
  K4Case9,
  K4Case10,
};

/// Short serialized form, e.g. "k4-case7", "lower-sparsity", "empty".
std::string case_tag_name(CaseTag tag);

/// A constructed cover: members of the target family F_k, expressed in the
/// input's original coordinates. Empty inputs yield an empty list.
struct ConstructiveCover {
  std::vector<SplitSet> splits;
  CaseTag tag = CaseTag::Empty;
};

/// A single member of F_2 dominating the given split of sparsity <= 2
/// (supported within the input's support). Cube-empty inputs return the
/// Empty tag with no split: nothing needs covering. With self_verify the
/// result is checked against the exact dominance decider and a failure is a
/// hard fault.
ConstructiveCover dominate_with_F2(const SplitSet& s, bool self_verify = false);

/// At most two members of F_3 whose union dominates a split of sparsity <= 3.
/// Face restrictions that are cube-empty drop out of the list.
ConstructiveCover cover_with_F3(const SplitSet& s, bool self_verify = false);

/// At most three members of F_4 whose union dominates a split of sparsity
/// <= 4, by a ten-case analysis evaluated in a fixed order with first-match
/// semantics. A full-sparsity input on which no case fires is a logic error.
ConstructiveCover cover_with_F4(const SplitSet& s, bool self_verify = false);

}  // namespace splitcover

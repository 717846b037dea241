#include "splitcover/constructive.hpp"

#include <initializer_list>

#include "splitcover/dominance.hpp"

namespace splitcover {

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Empty: return "empty";
    case CaseTag::LowerSparsity: return "lower-sparsity";
    case CaseTag::K2Case1: return "k2-case1";
    case CaseTag::K2Case2: return "k2-case2";
    case CaseTag::K2Case3: return "k2-case3";
    case CaseTag::K3Case1: return "k3-case1";
    case CaseTag::K3Case2: return "k3-case2";
    case CaseTag::K3Case3: return "k3-case3";
    case CaseTag::K4Case1: return "k4-case1";
    case CaseTag::K4Case2: return "k4-case2";
    case CaseTag::K4Case3: return "k4-case3";
    case CaseTag::K4Case4: return "k4-case4";
    case CaseTag::K4Case5: return "k4-case5";
    case CaseTag::K4Case6: return "k4-case6";
    case CaseTag::K4Case7: return "k4-case7";
    case CaseTag::K4Case8: return "k4-case8";
    case CaseTag::K4Case9: return "k4-case9";
    case CaseTag::K4Case10: return "k4-case10";
  }
  return "unknown";
}

namespace {

// The slab eta < sum of the listed coordinates < eta + 1, in dimension n.
SplitSet unit_slab(Index n, std::initializer_list<Index> coords, int eta) {
  IntVec pi = IntVec::Zero(n);
  for (Index c : coords) pi(c) = 1;
  return SplitSet(std::move(pi), Integer(eta));
}

// Zeroes every coefficient from position `from` on: the split restricted to
// a face where the trailing support coordinate is fixed.
SplitSet restrict_leading(const SplitSet& s, Index from, Integer eta) {
  IntVec pi = s.pi();
  for (Index i = from; i < s.dim(); ++i) pi(i) = 0;
  return SplitSet(std::move(pi), std::move(eta));
}

std::vector<SplitSet> pull_back(const NormalizationMap& map, const std::vector<SplitSet>& splits) {
  std::vector<SplitSet> out;
  out.reserve(splits.size());
  for (const SplitSet& t : splits) out.push_back(invert_map(map, t));
  return out;
}

void self_check_union(const std::vector<SplitSet>& cover, const SplitSet& s) {
  if (!union_dominates(cover, s).dominated)
    throw std::logic_error("constructive cover failed verification against the exact checker");
}

}  // namespace

ConstructiveCover dominate_with_F2(const SplitSet& s, bool self_verify) {
  if (s.sparsity() > 2)
    throw std::invalid_argument("dominate_with_F2 requires sparsity <= 2");
  if (is_cube_empty(s)) return {{}, CaseTag::Empty};

  auto [norm, map] = normalize(s);
  const Index n = s.dim();
  const Integer& eta = norm.eta();

  SplitSet picked = unit_slab(n, {0}, 0);
  CaseTag tag = CaseTag::LowerSparsity;
  if (norm.sparsity() == 2) {
    const Integer& p1 = norm.pi()(0);
    const Integer& p2 = norm.pi()(1);
    if (eta + 1 <= p1) {
      picked = unit_slab(n, {0, 1}, 0);
      tag = CaseTag::K2Case1;
    } else if (eta + 1 <= p2) {
      picked = unit_slab(n, {1}, 0);
      tag = CaseTag::K2Case2;
    } else {
      picked = unit_slab(n, {0, 1}, 1);
      tag = CaseTag::K2Case3;
    }
  }

  ConstructiveCover result{{invert_map(map, picked)}, tag};
  if (self_verify) self_check_union(result.splits, s);
  return result;
}

ConstructiveCover cover_with_F3(const SplitSet& s, bool self_verify) {
  if (s.sparsity() > 3)
    throw std::invalid_argument("cover_with_F3 requires sparsity <= 3");
  if (is_cube_empty(s)) return {{}, CaseTag::Empty};
  if (s.sparsity() <= 2) {
    ConstructiveCover result{dominate_with_F2(s).splits, CaseTag::LowerSparsity};
    if (self_verify) self_check_union(result.splits, s);
    return result;
  }

  auto [norm, map] = normalize(s);
  const Index n = s.dim();
  const Integer& p1 = norm.pi()(0);
  const Integer& p2 = norm.pi()(1);
  const Integer& p3 = norm.pi()(2);
  const Integer& eta = norm.eta();

  std::vector<SplitSet> picks;
  CaseTag tag;
  if (p3 >= eta + 1) {
    // x3 < 1 throughout S: cover the x3 = 0 face, then 0 < x3 < 1.
    const SplitSet face = restrict_leading(norm, 2, eta);
    if (!is_cube_empty(face)) picks.push_back(dominate_with_F2(face).splits.at(0));
    picks.push_back(unit_slab(n, {2}, 0));
    tag = CaseTag::K3Case1;
  } else if (p1 + p2 <= eta) {
    // x3 > 0 throughout S: cover the x3 = 1 face, then 0 < x3 < 1.
    const SplitSet face = restrict_leading(norm, 2, eta - p3);
    if (!is_cube_empty(face)) picks.push_back(dominate_with_F2(face).splits.at(0));
    picks.push_back(unit_slab(n, {2}, 0));
    tag = CaseTag::K3Case2;
  } else {
    picks.push_back(unit_slab(n, {0, 1, 2}, 1));
    tag = CaseTag::K3Case3;
  }

  ConstructiveCover result{pull_back(map, picks), tag};
  if (self_verify) self_check_union(result.splits, s);
  return result;
}

ConstructiveCover cover_with_F4(const SplitSet& s, bool self_verify) {
  if (s.sparsity() > 4)
    throw std::invalid_argument("cover_with_F4 requires sparsity <= 4");
  if (is_cube_empty(s)) return {{}, CaseTag::Empty};
  if (s.sparsity() <= 3) {
    ConstructiveCover result{cover_with_F3(s).splits, CaseTag::LowerSparsity};
    if (self_verify) self_check_union(result.splits, s);
    return result;
  }

  auto [norm, map] = normalize(s);
  const Index n = s.dim();
  const Integer& p1 = norm.pi()(0);
  const Integer& p2 = norm.pi()(1);
  const Integer& p3 = norm.pi()(2);
  const Integer& p4 = norm.pi()(3);
  const Integer& eta = norm.eta();

  std::vector<SplitSet> picks;
  CaseTag tag;
  if (p4 >= eta + 1) {
    const SplitSet face = restrict_leading(norm, 3, eta);
    if (!is_cube_empty(face)) picks = cover_with_F3(face).splits;
    picks.push_back(unit_slab(n, {3}, 0));
    tag = CaseTag::K4Case1;
  } else if (p1 + p2 + p3 <= eta) {
    const SplitSet face = restrict_leading(norm, 3, eta - p4);
    if (!is_cube_empty(face)) picks = cover_with_F3(face).splits;
    picks.push_back(unit_slab(n, {3}, 0));
    tag = CaseTag::K4Case2;
  } else if (p1 + p2 >= eta + 1) {
    picks.push_back(unit_slab(n, {0, 1, 2, 3}, 1));
    tag = CaseTag::K4Case3;
  } else if (p1 + p3 >= eta + 1) {
    picks.push_back(unit_slab(n, {0, 1, 2, 3}, 1));
    picks.push_back(unit_slab(n, {2, 3}, 0));
    tag = CaseTag::K4Case4;
  } else if (p3 + p4 <= eta) {
    picks.push_back(unit_slab(n, {0, 1, 2, 3}, 2));
    tag = CaseTag::K4Case5;
  } else if (p2 + p4 <= eta) {
    picks.push_back(unit_slab(n, {0, 1, 2, 3}, 2));
    picks.push_back(unit_slab(n, {2, 3}, 1));
    tag = CaseTag::K4Case6;
  } else if (p2 + p3 >= eta + 1 && p1 + p4 >= eta + 1) {
    picks.push_back(unit_slab(n, {1, 2, 3}, 1));
    picks.push_back(unit_slab(n, {0}, 0));
    picks.push_back(unit_slab(n, {3}, 0));
    tag = CaseTag::K4Case7;
  } else if (p2 + p3 <= eta && p1 + p4 <= eta) {
    picks.push_back(unit_slab(n, {1, 2}, 0));
    picks.push_back(unit_slab(n, {0, 1, 2}, 2));
    picks.push_back(unit_slab(n, {3}, 0));
    tag = CaseTag::K4Case8;
  } else if (p2 + p3 >= eta + 1 && p1 + p4 <= eta) {
    picks.push_back(unit_slab(n, {1, 2, 3}, 1));
    picks.push_back(unit_slab(n, {0}, 0));
    picks.push_back(unit_slab(n, {1, 2}, 0));
    tag = CaseTag::K4Case9;
  } else if (p2 + p3 <= eta && p1 + p4 >= eta + 1) {
    picks.push_back(unit_slab(n, {0, 1, 2, 3}, 1));
    picks.push_back(unit_slab(n, {0, 1, 2}, 2));
    picks.push_back(unit_slab(n, {3}, 0));
    tag = CaseTag::K4Case10;
  } else {
    // The four sign combinations of (p2+p3 vs eta) and (p1+p4 vs eta) are
    // exhaustive once cases 1-6 have failed.
    throw std::logic_error("cover_with_F4: case analysis did not fire");
  }

  ConstructiveCover result{pull_back(map, picks), tag};
  if (self_verify) self_check_union(result.splits, s);
  return result;
}

}  // namespace splitcover

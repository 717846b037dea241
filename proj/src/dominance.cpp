#include "splitcover/dominance.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace splitcover {

namespace {

RatVec rat_pi(const SplitSet& s) { return s.pi().cast<Rational>(); }

// eta < pi.x < eta+1 as two strict rows.
void add_slab_interior(LinSystem& sys, const SplitSet& s) {
  sys.add_strict(-rat_pi(s), Rational(-s.eta()));
  sys.add_strict(rat_pi(s), Rational(s.eta() + 1));
}

void add_closed_side(LinSystem& sys, const SplitSet& s, std::uint8_t side) {
  if (side == 0)
    sys.add_weak(rat_pi(s), Rational(s.eta()));
  else
    sys.add_weak(-rat_pi(s), Rational(-(s.eta() + 1)));
}

}  // namespace

Cell make_cell(const std::vector<SplitSet>& list, const std::vector<std::uint8_t>& u) {
  if (list.size() != u.size()) throw std::invalid_argument("cell: side vector length mismatch");
  if (list.empty()) throw std::invalid_argument("cell: empty split list");
  Cell cell{u, LinSystem(list.front().dim())};
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].dim() != cell.system.n) throw std::invalid_argument("cell: dimension mismatch");
    add_closed_side(cell.system, list[i], u[i]);
  }
  return cell;
}

DominanceReport dominates(const SplitSet& s1, const SplitSet& s0) {
  if (s1.dim() != s0.dim()) throw std::invalid_argument("dominates: dimension mismatch");
  if (is_cube_empty(s0)) return {true, std::nullopt, 0};

  DominanceReport report;
  for (std::uint8_t side = 0; side < 2; ++side) {
    LinSystem sys(s0.dim());
    add_slab_interior(sys, s0);
    add_closed_side(sys, s1, side);
    ++report.cells_checked;
    if (auto w = feasible_mixed(sys)) {
      report.dominated = false;
      report.witness = std::move(w);
      return report;
    }
  }
  report.dominated = true;
  return report;
}

DominanceReport union_dominates(const std::vector<SplitSet>& list, const SplitSet& s,
                                std::size_t cell_limit) {
  for (const SplitSet& t : list)
    if (t.dim() != s.dim()) throw std::invalid_argument("union_dominates: dimension mismatch");
  if (list.size() > cell_limit)
    throw std::invalid_argument("union_dominates: cell limit exceeded");
  if (is_cube_empty(s)) return {true, std::nullopt, 0};

  const Index n = s.dim();
  const RatVec pi_q = rat_pi(s);
  const std::size_t p = list.size();

  DominanceReport report;
  report.dominated = true;

  LinSystem cell(n);
  std::vector<std::uint8_t> u(p, 0);

  // Depth-first over side choices, side 0 before side 1, so the first failing
  // cell is the lexicographically smallest one.
  auto descend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == p) {
      ++report.cells_checked;
      if (contained_in_halfspace(cell, pi_q, Rational(s.eta()))) return true;
      if (contained_in_halfspace(cell, -pi_q, Rational(-(s.eta() + 1)))) return true;
      LinSystem bad = cell;
      add_slab_interior(bad, s);
      auto w = feasible_mixed(bad);
      if (!w) throw std::logic_error("union_dominates: cell straddles the slab but no witness");
      report.dominated = false;
      report.witness = std::move(w);
      return false;
    }
    for (std::uint8_t side = 0; side < 2; ++side) {
      u[depth] = side;
      add_closed_side(cell, list[depth], side);
      // a cell infeasible at prefix depth prunes all its extensions
      const bool prune = depth + 1 < p && !weak_feasible(cell);
      const bool ok = prune || self(self, depth + 1);
      cell.weak.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  descend(descend, 0);
  return report;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Exact minimum set cover by iterative deepening: branch on the lowest
// uncovered witness, trying covering members in ascending index order.
// Deterministic; returns the first cover found at the smallest feasible size.
std::optional<std::vector<std::size_t>> solve_set_cover(const std::vector<Bits>& covers,
                                                        std::size_t n_witnesses,
                                                        int size_floor, int size_cap) {
  Bits all(n_witnesses);
  all.set();
  std::vector<std::size_t> chosen;

  auto dfs = [&](auto&& self, const Bits& uncovered, int slots) -> bool {
    if (uncovered.none()) return true;
    if (slots == 0) return false;
    const std::size_t w = uncovered.find_first();
    for (std::size_t i = 0; i < covers.size(); ++i) {
      if (!covers[i].test(w)) continue;
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      if (self(self, uncovered - covers[i], slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int target = std::max(size_floor, 0); target <= size_cap; ++target) {
    chosen.clear();
    if (dfs(dfs, all, target)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CoverResult> min_cover(const SplitFamily& family, const SplitSet& s, int p_max) {
  if (family.splits.empty()) throw std::invalid_argument("min_cover: empty family");
  if (p_max < 0) throw std::invalid_argument("min_cover: p_max must be >= 0");
  if (family.n != s.dim()) throw std::invalid_argument("min_cover: dimension mismatch");
  for (const SplitSet& m : family.splits)
    if (m.dim() != s.dim()) throw std::invalid_argument("min_cover: family member dimension mismatch");

  if (is_cube_empty(s)) return CoverResult{{}, {}, 0, true};

  LinSystem interior(s.dim());
  add_slab_interior(interior, s);
  auto seed = feasible_mixed(interior);
  if (!seed) throw std::logic_error("min_cover: cube-nonempty split has no interior point");

  std::vector<CubePoint> witnesses;
  witnesses.push_back(std::move(*seed));

  const std::size_t m = family.size();
  std::vector<Bits> covers(m);
  std::size_t masked = 0;  // witnesses already folded into the masks
  int size_floor = 1;      // the seed rules out the empty cover

  for (;;) {
    for (std::size_t i = 0; i < m; ++i) {
      covers[i].resize(witnesses.size());
      for (std::size_t w = masked; w < witnesses.size(); ++w)
        covers[i][w] = evaluate(family.splits[i], witnesses[w]) == Region::Inside;
    }
    masked = witnesses.size();

    auto candidate = solve_set_cover(covers, witnesses.size(), size_floor, p_max);
    if (!candidate) return std::nullopt;
    size_floor = static_cast<int>(candidate->size());

    std::vector<SplitSet> picks;
    picks.reserve(candidate->size());
    for (std::size_t idx : *candidate) picks.push_back(family.splits[idx]);

    DominanceReport rep = union_dominates(picks, s);
    if (rep.dominated) {
      CoverResult result;
      result.splits = std::move(picks);
      result.family_indices = std::move(*candidate);
      result.size = size_floor;
      result.optimal = true;  // no smaller selection covers even the witness set
      return result;
    }
    witnesses.push_back(std::move(*rep.witness));
  }
}

EmpiricalCoveringNumber covering_number_empirical(const SplitFamily& family,
                                                  const std::vector<SplitSet>& tests,
                                                  int p_max) {
  for (const SplitSet& t : tests)
    if (t.dim() != family.n)
      throw std::invalid_argument("covering_number_empirical: dimension mismatch");

  EmpiricalCoveringNumber out;
  int best = -1;
  for (const SplitSet& t : tests) {
    auto r = min_cover(family, t, p_max);
    if (!r) return {std::nullopt, t};  // infinite beats every finite size
    if (r->size > best) {
      best = r->size;
      out.argmax = t;
    }
  }
  if (best >= 0) out.value = best;
  return out;
}

}  // namespace splitcover

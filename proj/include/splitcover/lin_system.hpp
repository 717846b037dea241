#pragma once

#include <optional>
#include <vector>

#include "splitcover/types.hpp"

namespace splitcover {

/// One linear inequality a.x <= b (weak list) or a.x < b (strict list).
struct LinRow {
  RatVec a;
  Rational b;
};

/// A finite system of weak and strict rational inequalities over the unit
/// box. The box constraints 0 <= x_i <= 1 are implicit and always active, so
/// every feasible region is bounded and optima are attained.
struct LinSystem {
  Index n = 0;
  std::vector<LinRow> weak;
  std::vector<LinRow> strict;

  explicit LinSystem(Index dim) : n(dim) {}
  LinSystem() = default;

  void add_weak(RatVec a, Rational b) { weak.push_back({std::move(a), std::move(b)}); }
  void add_strict(RatVec a, Rational b) { strict.push_back({std::move(a), std::move(b)}); }
};

struct LpResult {
  Rational value;
  CubePoint argpoint;
};

/// Exact maximum of c.x over the weak rows plus the box, via a two-phase
/// dense simplex with Bland's rule (deterministic: equal inputs give
/// bit-identical results). Returns std::nullopt when the weak system plus box
/// is infeasible. Throws std::invalid_argument if the system carries strict
/// rows or dimensions mismatch.
std::optional<LpResult> lp_maximize(const Eigen::Ref<const RatVec>& c, const LinSystem& sys);

/// Feasibility of the weak rows plus box alone (phase one only).
bool weak_feasible(const LinSystem& sys);

/// Decides the mixed weak/strict system over the box and produces a witness
/// point satisfying every strict row strictly. Method: a gap variable
/// t in [0, 1] turns each strict row a.x < b into a.x + t <= b; the system is
/// feasible iff max t > 0, and the maximizer's x-part is the witness (a point
/// at the strictness-gap optimum, deep inside the strict region).
std::optional<CubePoint> feasible_mixed(const LinSystem& sys);

/// True iff every point of the weak system plus box satisfies a.x <= b;
/// an infeasible system is contained in everything.
bool contained_in_halfspace(const LinSystem& sys, const Eigen::Ref<const RatVec>& a,
                            const Rational& b);

}  // namespace splitcover

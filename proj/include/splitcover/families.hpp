#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitcover/dominance.hpp"
#include "splitcover/split_set.hpp"

namespace splitcover {

/// The three-dimensional family gamma < x1 + gamma x2 + (gamma+1) x3 < gamma+1,
/// i.e. pi = (1, gamma, gamma+1), eta = gamma. Cube-nonempty for every
/// gamma >= 1.
SplitSet gen_s_gamma(int gamma);

enum class Parity { Even, Odd };

/// The powers-of-theta family: even parity lives in dimension 2k with
/// pi = (theta, ..., theta^k, theta, ..., theta^k); odd parity appends one
/// coordinate with coefficient 1. eta = theta + ... + theta^k in both cases.
SplitSet gen_s_theta(int k, int theta, Parity parity);

/// One sweep instance: the input split, what was constructed or found for
/// it, whether its verification succeeded, and the counterexample point when
/// it did not.
struct InstanceRecord {
  SplitSet input;
  std::vector<SplitSet> output;
  std::string note;
  bool ok = true;
  std::optional<CubePoint> witness;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::size_t instances = 0;
  std::vector<InstanceRecord> details;  // deterministic instance order
  double seconds = 0.0;
};

/// Exhaustive check that every cube-nonempty split with coefficients in
/// [-M, M]^2 \ {0} and |eta| <= E receives a verified dominator from F_2.
ExperimentReport experiment_prop2(int coeff_bound, int eta_bound, int jobs = 1);

/// Exhaustive check of the constructive covers for k in {3, 4}: every
/// normalized tuple 0 <= pi_1 <= ... <= pi_k <= M and eta in the
/// cube-nonempty window yields <= k-1 members of F_k whose union dominates.
ExperimentReport experiment_prop_upper(int k, int coeff_bound, int jobs = 1);

/// Desk-scale witness that no bounded list dominates the S_gamma family: for
/// each gamma, every split with max-norm <= B and eta in the cube-nonempty
/// window is tested as a single dominator of S_gamma. Any dominator found
/// must match the rigid form pi = (1, eta, eta+1) up to slab orientation, and
/// none may exist once gamma > B.
ExperimentReport experiment_thm3(const std::vector<int>& gamma_set, int coeff_bound,
                                 int jobs = 1);

/// Desk-scale witness of the covering-number lower bound: min_cover sizes of
/// the S_theta family against F_k in dimension k (k even). Passes when some
/// theta needs at least floor(k/2) members and none exceeds p_max.
ExperimentReport experiment_lower_bound(int k, const std::vector<int>& theta_set, int p_max,
                                        int jobs = 1);

/// Randomized witness-soundness sweep: `count` non-dominance instances are
/// produced from the seed and every returned witness is re-checked by direct
/// substitution (inside the queried split, outside every listed one).
ExperimentReport experiment_witness_soundness(int count, std::uint64_t seed, int jobs = 1);

}  // namespace splitcover

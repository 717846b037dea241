#include "splitcover/split_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splitcover {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer p(s.substr(0, slash));
    const Integer q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + s + "': " + e.what());
  }
}

CubePoint::CubePoint(RatVec coords) : coords_(std::move(coords)) {
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_(i) < 0 || coords_(i) > 1)
      throw std::invalid_argument("cube point coordinate outside [0,1]");
  }
}

SplitSet::SplitSet(IntVec pi, Integer eta) : pi_(std::move(pi)), eta_(std::move(eta)) {
  if (pi_.size() == 0) throw std::invalid_argument("split set needs dimension >= 1");
  bool all_zero = true;
  for (Index i = 0; i < pi_.size(); ++i)
    if (pi_(i) != 0) { all_zero = false; break; }
  if (all_zero) throw std::invalid_argument("split set with pi = 0 is rejected");
}

int SplitSet::sparsity() const {
  int count = 0;
  for (Index i = 0; i < pi_.size(); ++i)
    if (pi_(i) != 0) ++count;
  return count;
}

Region evaluate(const SplitSet& s, const Eigen::Ref<const RatVec>& x) {
  if (x.size() != s.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
  Rational dot(0);
  for (Index i = 0; i < x.size(); ++i)
    if (s.pi()(i) != 0) dot += Rational(s.pi()(i)) * x(i);
  if (dot <= Rational(s.eta())) return Region::Below;
  if (dot >= Rational(s.eta() + 1)) return Region::Above;
  return Region::Inside;
}

Region evaluate(const SplitSet& s, const CubePoint& x) { return evaluate(s, x.coords()); }

bool is_cube_empty(const SplitSet& s) {
  Integer neg_sum(0), pos_sum(0);
  for (Index i = 0; i < s.dim(); ++i) {
    if (s.pi()(i) < 0) neg_sum += s.pi()(i);
    else pos_sum += s.pi()(i);
  }
  return s.eta() < neg_sum || s.eta() > pos_sum - 1;
}

NormalizationMap identity_map(Index n) {
  NormalizationMap map;
  map.perm.resize(static_cast<std::size_t>(n));
  std::iota(map.perm.begin(), map.perm.end(), Index{0});
  return map;
}

namespace {

void check_map(const NormalizationMap& map, Index n) {
  if (map.dim() != n) throw std::invalid_argument("map: dimension mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Index p : map.perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
      throw std::invalid_argument("map: permutation is not a bijection");
    hit[static_cast<std::size_t>(p)] = true;
  }
  for (Index f : map.flips)
    if (f < 0 || f >= n) throw std::invalid_argument("map: flip index out of range");
}

// Flip x_i -> 1 - x_i at the given indices: pi_i negates and eta drops by the
// pre-flip pi_i. Involutive.
void flip_in_place(IntVec& pi, Integer& eta, const std::vector<Index>& flips) {
  for (Index f : flips) {
    eta -= pi(f);
    pi(f) = -pi(f);
  }
}

}  // namespace

SplitSet apply_map(const NormalizationMap& map, const SplitSet& s) {
  check_map(map, s.dim());
  IntVec pi = s.pi();
  Integer eta = s.eta();
  flip_in_place(pi, eta, map.flips);
  IntVec out(s.dim());
  for (Index i = 0; i < s.dim(); ++i) out(map.perm[static_cast<std::size_t>(i)]) = pi(i);
  return SplitSet(std::move(out), std::move(eta));
}

SplitSet invert_map(const NormalizationMap& map, const SplitSet& s) {
  check_map(map, s.dim());
  IntVec pi(s.dim());
  for (Index i = 0; i < s.dim(); ++i) pi(i) = s.pi()(map.perm[static_cast<std::size_t>(i)]);
  Integer eta = s.eta();
  flip_in_place(pi, eta, map.flips);
  return SplitSet(std::move(pi), std::move(eta));
}

RatVec apply_point(const NormalizationMap& map, const Eigen::Ref<const RatVec>& x) {
  check_map(map, x.size());
  RatVec flipped = x;
  for (Index f : map.flips) flipped(f) = Rational(1) - flipped(f);
  RatVec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out(map.perm[static_cast<std::size_t>(i)]) = flipped(i);
  return out;
}

RatVec invert_point(const NormalizationMap& map, const Eigen::Ref<const RatVec>& x) {
  check_map(map, x.size());
  RatVec un(x.size());
  for (Index i = 0; i < x.size(); ++i) un(i) = x(map.perm[static_cast<std::size_t>(i)]);
  for (Index f : map.flips) un(f) = Rational(1) - un(f);
  return un;
}

NormalizedSplit normalize(const SplitSet& s) {
  const Index n = s.dim();
  NormalizationMap map;
  for (Index i = 0; i < n; ++i)
    if (s.pi()(i) < 0) map.flips.push_back(i);

  IntVec pi = s.pi();
  Integer eta = s.eta();
  flip_in_place(pi, eta, map.flips);
  map.eta_shift = eta - s.eta();

  // Support first, values nondecreasing; zeros trail. Stable on original index.
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const bool za = pi(a) == 0, zb = pi(b) == 0;
    if (za != zb) return zb;
    if (za) return false;
    return pi(a) < pi(b);
  });

  map.perm.resize(static_cast<std::size_t>(n));
  IntVec sorted(n);
  for (Index pos = 0; pos < n; ++pos) {
    const Index orig = order[static_cast<std::size_t>(pos)];
    map.perm[static_cast<std::size_t>(orig)] = pos;
    sorted(pos) = pi(orig);
  }
  return NormalizedSplit{SplitSet(std::move(sorted), std::move(eta)), std::move(map)};
}

SplitFamily enumerate_family(Index n, int k) {
  if (k < 1 || static_cast<Index>(k) > n)
    throw std::invalid_argument("enumerate_family requires 1 <= k <= n");

  SplitFamily family;
  family.n = n;
  family.k = k;

  // Supports as increasing index tuples in lexicographic order.
  std::vector<Index> support;
  auto emit = [&]() {
    const auto sz = support.size();
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << sz); ++signs) {
      IntVec pi = IntVec::Zero(n);
      for (std::size_t j = 0; j < sz; ++j)
        pi(support[j]) = ((signs >> j) & 1) ? Integer(-1) : Integer(1);
      for (int eta = -k; eta <= k; ++eta)
        family.splits.emplace_back(pi, Integer(eta));
    }
  };
  auto extend = [&](auto&& self, Index next) -> void {
    if (!support.empty()) emit();
    if (support.size() == static_cast<std::size_t>(k)) return;
    for (Index i = next; i < n; ++i) {
      support.push_back(i);
      self(self, i + 1);
      support.pop_back();
    }
  };
  extend(extend, 0);
  return family;
}

bool member_of_family(const SplitSet& s, int k) {
  if (s.sparsity() > k) return false;
  for (Index i = 0; i < s.dim(); ++i)
    if (s.pi()(i) < -1 || s.pi()(i) > 1) return false;
  return s.eta() >= -Integer(k) && s.eta() <= Integer(k);
}

}  // namespace splitcover

#include "splitcover/lin_system.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cassert>
#include <utility>

namespace splitcover {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Dense tableau over the integers. Row i stores numerators num[0..ncols) and
// a positive denominator den; column 0 is the right-hand side, columns
// 1..nvars correspond to variables. The encoded equation is
//   sum_j (num[j]/den) x_j = num[0]/den,
// and the column of the basic variable of each row is a unit column. The
// right-hand sides stay nonnegative once a feasible basis is reached, which
// together with Bland's entering/leaving rule guarantees termination.
struct Row {
  std::vector<Integer> num;
  Integer den{1};

  void reduce() {
    Integer g = den;
    for (const Integer& v : num) {
      if (v != 0) g = gcd(g, v);
      if (g == 1) return;
    }
    if (g == 1) return;
    den /= g;
    for (Integer& v : num) v /= g;
  }
};

struct Tableau {
  std::vector<Row> rows;
  Row obj;                    // obj.num[j] = reduced cost of column j; obj.num[0] = -(value)
  std::vector<int> basis;     // basis[i] = variable index (1-based column) basic in row i
  std::vector<bool> banned;   // columns barred from entering (retired artificials)
  int ncols = 0;              // 1 + number of variables

  // value at (row, col) has sign of num since den > 0
  int sign_at(std::size_t i, int j) const { return rows[i].num[j].sign(); }

  void pivot(std::size_t r, int c);
  void price_out(const std::vector<Rational>& cost);
  bool bland_max();
};

// Classic tableau pivot, fraction-free per row: every updated entry of row k
// is (num_k[j]*P - num_k[c]*num_r[j]) over den_k*|P| with P the pivot
// numerator, followed by a gcd reduction.
void Tableau::pivot(std::size_t r, int c) {
  Row& prow = rows[r];
  const Integer P = prow.num[c];
  assert(P != 0);
  const bool neg = P < 0;
  const Integer absP = neg ? Integer(-P) : P;

  for (std::size_t k = 0; k < rows.size() + 1; ++k) {
    Row& row = (k == rows.size()) ? obj : rows[k];
    if (&row == &prow) continue;
    const Integer f = row.num[c];
    if (f == 0) continue;
    for (int j = 0; j < ncols; ++j) {
      Integer t = row.num[j] * P - f * prow.num[j];
      row.num[j] = neg ? Integer(-t) : std::move(t);
    }
    row.den *= absP;
    row.reduce();
  }

  if (neg)
    for (int j = 0; j < ncols; ++j) prow.num[j] = -prow.num[j];
  prow.den = absP;
  prow.reduce();
  basis[r] = c;
}

// Rebuilds the objective row from scratch for the given cost vector:
// reduced costs c_j - c_B B^-1 A_j and the negated objective value in col 0.
void Tableau::price_out(const std::vector<Rational>& cost) {
  std::vector<Rational> acc(static_cast<std::size_t>(ncols), Rational(0));
  for (int j = 1; j < ncols; ++j) acc[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational cb = cost[static_cast<std::size_t>(basis[i])];
    if (cb == 0) continue;
    const Rational d(rows[i].den);
    for (int j = 0; j < ncols; ++j) {
      if (rows[i].num[j] == 0) continue;
      acc[static_cast<std::size_t>(j)] -= cb * Rational(rows[i].num[j]) / d;
    }
  }
  // acc[0] now equals -(c_B B^-1 b) = -(objective value). Integerize.
  Integer L(1);
  for (const Rational& v : acc) L = lcm(L, denominator(v));
  obj.num.assign(static_cast<std::size_t>(ncols), Integer(0));
  obj.den = L;
  for (int j = 0; j < ncols; ++j)
    obj.num[static_cast<std::size_t>(j)] = numerator(acc[static_cast<std::size_t>(j)]) *
                                           (L / denominator(acc[static_cast<std::size_t>(j)]));
  obj.reduce();
}

// Maximizes the priced-out objective with Bland's rule: entering column is
// the lowest index with positive reduced cost, leaving row minimizes the
// ratio rhs/col with ties broken by the lowest basic variable index.
// Returns false if an improving column is unbounded (cannot happen over the
// box; the caller treats it as a logic error).
bool Tableau::bland_max() {
  for (;;) {
    int enter = -1;
    for (int j = 1; j < ncols; ++j) {
      if (banned[static_cast<std::size_t>(j)]) continue;
      if (obj.num[static_cast<std::size_t>(j)] > 0) { enter = j; break; }
    }
    if (enter < 0) return true;

    std::size_t leave = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].num[enter] <= 0) continue;
      if (leave == rows.size()) { leave = i; continue; }
      // compare rhs_i/col_i vs rhs_l/col_l by cross-multiplication (cols > 0)
      const Integer lhs = rows[i].num[0] * rows[leave].num[enter];
      const Integer rhs = rows[leave].num[0] * rows[i].num[enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == rows.size()) return false;
    pivot(leave, enter);
  }
}

struct IntRow {
  std::vector<Integer> coeff;  // structural coefficients
  Integer b;
};

// Clears denominators of (a, b) scaled to nvars entries (a is shorter when a
// gap variable is appended; extra holds its coefficient).
IntRow integerize(const Eigen::Ref<const RatVec>& a, const Rational& b, Index nvars,
                  const Rational& extra = Rational(0)) {
  Integer L = denominator(b);
  for (Index j = 0; j < a.size(); ++j) L = lcm(L, denominator(a(j)));
  if (extra != 0) L = lcm(L, denominator(extra));
  IntRow row;
  row.coeff.assign(static_cast<std::size_t>(nvars), Integer(0));
  for (Index j = 0; j < a.size(); ++j)
    row.coeff[static_cast<std::size_t>(j)] = numerator(a(j)) * (L / denominator(a(j)));
  if (extra != 0)
    row.coeff[static_cast<std::size_t>(nvars - 1)] = numerator(extra) * (L / denominator(extra));
  row.b = numerator(b) * (L / denominator(b));
  return row;
}

class SimplexSolver {
 public:
  // nvars structural variables, all with implicit bounds [0, 1]; rows are
  // a.x <= b over the structurals.
  SimplexSolver(Index nvars, std::vector<IntRow> user_rows) : nvars_(nvars) {
    for (Index i = 0; i < nvars; ++i) {
      IntRow upper;
      upper.coeff.assign(static_cast<std::size_t>(nvars), Integer(0));
      upper.coeff[static_cast<std::size_t>(i)] = 1;
      upper.b = 1;
      user_rows.push_back(std::move(upper));
    }
    build(std::move(user_rows));
  }

  // Two-phase solve; returns false when infeasible.
  bool maximize(const Eigen::Ref<const RatVec>& c) {
    if (need_phase1_ && !phase1()) return false;
    std::vector<Rational> cost(static_cast<std::size_t>(tab_.ncols), Rational(0));
    for (Index j = 0; j < c.size(); ++j) cost[static_cast<std::size_t>(j) + 1] = c(j);
    tab_.price_out(cost);
    if (!tab_.bland_max()) throw std::logic_error("simplex: unbounded over the box");
    return true;
  }

  RatVec solution() const {
    RatVec x = RatVec::Zero(nvars_);
    for (std::size_t i = 0; i < tab_.rows.size(); ++i) {
      const int col = tab_.basis[i];
      if (col >= 1 && col <= nvars_)
        x(col - 1) = Rational(tab_.rows[i].num[0], tab_.rows[i].den);
    }
    return x;
  }

 private:
  void build(std::vector<IntRow> rows) {
    const std::size_t m = rows.size();
    const int nslack = static_cast<int>(m);
    int nart = 0;
    for (const IntRow& r : rows)
      if (r.b < 0) ++nart;
    tab_.ncols = 1 + static_cast<int>(nvars_) + nslack + nart;
    tab_.banned.assign(static_cast<std::size_t>(tab_.ncols), false);
    need_phase1_ = nart > 0;

    int next_art = 1 + static_cast<int>(nvars_) + nslack;
    for (std::size_t i = 0; i < m; ++i) {
      Row row;
      row.num.assign(static_cast<std::size_t>(tab_.ncols), Integer(0));
      const bool neg = rows[i].b < 0;
      const Integer s = neg ? Integer(-1) : Integer(1);
      row.num[0] = s * rows[i].b;
      for (Index j = 0; j < nvars_; ++j)
        row.num[static_cast<std::size_t>(j) + 1] = s * rows[i].coeff[static_cast<std::size_t>(j)];
      row.num[static_cast<std::size_t>(1 + nvars_ + static_cast<Index>(i))] = s;
      if (neg) {
        row.num[static_cast<std::size_t>(next_art)] = 1;
        tab_.basis.push_back(next_art);
        art_cols_.push_back(next_art);
        ++next_art;
      } else {
        tab_.basis.push_back(1 + static_cast<int>(nvars_) + static_cast<int>(i));
      }
      row.reduce();
      tab_.rows.push_back(std::move(row));
    }
  }

  bool phase1() {
    std::vector<Rational> cost(static_cast<std::size_t>(tab_.ncols), Rational(0));
    for (int a : art_cols_) cost[static_cast<std::size_t>(a)] = Rational(-1);
    tab_.price_out(cost);
    if (!tab_.bland_max()) throw std::logic_error("simplex: phase one unbounded");
    if (tab_.obj.num[0] != 0) return false;  // -(value) > 0 means sum of artificials > 0

    // Drive leftover degenerate artificials out of the basis, dropping rows
    // that are redundant over the real columns.
    for (int a : art_cols_) tab_.banned[static_cast<std::size_t>(a)] = true;
    for (std::size_t i = 0; i < tab_.rows.size();) {
      if (!tab_.banned[static_cast<std::size_t>(tab_.basis[i])]) { ++i; continue; }
      int col = 0;
      for (int j = 1; j < tab_.ncols; ++j) {
        if (tab_.banned[static_cast<std::size_t>(j)]) continue;
        if (tab_.rows[i].num[j] != 0) { col = j; break; }
      }
      if (col == 0) {
        tab_.rows.erase(tab_.rows.begin() + static_cast<std::ptrdiff_t>(i));
        tab_.basis.erase(tab_.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        tab_.pivot(i, col);  // rhs is zero, so any nonzero pivot keeps feasibility
        ++i;
      }
    }
    return true;
  }

  Index nvars_;
  Tableau tab_;
  std::vector<int> art_cols_;
  bool need_phase1_ = false;
};

void check_system(const LinSystem& sys) {
  if (sys.n < 1) throw std::invalid_argument("linear system needs dimension >= 1");
  for (const LinRow& r : sys.weak)
    if (r.a.size() != sys.n) throw std::invalid_argument("weak row dimension mismatch");
  for (const LinRow& r : sys.strict)
    if (r.a.size() != sys.n) throw std::invalid_argument("strict row dimension mismatch");
}

}  // namespace

std::optional<LpResult> lp_maximize(const Eigen::Ref<const RatVec>& c, const LinSystem& sys) {
  check_system(sys);
  if (!sys.strict.empty())
    throw std::invalid_argument("lp_maximize requires an empty strict part");
  if (c.size() != sys.n) throw std::invalid_argument("objective dimension mismatch");

  std::vector<IntRow> rows;
  rows.reserve(sys.weak.size());
  for (const LinRow& r : sys.weak) rows.push_back(integerize(r.a, r.b, sys.n));

  SimplexSolver solver(sys.n, std::move(rows));
  if (!solver.maximize(c)) return std::nullopt;
  RatVec x = solver.solution();
  Rational value(0);
  for (Index j = 0; j < sys.n; ++j)
    if (c(j) != 0) value += c(j) * x(j);
  return LpResult{std::move(value), CubePoint(std::move(x))};
}

bool weak_feasible(const LinSystem& sys) {
  check_system(sys);
  std::vector<IntRow> rows;
  rows.reserve(sys.weak.size());
  for (const LinRow& r : sys.weak) rows.push_back(integerize(r.a, r.b, sys.n));
  SimplexSolver solver(sys.n, std::move(rows));
  return solver.maximize(RatVec::Zero(sys.n));
}

std::optional<CubePoint> feasible_mixed(const LinSystem& sys) {
  check_system(sys);
  const Index nv = sys.n + 1;  // gap variable t is the last, with box [0, 1]

  std::vector<IntRow> rows;
  rows.reserve(sys.weak.size() + sys.strict.size());
  for (const LinRow& r : sys.weak) rows.push_back(integerize(r.a, r.b, nv));
  for (const LinRow& r : sys.strict) rows.push_back(integerize(r.a, r.b, nv, Rational(1)));

  SimplexSolver solver(nv, std::move(rows));
  RatVec obj = RatVec::Zero(nv);
  obj(sys.n) = 1;
  if (!solver.maximize(obj)) return std::nullopt;
  RatVec full = solver.solution();
  if (full(sys.n) <= 0) return std::nullopt;  // no positive strictness gap
  return CubePoint(full.head(sys.n));
}

bool contained_in_halfspace(const LinSystem& sys, const Eigen::Ref<const RatVec>& a,
                            const Rational& b) {
  auto res = lp_maximize(a, sys);
  if (!res) return true;  // the empty set is contained in everything
  return res->value <= b;
}

}  // namespace splitcover

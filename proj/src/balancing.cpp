#include "moapprox/balancing.hpp"

#include <algorithm>
#include <sstream>

namespace moapprox {

std::string to_string(BalanceVariant v) {
  switch (v) {
    case BalanceVariant::Paired: return "paired";
    case BalanceVariant::Integer: return "integer";
    case BalanceVariant::Combinatorial: return "combinatorial";
  }
  return "?";
}

BalanceVariant parse_balance_variant(std::string_view text) {
  if (text == "paired") return BalanceVariant::Paired;
  if (text == "integer") return BalanceVariant::Integer;
  if (text == "combinatorial") return BalanceVariant::Combinatorial;
  throw PreconditionError("unknown balancing variant '" + std::string(text) + "'");
}

std::vector<bool> IntervalFamily::membership() const {
  std::vector<bool> in(m + 1, false);
  for (const auto& iv : intervals) {
    std::size_t end = half_open ? iv.b : iv.b + 1;
    for (std::size_t i = iv.a; i < end && i <= m; ++i) in[i] = true;
  }
  return in;
}

std::string IntervalFamily::str() const {
  std::string s;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (j) s += ' ';
    s += '[' + std::to_string(intervals[j].a) + ',' + std::to_string(intervals[j].b) + (half_open ? ")" : "]");
  }
  return s.empty() ? "{}" : s;
}

namespace {

using Vec = std::vector<std::int64_t>;

void check_shape(const BalancingInstance& inst, bool need_y) {
  if (inst.n < 1) throw PreconditionError("balancing: n must be >= 1");
  if (inst.x.empty()) throw PreconditionError("balancing: m must be >= 1");
  const std::size_t d = 2 * inst.n;
  for (const auto& v : inst.x)
    if (v.dim() != d) throw DimensionError("balancing: x vectors must have dimension 2n = " + std::to_string(d));
  if (need_y) {
    if (inst.y.size() != inst.x.size()) throw PreconditionError("balancing: x and y must have the same length");
    for (const auto& v : inst.y)
      if (v.dim() != d) throw DimensionError("balancing: y vectors must have dimension 2n = " + std::to_string(d));
  }
  if (inst.z && inst.z->dim() != d) throw DimensionError("balancing: z must have dimension 2n = " + std::to_string(d));
}

void check_natural(const std::vector<WeightVector>& v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].non_negative())
      throw PreconditionError(std::string("balancing: ") + name + "_" + std::to_string(i + 1) + " has a negative component");
}

WeightVector sum_all(const std::vector<WeightVector>& v, std::size_t d) {
  WeightVector s(d);
  for (const auto& e : v) s += e;
  return s;
}

// Doubled prefix sums of x_i - y_i: Q[j] = 2 * sum_{i < j} (x_i - y_i), j = 1..m+1.
std::vector<Vec> doubled_prefix(const std::vector<WeightVector>& x, const std::vector<WeightVector>& y) {
  const std::size_t m = x.size(), d = x.front().dim();
  std::vector<Vec> q(m + 2, Vec(d, 0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t c = 0; c < d; ++c)
      q[i + 1][c] = checked_add(q[i][c], checked_mul(2, checked_sub(x[i - 1][c], y[i - 1][c])));
  return q;
}

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_)
      throw BudgetExceeded("balancing search exceeded its budget of " + std::to_string(budget_) + " endpoint tuples");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

bool within(const Vec& s, const Vec& lo, const Vec& hi) {
  for (std::size_t c = 0; c < s.size(); ++c)
    if (s[c] < lo[c] || s[c] > hi[c]) return false;
  return true;
}

bool at_least(const Vec& s, const Vec& lo) {
  for (std::size_t c = 0; c < s.size(); ++c)
    if (s[c] < lo[c]) return false;
  return true;
}

// Scans nondecreasing endpoint tuples in [1, m+1]^{2n}; even slots are left
// endpoints (subtract), odd slots right endpoints (add).
struct PairedSearch {
  const std::vector<Vec>& q;
  std::size_t m;
  std::size_t slots;
  Vec lo, hi;
  BudgetCounter& budget;
  std::vector<std::size_t> ends;
  Vec cur;

  bool run(std::size_t depth, std::size_t from) {
    if (depth == slots) {
      budget.tick();
      return within(cur, lo, hi);
    }
    const bool left = depth % 2 == 0;
    for (std::size_t e = from; e <= m + 1; ++e) {
      ends[depth] = e;
      for (std::size_t c = 0; c < cur.size(); ++c) cur[c] += left ? -q[e][c] : q[e][c];
      bool ok = run(depth + 1, e);
      for (std::size_t c = 0; c < cur.size(); ++c) cur[c] -= left ? -q[e][c] : q[e][c];
      if (ok) return true;
    }
    return false;
  }
};

// Closed intervals [a_j, b_j] with b_j < a_{j+1}; each contributes
// 2 * (sum_{a..b} (x - y) + y_b).
struct ClosedSearch {
  const std::vector<Vec>& q;
  const std::vector<WeightVector>& y;
  std::size_t m;
  std::size_t slots;
  Vec lo;
  BudgetCounter& budget;
  std::vector<std::size_t> ends;
  Vec cur;

  bool run(std::size_t depth, std::size_t from) {
    if (depth == slots) {
      budget.tick();
      return at_least(cur, lo);
    }
    const bool left = depth % 2 == 0;
    for (std::size_t e = from; e <= m; ++e) {
      ends[depth] = e;
      for (std::size_t c = 0; c < cur.size(); ++c) {
        if (left)
          cur[c] -= q[e][c];
        else
          cur[c] += q[e + 1][c] + 2 * y[e - 1][c];
      }
      bool ok = run(depth + 1, left ? e : e + 1);
      for (std::size_t c = 0; c < cur.size(); ++c) {
        if (left)
          cur[c] += q[e][c];
        else
          cur[c] -= q[e + 1][c] + 2 * y[e - 1][c];
      }
      if (ok) return true;
    }
    return false;
  }
};

// Doubled running sums in the searches stay below 4 * w; reject inputs where
// that could wrap.
void require_headroom(const WeightVector& w) { (void)w.scaled(4); }

Vec components(const WeightVector& w) { return Vec(w.components().begin(), w.components().end()); }

BalanceResult make_result(const BalancingInstance& inst, IntervalFamily family) {
  const std::size_t d = 2 * inst.n;
  BalanceResult r{std::move(family), WeightVector(d), WeightVector(d), WeightVector(d)};
  auto in = r.family.membership();
  const bool integer = inst.variant == BalanceVariant::Integer;
  for (std::size_t i = 1; i <= inst.m(); ++i) {
    if (in[i])
      r.in_sum += inst.x[i - 1];
    else
      r.out_sum += integer ? inst.x[i - 1] : inst.y[i - 1];
  }
  if (!r.family.half_open)
    for (const auto& iv : r.family.intervals) r.correction += inst.y[iv.b - 1];
  return r;
}

IntervalFamily search_paired(const std::vector<WeightVector>& x, const std::vector<WeightVector>& y,
                             const WeightVector& z, std::size_t n, std::uint64_t budget) {
  const std::size_t m = x.size(), d = 2 * n;
  auto q = doubled_prefix(x, y);
  auto total = components(sum_all(x, d) + sum_all(y, d));
  auto bound = components(z.scaled(checked_mul(4, static_cast<std::int64_t>(n))));
  auto base = components(sum_all(y, d).scaled(2));
  Vec lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    lo[c] = checked_sub(total[c], bound[c]);
    hi[c] = checked_add(total[c], bound[c]);
  }
  require_headroom(sum_all(x, d) + sum_all(y, d) + z.scaled(static_cast<std::int64_t>(n)));
  BudgetCounter counter(budget);
  PairedSearch s{q, m, 2 * n, lo, hi, counter, std::vector<std::size_t>(2 * n), base};
  if (!s.run(0, 1))
    throw InvariantViolation("balance_paired: exhaustive search found no balanced interval family");
  IntervalFamily fam{{}, m, true};
  for (std::size_t j = 0; j < n; ++j) fam.intervals.push_back({s.ends[2 * j], s.ends[2 * j + 1]});
  return fam;
}

}  // namespace

BalanceResult balance_paired(const BalancingInstance& inst, std::uint64_t budget) {
  check_shape(inst, true);
  if (!inst.z) throw PreconditionError("balance_paired: bound z is required");
  check_natural(inst.x, "x");
  check_natural(inst.y, "y");
  for (std::size_t i = 0; i < inst.m(); ++i)
    if (!inst.z->geq(inst.x[i]) || !inst.z->geq(inst.y[i]))
      throw PreconditionError("balance_paired: x_" + std::to_string(i + 1) + " or y_" + std::to_string(i + 1) +
                              " exceeds z");
  BalancingInstance tagged = inst;
  tagged.variant = BalanceVariant::Paired;
  return make_result(tagged, search_paired(inst.x, inst.y, *inst.z, inst.n, budget));
}

BalanceResult balance_integer(const BalancingInstance& inst, std::uint64_t budget) {
  check_shape(inst, false);
  if (!inst.z) throw PreconditionError("balance_integer: bound z is required");
  const WeightVector& z = *inst.z;
  if (!z.non_negative()) throw PreconditionError("balance_integer: z must be non-negative");
  std::vector<WeightVector> xp, yp;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const auto& xi = inst.x[i];
    if (!z.geq(xi) || !(xi + z).non_negative())
      throw PreconditionError("balance_integer: x_" + std::to_string(i + 1) + " violates -z <= x <= z");
    xp.push_back(z + xi);
    yp.push_back(z - xi);
  }
  BalancingInstance tagged = inst;
  tagged.variant = BalanceVariant::Integer;
  return make_result(tagged, search_paired(xp, yp, z.scaled(2), inst.n, budget));
}

BalanceResult balance_combinatorial(const BalancingInstance& inst, std::uint64_t budget) {
  check_shape(inst, true);
  check_natural(inst.x, "x");
  check_natural(inst.y, "y");
  const std::size_t m = inst.m(), d = 2 * inst.n;
  auto q = doubled_prefix(inst.x, inst.y);
  auto lo = components(sum_all(inst.x, d) + sum_all(inst.y, d));
  auto base = components(sum_all(inst.y, d).scaled(2));
  require_headroom(sum_all(inst.x, d) + sum_all(inst.y, d).scaled(2));
  BudgetCounter counter(budget);
  const std::size_t cap = std::min(inst.n, m);
  for (std::size_t count = 0; count <= cap; ++count) {
    ClosedSearch s{q, inst.y, m, 2 * count, lo, counter, std::vector<std::size_t>(2 * count), base};
    if (s.run(0, 1)) {
      IntervalFamily fam{{}, m, false};
      for (std::size_t j = 0; j < count; ++j) fam.intervals.push_back({s.ends[2 * j], s.ends[2 * j + 1]});
      BalancingInstance tagged = inst;
      tagged.variant = BalanceVariant::Combinatorial;
      return make_result(tagged, std::move(fam));
    }
  }
  throw InvariantViolation("balance_combinatorial: exhaustive search found no interval family");
}

BalanceResult balance(const BalancingInstance& inst, std::uint64_t budget) {
  switch (inst.variant) {
    case BalanceVariant::Paired: return balance_paired(inst, budget);
    case BalanceVariant::Integer: return balance_integer(inst, budget);
    case BalanceVariant::Combinatorial: return balance_combinatorial(inst, budget);
  }
  throw PreconditionError("unknown balancing variant");
}

bool verify_balance(const BalancingInstance& inst, const BalanceResult& result, BalanceVariant variant) {
  const auto& fam = result.family;
  const std::size_t m = inst.m(), n = inst.n, d = 2 * n;
  const bool closed = variant == BalanceVariant::Combinatorial;
  if (fam.m != m) throw PreconditionError("verify_balance: family length does not match instance");
  if (fam.half_open == closed) return false;
  const std::size_t max_count = closed ? std::min(n, m) : n;
  if (fam.intervals.size() > max_count) return false;
  for (const auto& iv : fam.intervals) {
    const std::size_t hi = closed ? m : m + 1;
    if (iv.a < 1 || iv.b > hi || iv.a > iv.b)
      throw PreconditionError("verify_balance: interval [" + std::to_string(iv.a) + "," + std::to_string(iv.b) +
                              "] outside 1.." + std::to_string(hi));
  }
  for (std::size_t j = 1; j < fam.intervals.size(); ++j) {
    const auto& prev = fam.intervals[j - 1];
    const auto& next = fam.intervals[j];
    if (closed ? !(prev.b < next.a) : !(prev.b <= next.a)) return false;
  }

  std::vector<bool> in(m + 1, false);
  for (const auto& iv : fam.intervals) {
    const std::size_t last = closed ? iv.b : iv.b - 1;
    for (std::size_t i = iv.a; i <= last; ++i) in[i] = true;
  }
  WeightVector inside(d), outside(d), correction(d), total(d);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto& xi = inst.x[i - 1];
    const auto& other = variant == BalanceVariant::Integer ? xi : inst.y[i - 1];
    if (in[i])
      inside += xi;
    else
      outside += other;
    if (variant != BalanceVariant::Integer) total += xi + inst.y[i - 1];
  }
  if (closed)
    for (const auto& iv : fam.intervals) correction += inst.y[iv.b - 1];
  if (inside != result.in_sum || outside != result.out_sum) return false;
  if (closed ? correction != result.correction : !result.correction.is_zero()) return false;

  switch (variant) {
    case BalanceVariant::Paired: {
      if (!inst.z) return false;
      auto slack = inst.z->scaled(static_cast<std::int64_t>(4 * n));
      auto twice = (inside + outside).scaled(2);
      return twice.leq(total + slack) && (twice + slack).geq(total);
    }
    case BalanceVariant::Integer: {
      if (!inst.z) return false;
      auto slack = inst.z->scaled(static_cast<std::int64_t>(4 * n));
      auto diff = inside - outside;
      return diff.leq(slack) && (diff + slack).non_negative();
    }
    case BalanceVariant::Combinatorial:
      return (correction + inside + outside).scaled(2).geq(total);
  }
  return false;
}

bool satisfies_integer_bound(const std::vector<WeightVector>& x, const std::vector<WeightVector>& y,
                               const WeightVector& z, const IntervalFamily& family) {
  const std::size_t d = z.dim();
  auto in = family.membership();
  WeightVector lhs(d), total(d);
  std::size_t nonempty = 0;
  for (const auto& iv : family.intervals)
    if (family.half_open ? iv.a < iv.b : iv.a <= iv.b) ++nonempty;
  lhs += z.scaled(static_cast<std::int64_t>(nonempty));
  for (std::size_t i = 1; i <= x.size(); ++i) {
    lhs += in[i] ? x[i - 1] : y[i - 1];
    total += x[i - 1] + y[i - 1];
  }
  return lhs.scaled(2).geq(total);
}

WeightVector observed_imbalance(const BalancingInstance& inst, const BalanceResult& result) {
  if (inst.variant == BalanceVariant::Integer) return result.in_sum - result.out_sum;
  const std::size_t d = 2 * inst.n;
  WeightVector total(d);
  for (std::size_t i = 0; i < inst.m(); ++i) total += inst.x[i] + inst.y[i];
  return (result.correction + result.in_sum + result.out_sum).scaled(2) - total;
}

}  // namespace moapprox

#ifndef MOAPPROX_BALANCING_HPP
#define MOAPPROX_BALANCING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moapprox/weight.hpp"

namespace moapprox {

enum class BalanceVariant { Paired, Integer, Combinatorial };

std::string to_string(BalanceVariant v);
BalanceVariant parse_balance_variant(std::string_view text);

/// 1-based index interval. Half-open [a, b) for the paired and integer
/// variants (a == b is empty), closed [a, b] for the combinatorial variant.
struct Interval {
  std::size_t a = 1;
  std::size_t b = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalFamily {
  std::vector<Interval> intervals;
  std::size_t m = 0;
  bool half_open = true;

  /// Membership mask over indices 1..m (entry 0 unused).
  [[nodiscard]] std::vector<bool> membership() const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;
};

/**
 * Input of the three balancing searches. All vectors have dimension 2n.
 *
 *  - Paired: x, y non-negative and bounded by z.
 *  - Integer: signed x with -z <= x_i <= z; y is unused.
 *  - Combinatorial: x, y non-negative; z is optional and only used by the
 *    boundary-corrected bound check.
 */
struct BalancingInstance {
  BalanceVariant variant = BalanceVariant::Paired;
  std::size_t n = 1;
  std::vector<WeightVector> x;
  std::vector<WeightVector> y;
  std::optional<WeightVector> z;

  [[nodiscard]] std::size_t m() const { return x.size(); }
  friend bool operator==(const BalancingInstance&, const BalancingInstance&) = default;
};

struct BalanceResult {
  IntervalFamily family;
  /// Sum of x over the chosen indices.
  WeightVector in_sum;
  /// Sum over the complement: y for paired/combinatorial, x for integer.
  WeightVector out_sum;
  /// Sum of y at the right endpoints (combinatorial only; zero otherwise).
  WeightVector correction;
};

/// Largest number of endpoint tuples a single search may scan.
inline constexpr std::uint64_t kDefaultBalanceBudget = 200'000'000;

/**
 * Finds up to n half-open intervals such that x inside plus y outside lies
 * within 2nz of half the grand total, componentwise. Endpoints range over
 * 1 <= a_1 <= b_1 <= ... <= a_n <= b_n <= m + 1; the first satisfying tuple in
 * lexicographic order is returned.
 */
BalanceResult balance_paired(const BalancingInstance& inst, std::uint64_t budget = kDefaultBalanceBudget);

/// Signed variant: |sum inside - sum outside| <= 4nz, via x' = z + x, y' = z - x.
BalanceResult balance_integer(const BalancingInstance& inst, std::uint64_t budget = kDefaultBalanceBudget);

/**
 * Finds n' <= min(n, m) closed, strictly separated intervals whose boundary
 * correction sum_j y_{b_j} plus x inside plus y outside reaches at least half
 * the grand total. Scans n' = 0, 1, ... and endpoints lexicographically.
 */
BalanceResult balance_combinatorial(const BalancingInstance& inst, std::uint64_t budget = kDefaultBalanceBudget);

/// Dispatches on inst.variant.
BalanceResult balance(const BalancingInstance& inst, std::uint64_t budget = kDefaultBalanceBudget);

/**
 * Recomputes every sum from the instance and checks the variant's bound, the
 * interval layout and the sums stored in `result`. Throws PreconditionError
 * when an interval leaves the index range.
 */
bool verify_balance(const BalancingInstance& inst, const BalanceResult& result, BalanceVariant variant);

/// n' * z + sum_{i in I} x_i + sum_{i not in I} y_i >= (1/2) sum (x_i + y_i),
/// where n' counts the nonempty intervals of the family.
bool satisfies_integer_bound(const std::vector<WeightVector>& x, const std::vector<WeightVector>& y,
                               const WeightVector& z, const IntervalFamily& family);

/// Componentwise deviation 2 * (in + out) - total for paired results, or
/// in - out for integer results. Used for reporting observed imbalance.
WeightVector observed_imbalance(const BalancingInstance& inst, const BalanceResult& result);

}  // namespace moapprox

#endif  // MOAPPROX_BALANCING_HPP

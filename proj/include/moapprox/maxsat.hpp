#ifndef MOAPPROX_MAXSAT_HPP
#define MOAPPROX_MAXSAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "moapprox/pareto.hpp"
#include "moapprox/weight.hpp"

namespace moapprox {

/// Variable index (1-based) with polarity.
struct Literal {
  std::uint32_t var = 1;
  bool positive = true;

  [[nodiscard]] Literal negated() const { return {var, !positive}; }
  [[nodiscard]] int dimacs() const { return positive ? static_cast<int>(var) : -static_cast<int>(var); }
  static Literal from_dimacs(int lit) { return {static_cast<std::uint32_t>(lit < 0 ? -lit : lit), lit > 0}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
  std::vector<Literal> literals;
  WeightVector weight;

  [[nodiscard]] bool contains(Literal l) const;
  [[nodiscard]] bool tautological() const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Weighted CNF with k-dimensional clause weights.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::size_t dim = 1;
  std::vector<Clause> clauses;

  /// Throws PreconditionError/DimensionError if an invariant is violated.
  void validate() const;
  [[nodiscard]] std::size_t tautology_count() const;
  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

/// Truth assignment; values[i] is the value of variable i + 1.
struct Assignment {
  std::vector<std::uint8_t> values;

  [[nodiscard]] bool value(std::uint32_t var) const { return values[var - 1] != 0; }
  [[nodiscard]] bool satisfies(Literal l) const { return value(l.var) == l.positive; }
  [[nodiscard]] bool satisfies(const Clause& c) const;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

WeightVector assignment_weight(const CnfInstance& inst, const Assignment& a);

/// Indices (into inst.clauses) of the clauses in `subset` that contain `lit`.
std::vector<std::size_t> clause_bucket(const CnfInstance& inst, const std::vector<std::size_t>& subset, Literal lit);

/**
 * Per-iteration state of the approximation for one guessed zero-set V0.
 *
 * Weights are taken in the padded, even dimension `2k`. `g` holds the
 * clauses without a negated V0 literal; `v1` the variables v outside V0 for
 * which some objective j has 2k * w_j(G[not v]) > w_j(H \ G); `vprime` the
 * rest in increasing index order. `gprime` is the set of clauses of G that
 * contain no positive V1 literal but mention some V' variable.
 */
struct SatState {
  std::vector<std::uint32_t> v0;
  std::vector<std::uint32_t> v1;
  std::vector<std::uint32_t> vprime;
  std::vector<std::size_t> g;
  std::vector<std::size_t> gprime;
};

/// Builds the state for V0; `even_dim` is the padded objective count 2k.
SatState sat_state(const CnfInstance& inst, const std::vector<std::uint32_t>& v0, std::size_t even_dim);

struct MaxSatOptions {
  /// Cap on assignments emitted by the outer loops before deduplication.
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 1;
  /// Iterate raw endpoint tuples instead of distinct interval unions. Same
  /// output set, far more iterations; kept as a cross-check.
  bool literal_loop = false;
};

/// Number of assignments the outer loops emit (saturating).
std::uint64_t maxsat_iteration_count(std::size_t num_vars, std::size_t dim, bool literal_loop = false);

/**
 * 1/2-approximate Pareto set for multi-objective weighted MaxSAT.
 *
 * For every V0 with |V0| <= (2k)^2 the variables of V0 are set to 0, those of
 * V1 to 1, and the remaining variables V' (in index order) to 1 exactly on a
 * union of at most k intervals of V'. Odd objective counts are padded with a
 * zero objective. Output is deduplicated, Pareto-filtered and canonical.
 */
SolutionSet<Assignment> maxsat_approx(const CnfInstance& inst, const MaxSatOptions& opts = {});

/// Exact Pareto set over all 2^m assignments, one representative per weight.
SolutionSet<Assignment> maxsat_oracle(const CnfInstance& inst, std::size_t var_cap = 20);

}  // namespace moapprox

#endif  // MOAPPROX_MAXSAT_HPP

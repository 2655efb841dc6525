#ifndef MOAPPROX_MATCHING_HPP
#define MOAPPROX_MATCHING_HPP

#include <cstdint>
#include <string>

#include "moapprox/digraph.hpp"
#include "moapprox/pareto.hpp"

namespace moapprox {

/**
 * Source of (1 - eps)-approximate Pareto sets of matchings.
 *
 * Implementations must be safe to call concurrently on distinct graphs. A
 * randomized backend reports the probability that a single call fails to
 * meet its guarantee; callers amplify as needed.
 */
class MatchingBackend {
 public:
  virtual ~MatchingBackend() = default;
  [[nodiscard]] virtual SolutionSet<Matching> pareto(const LabeledDigraph& g, const Rational& eps) const = 0;
  [[nodiscard]] virtual double failure_probability() const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
  /// Work units one call on an n-vertex graph costs; used by budget guards.
  [[nodiscard]] virtual std::uint64_t cost(std::size_t num_vertices) const = 0;
};

/// Enumerates every matching and returns the exact Pareto set (one matching
/// per Pareto weight). Exact, hence valid for every eps.
class ExactMatchingBackend final : public MatchingBackend {
 public:
  explicit ExactMatchingBackend(std::size_t vertex_cap = 10) : vertex_cap_(vertex_cap) {}

  [[nodiscard]] SolutionSet<Matching> pareto(const LabeledDigraph& g, const Rational& eps) const override;
  [[nodiscard]] double failure_probability() const override { return 0.0; }
  [[nodiscard]] std::string name() const override { return "exact"; }
  [[nodiscard]] std::uint64_t cost(std::size_t num_vertices) const override { return matching_count(num_vertices); }

  /// Number of matchings of the complete digraph on n vertices (saturating).
  static std::uint64_t matching_count(std::size_t n);

 private:
  std::size_t vertex_cap_;
};

/// Convenience wrapper around ExactMatchingBackend.
SolutionSet<Matching> matching_pareto(const LabeledDigraph& g, const Rational& eps, std::size_t vertex_cap = 10);

}  // namespace moapprox

#endif  // MOAPPROX_MATCHING_HPP

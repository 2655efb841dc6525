#ifndef MOAPPROX_PARETO_HPP
#define MOAPPROX_PARETO_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moapprox/weight.hpp"

namespace moapprox {

/// True iff a >= b componentwise and a != b.
bool dominates(const WeightVector& a, const WeightVector& b);

/// One candidate solution together with its objective vector.
template <typename S>
struct Entry {
  S solution;
  WeightVector weight;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Canonical order: lexicographic by weight, ties broken by solution encoding.
template <typename S>
bool canonical_less(const Entry<S>& a, const Entry<S>& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.solution < b.solution;
}

template <typename S>
using SolutionSet = std::vector<Entry<S>>;

/// Sorts canonically and drops entries whose solution already occurred.
template <typename S>
void canonicalize(SolutionSet<S>& set) {
  std::sort(set.begin(), set.end(), [](const Entry<S>& a, const Entry<S>& b) {
    if (a.solution != b.solution) return a.solution < b.solution;
    return a.weight < b.weight;
  });
  set.erase(std::unique(set.begin(), set.end(),
                        [](const Entry<S>& a, const Entry<S>& b) { return a.solution == b.solution; }),
            set.end());
  std::sort(set.begin(), set.end(), canonical_less<S>);
}

/**
 * Keeps exactly the entries whose weight is not dominated by another entry's
 * weight. Entries sharing a weight are all retained. Output is canonical.
 *
 * Runs in O(n log n + n * |front|): after sorting by decreasing lexicographic
 * weight, any dominator of an entry precedes it, so each entry only needs to
 * be compared with the front collected so far.
 */
template <typename S>
SolutionSet<S> pareto_filter(SolutionSet<S> set) {
  if (set.empty()) return set;
  canonicalize(set);
  const auto dim = set.front().weight.dim();
  for (const auto& e : set)
    if (e.weight.dim() != dim) throw DimensionError("pareto_filter: mixed dimensions");

  // Distinct weights in decreasing lexicographic order.
  std::vector<const WeightVector*> order;
  for (auto it = set.rbegin(); it != set.rend(); ++it)
    if (order.empty() || *order.back() != it->weight) order.push_back(&it->weight);

  std::vector<const WeightVector*> front;
  for (const auto* w : order) {
    bool dominated = std::any_of(front.begin(), front.end(), [&](const WeightVector* f) { return dominates(*f, *w); });
    if (!dominated) front.push_back(w);
  }
  std::sort(front.begin(), front.end(), [](const WeightVector* a, const WeightVector* b) { return *a < *b; });

  SolutionSet<S> out;
  auto fit = front.begin();
  for (auto& e : set) {
    while (fit != front.end() && **fit < e.weight) ++fit;
    if (fit == front.end()) break;
    if (**fit == e.weight) out.push_back(std::move(e));
  }
  return out;
}

/// Keeps the canonically first entry per distinct weight.
template <typename S>
SolutionSet<S> one_per_weight(SolutionSet<S> set) {
  canonicalize(set);
  set.erase(std::unique(set.begin(), set.end(),
                        [](const Entry<S>& a, const Entry<S>& b) { return a.weight == b.weight; }),
            set.end());
  return set;
}

/// min_i cand_i / ref_i over objectives with ref_i > 0; unbounded when ref is zero.
struct CoverRatio {
  std::int64_t num = 1;
  std::int64_t den = 1;
  bool unbounded = true;

  [[nodiscard]] bool at_least(const Rational& alpha) const;
  [[nodiscard]] std::string str() const;
  friend bool operator<(const CoverRatio& a, const CoverRatio& b);
};

CoverRatio cover_ratio(const WeightVector& candidate, const WeightVector& reference);

/// True iff alpha * reference_i <= candidate_i for every objective, in exact integers.
bool alpha_covers(const WeightVector& candidate, const WeightVector& reference, const Rational& alpha);

/// Per-reference-point record of the certificate.
struct CoverPair {
  std::size_t reference_index = 0;
  std::size_t candidate_index = 0;
  CoverRatio ratio;
};

/**
 * Result of checking a candidate set against a reference set. On success
 * `covers` maps every reference entry to the candidate achieving the largest
 * cover ratio. On failure `first_uncovered` names the first reference entry
 * no candidate alpha-covers; `covers` still lists the best candidates found.
 */
struct ApproxCertificate {
  bool success = false;
  Rational alpha;
  std::vector<CoverPair> covers;
  std::optional<std::size_t> first_uncovered;
  std::optional<WeightVector> uncovered_weight;
};

ApproxCertificate certify_weights(const std::vector<WeightVector>& candidates, const std::vector<WeightVector>& reference,
                                  const Rational& alpha);

template <typename S>
std::vector<WeightVector> weights_of(const SolutionSet<S>& set) {
  std::vector<WeightVector> w;
  w.reserve(set.size());
  for (const auto& e : set) w.push_back(e.weight);
  return w;
}

/// Checks whether `candidates` is an alpha-approximate cover of `reference`.
template <typename S, typename R>
ApproxCertificate is_alpha_approx_set(const SolutionSet<S>& candidates, const SolutionSet<R>& reference,
                                      const Rational& alpha) {
  return certify_weights(weights_of(candidates), weights_of(reference), alpha);
}

}  // namespace moapprox

#endif  // MOAPPROX_PARETO_HPP

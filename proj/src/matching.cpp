#include "moapprox/matching.hpp"

#include <algorithm>
#include <map>

namespace moapprox {

std::uint64_t ExactMatchingBackend::matching_count(std::size_t n) {
  // a(n) = a(n-1) + 2 (n-1) a(n-2): vertex n is free or matched in either
  // direction to one of the other n-1 vertices.
  std::uint64_t prev = 1, cur = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    std::uint64_t t, next;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(2 * (k - 1)), prev, &t) || __builtin_add_overflow(cur, t, &next))
      return UINT64_MAX;
    prev = cur;
    cur = next;
  }
  return cur;
}

SolutionSet<Matching> ExactMatchingBackend::pareto(const LabeledDigraph& g, const Rational&) const {
  const std::size_t n = g.size();
  if (n > vertex_cap_)
    throw BudgetExceeded("matching_pareto: " + std::to_string(n) + " vertices exceed the exact backend cap of " +
                         std::to_string(vertex_cap_));
  // First matching found per weight (enumeration order is fixed); the
  // weight map stays small even when the number of matchings is large.
  std::map<WeightVector, Matching> best;
  std::vector<std::uint8_t> used(n, 0);
  Matching cur;
  WeightVector w(g.dim());

  auto record = [&] {
    if (best.find(w) != best.end()) return;
    Matching sorted = cur;
    std::sort(sorted.edges.begin(), sorted.edges.end());
    best.emplace(w, std::move(sorted));
  };

  auto rec = [&](auto&& self, Vertex v) -> void {
    while (v < n && used[v]) ++v;
    if (v >= n) {
      record();
      return;
    }
    used[v] = 1;
    self(self, v + 1);  // v stays unmatched
    for (Vertex u = v + 1; u < n; ++u) {
      if (used[u]) continue;
      used[u] = 1;
      for (const Edge& e : {Edge{v, u}, Edge{u, v}}) {
        const auto& ew = g.weight(e.first, e.second);
        cur.edges.push_back(e);
        w += ew;
        self(self, v + 1);
        w -= ew;
        cur.edges.pop_back();
      }
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(rec, 0);

  SolutionSet<Matching> all;
  for (auto& [weight, m] : best) all.push_back({std::move(m), weight});
  return pareto_filter(std::move(all));
}

SolutionSet<Matching> matching_pareto(const LabeledDigraph& g, const Rational& eps, std::size_t vertex_cap) {
  return ExactMatchingBackend(vertex_cap).pareto(g, eps);
}

}  // namespace moapprox

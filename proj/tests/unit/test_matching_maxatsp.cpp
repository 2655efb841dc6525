#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "moapprox/generate.hpp"
#include "moapprox/maxatsp.hpp"

using namespace moapprox;

namespace {

using W = std::vector<std::int64_t>;

LabeledDigraph random_graph(std::uint64_t seed, std::size_t n, std::size_t dim = 2, std::int64_t bound = 30) {
  GeneratorSpec s;
  s.kind = InstanceKind::Graph;
  s.vertices = n;
  s.dim = dim;
  s.bound = bound;
  s.seed = seed;
  return generate_graph(s);
}

W to_w(const WeightVector& v) { return {v.components().begin(), v.components().end()}; }

std::set<W> front_of(const std::set<W>& all) {
  std::set<W> out;
  for (const auto& w : all) {
    bool dominated = false;
    for (const auto& o : all) {
      bool geq = true;
      for (std::size_t j = 0; j < w.size(); ++j) geq = geq && o[j] >= w[j];
      dominated = dominated || (geq && o != w);
    }
    if (!dominated) out.insert(w);
  }
  return out;
}

// Include/exclude recursion over the edge list, straight from the definition.
std::set<W> all_matching_weights(const LabeledDigraph& g) {
  const auto edges = g.edges();
  std::set<W> out;
  std::vector<bool> used(g.size(), false);
  WeightVector acc(g.dim());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) {
      out.insert(to_w(acc));
      return;
    }
    rec(i + 1);
    const auto [a, b] = edges[i];
    if (used[a] || used[b]) return;
    used[a] = used[b] = true;
    acc += g.weight(a, b);
    rec(i + 1);
    acc -= g.weight(a, b);
    used[a] = used[b] = false;
  };
  rec(0);
  return out;
}

// Depth-first enumeration of Hamiltonian cycles from vertex 0.
std::set<W> all_cycle_weights(const LabeledDigraph& g) {
  const std::size_t n = g.size();
  std::set<W> out;
  std::vector<bool> seen(n, false);
  seen[0] = true;
  WeightVector acc(g.dim());
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex at, std::size_t depth) {
    if (depth == n) {
      out.insert(to_w(acc + g.weight(at, 0)));
      return;
    }
    for (Vertex v = 1; v < n; ++v) {
      if (seen[v]) continue;
      seen[v] = true;
      acc += g.weight(at, v);
      dfs(v, depth + 1);
      acc -= g.weight(at, v);
      seen[v] = false;
    }
  };
  dfs(0, 1);
  return out;
}

bool half_covers(const SolutionSet<HamiltonianCycle>& out, const std::set<W>& front) {
  return std::all_of(front.begin(), front.end(), [&](const W& p) {
    return std::any_of(out.begin(), out.end(), [&](const auto& e) {
      for (std::size_t j = 0; j < p.size(); ++j)
        if (2 * e.weight[j] < p[j]) return false;
      return true;
    });
  });
}

// Independent path-set test: degrees <= 1 and no cycle (follow successors).
bool independent_path_set(std::size_t n, const std::vector<Edge>& f) {
  std::vector<int> out(n, -1), indeg(n, 0);
  for (const auto& [a, b] : f) {
    if (out[a] != -1 || ++indeg[b] > 1) return false;
    out[a] = static_cast<int>(b);
  }
  for (Vertex s = 0; s < n; ++s) {
    int at = static_cast<int>(s);
    for (std::size_t steps = 0; at != -1; ++steps) {
      if (steps > n) return false;
      at = out[static_cast<std::size_t>(at)];
    }
  }
  return true;
}

}  // namespace

TEST_CASE("matching pareto: two vertices") {
  LabeledDigraph g(2, 2);
  g.set_weight(0, 1, {3, 1});
  g.set_weight(1, 0, {1, 3});
  const auto p = matching_pareto(g, {0, 1});
  REQUIRE(p.size() == 2);
  CHECK(p[0].weight == WeightVector{1, 3});
  CHECK(p[1].weight == WeightVector{3, 1});
}

TEST_CASE("matching pareto: all-zero weights") {
  const auto g = random_graph(1, 5, 2, 0);
  const auto p = matching_pareto(g, {0, 1});
  REQUIRE(p.size() == 1);
  CHECK(p[0].weight.is_zero());
}

TEST_CASE("matching count recurrence matches enumeration size") {
  CHECK(ExactMatchingBackend::matching_count(0) == 1);
  CHECK(ExactMatchingBackend::matching_count(1) == 1);
  CHECK(ExactMatchingBackend::matching_count(2) == 3);
  // 3 vertices: empty, 6 single edges
  CHECK(ExactMatchingBackend::matching_count(3) == 7);
  CHECK_THROWS_AS(matching_pareto(random_graph(1, 11), {0, 1}), BudgetExceeded);
}

TEST_CASE("exact backend agrees with the edge-order enumerator") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_graph(seed, 2 + seed % 6, 1 + seed % 3, 6);
    const auto p = matching_pareto(g, {1, 4});
    std::set<W> got;
    for (const auto& e : p) {
      CHECK(is_matching(g.size(), e.solution.edges));
      CHECK(g.weight_of(e.solution.edges) == e.weight);
      got.insert(to_w(e.weight));
    }
    CHECK(got == front_of(all_matching_weights(g)));
  }
}

TEST_CASE("path-set enumeration matches a subset filter") {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    LabeledDigraph g(n, 1);
    const auto edges = g.edges();
    for (std::size_t k = 0; k <= 3; ++k) {
      std::set<std::vector<Edge>> expected;
      const std::size_t e = edges.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
        std::vector<Edge> f;
        for (std::size_t i = 0; i < e; ++i)
          if (mask >> i & 1U) f.push_back(edges[i]);
        if (independent_path_set(n, f)) expected.insert(f);
      }
      const auto got = enumerate_path_sets(n, k);
      CHECK(std::set<std::vector<Edge>>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
      for (const auto& f : enumerate_path_sets(n, k, SizeParity::Odd)) CHECK(f.size() % 2 == 1);
      for (const auto& f : enumerate_path_sets(n, k, SizeParity::Even)) CHECK(f.size() % 2 == 0);
    }
  }
}

TEST_CASE("extend_to_cycle completes any matching") {
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& e : matching_pareto(random_graph(n, n), {0, 1})) {
      const auto c = extend_to_cycle(n, e.solution);
      CHECK(is_hamiltonian(n, c));
      const auto ce = c.edges();
      for (const auto& me : e.solution.edges) CHECK(std::find(ce.begin(), ce.end(), me) != ce.end());
    }
  (void)rng;
  CHECK(extend_to_cycle(4, Matching{{{0, 1}, {2, 3}}}).order() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(extend_to_cycle(4, Matching{{{3, 0}}}).order() == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("tsp oracle examples") {
  const auto g2 = random_graph(1, 2);
  const auto o2 = tsp_oracle(g2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].solution.next == std::vector<Vertex>{1, 0});
  LabeledDigraph g3(3, 2);
  g3.set_weight(0, 1, {1, 0});
  g3.set_weight(1, 2, {1, 0});
  g3.set_weight(2, 0, {1, 0});
  g3.set_weight(0, 2, {0, 1});
  g3.set_weight(2, 1, {0, 1});
  g3.set_weight(1, 0, {0, 1});
  const auto o3 = tsp_oracle(g3);
  REQUIRE(o3.size() == 2);
  CHECK(o3[0].weight == WeightVector{0, 3});
  CHECK(o3[1].weight == WeightVector{3, 0});
  CHECK_THROWS_AS(tsp_oracle(random_graph(1, 10)), BudgetExceeded);
}

TEST_CASE("tsp oracle agrees with depth-first enumeration and is relabeling invariant") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const auto g = random_graph(seed, n, 2, 10);
    std::set<W> got;
    for (const auto& e : tsp_oracle(g)) {
      CHECK(is_hamiltonian(n, e.solution));
      got.insert(to_w(e.weight));
    }
    CHECK(got == front_of(all_cycle_weights(g)));

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LabeledDigraph h(n, 2);
    for (const auto& [a, b] : g.edges()) h.set_weight(perm[a], perm[b], g.weight(a, b));
    std::set<W> relabeled;
    for (const auto& e : tsp_oracle(h)) relabeled.insert(to_w(e.weight));
    CHECK(relabeled == got);
  }
}

TEST_CASE("maxatsp: half guarantee against cycle enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = seed % 2 ? 4 : 6;
    const auto g = random_graph(seed, n, 1 + seed % 3);
    const auto out = maxatsp_approx(g, {1, static_cast<std::int64_t>(n)});
    for (const auto& e : out) {
      CHECK(is_hamiltonian(n, e.solution));
      CHECK(cycle_weight(g, e.solution) == e.weight);
      CHECK(e.weight.dim() == g.dim());
    }
    CHECK(half_covers(out, front_of(all_cycle_weights(g))));
  }
}

TEST_CASE("maxatsp: uniform weights give a 1-approximation") {
  LabeledDigraph g(6, 2);
  for (const auto& [a, b] : g.edges()) g.set_weight(a, b, {4, 4});
  const auto out = maxatsp_approx(g, {0, 1});
  REQUIRE(out.size() >= 1);
  CHECK(out[0].weight == WeightVector{24, 24});
  CHECK(is_alpha_approx_set(out, tsp_oracle(g), {1, 1}).success);
  CHECK(is_alpha_approx_set(maxatsp_half_wrapper(g), tsp_oracle(g), {1, 1}).success);
}

TEST_CASE("maxatsp: odd vertex count needs the wrapper") {
  const auto g = random_graph(3, 5);
  CHECK_THROWS_AS(maxatsp_approx(g, {1, 5}), PreconditionError);
  const auto out = maxatsp_half_wrapper(g);
  for (const auto& e : out) CHECK(is_hamiltonian(5, e.solution));
  CHECK(half_covers(out, front_of(all_cycle_weights(g))));
}

TEST_CASE("wrapper output dominates the plain output") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = random_graph(seed, 4);
    const auto plain = maxatsp_approx(g, {0, 1});
    const auto wrapped = maxatsp_half_wrapper(g);
    CHECK(is_alpha_approx_set(wrapped, plain, {1, 1}).success);
    CHECK(half_covers(wrapped, front_of(all_cycle_weights(g))));
  }
}

TEST_CASE("maxatsp: threads and budget") {
  const auto g = random_graph(7, 6);
  MaxAtspOptions par;
  par.threads = 3;
  CHECK(maxatsp_approx(g, {1, 6}, par) == maxatsp_approx(g, {1, 6}));
  MaxAtspOptions tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS(maxatsp_approx(g, {1, 6}, tiny), BudgetExceeded);
  CHECK_THROWS_AS(maxatsp_half_wrapper(g, tiny), BudgetExceeded);
  CHECK(maxatsp_cost(6, 2, ExactMatchingBackend{}) > 0);
}

TEST_CASE("matching witness on random tours") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + 2 * (rng() % 3);
    const auto g = random_graph(900 + t, n);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    HamiltonianCycle tour{std::vector<Vertex>(n)};
    for (std::size_t i = 0; i < n; ++i) tour.next[order[i]] = order[(i + 1) % n];
    const auto w = matching_witness(g, tour);
    CHECK(w.f.size() <= 2);
    CHECK(w.contracted);
    CHECK(w.is_matching);
    CHECK(w.bound_holds);
    const auto te = tour.edges();
    for (const auto& e : w.f) CHECK(std::find(te.begin(), te.end(), e) != te.end());
  }
}

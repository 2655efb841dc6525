#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "moapprox/contraction.hpp"
#include "moapprox/generate.hpp"

using namespace moapprox;

namespace {

constexpr Vertex U = 0, V = 1, X = 2, Y = 3;

LabeledDigraph figure_graph() {
  LabeledDigraph g(4, 1);
  const std::vector<std::tuple<Vertex, Vertex, std::int64_t>> w{
      {U, Y, 1}, {Y, U, 5}, {Y, V, 1}, {V, Y, 3}, {V, X, 1}, {X, V, 1},
      {X, U, 1}, {U, X, 1}, {U, V, 2}, {V, U, 1}, {Y, X, 7}, {X, Y, 1}};
  for (const auto& [a, b, c] : w) g.set_weight(a, b, {c});
  return g;
}

LabeledDigraph random_graph(std::uint64_t seed, std::size_t n, std::size_t dim = 2) {
  GeneratorSpec s;
  s.kind = InstanceKind::Graph;
  s.vertices = n;
  s.dim = dim;
  s.bound = 30;
  s.seed = seed;
  return generate_graph(s);
}

// Weight table keyed by original labels; edge contraction as a literal rule.
using Table = std::map<std::pair<Vertex, Vertex>, WeightVector>;

Table table_of(const LabeledDigraph& g) {
  Table t;
  for (const auto& [a, b] : g.edges()) t[{g.labels()[a], g.labels()[b]}] = g.weight(a, b);
  return t;
}

void contract_in_table(Table& t, std::vector<Vertex>& alive, Vertex u, Vertex v) {
  Table next;
  for (const auto& [e, w] : t) {
    if (e.first == v || e.second == v) continue;
    next[e] = w;
  }
  for (Vertex z : alive)
    if (z != u && z != v) next[{u, z}] = t.at({v, z});
  t = std::move(next);
  alive.erase(std::find(alive.begin(), alive.end(), v));
}

// Random vertex-disjoint paths: cut a random permutation into pieces.
std::vector<std::vector<Vertex>> random_paths(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Vertex>> paths;
  std::size_t edges = 0, i = 0;
  const std::size_t target = rng() % (max_edges + 1);
  while (i < n && edges < target) {
    const std::size_t len = 2 + rng() % 2;
    if (i + len > n) break;
    std::vector<Vertex> p(perm.begin() + static_cast<long>(i), perm.begin() + static_cast<long>(i + len));
    if (edges + len - 1 > target) p.resize(target - edges + 1);
    edges += p.size() - 1;
    i += p.size() + (rng() % 2);
    paths.push_back(p);
  }
  return paths;
}

std::vector<Edge> edges_of(const std::vector<std::vector<Vertex>>& paths) {
  std::vector<Edge> q;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) q.emplace_back(p[i], p[i + 1]);
  return q;
}

HamiltonianCycle random_cycle(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  HamiltonianCycle c{std::vector<Vertex>(n)};
  for (std::size_t i = 0; i < n; ++i) c.next[order[i]] = order[(i + 1) % n];
  return c;
}

}  // namespace

TEST_CASE("figure: contracting the path u -> v -> y") {
  const auto g = figure_graph();
  const auto rec = contract(g, {{U, V}, {V, Y}});
  REQUIRE(rec.graph.size() == 2);
  CHECK(rec.graph.labels() == std::vector<Vertex>{U, X});
  CHECK(rec.graph.weight(0, 1) == WeightVector{7});  // w''(u, x)
  CHECK(rec.graph.weight(1, 0) == WeightVector{1});  // w''(x, u)
  CHECK(rec.path_weight == WeightVector{5});

  // edge by edge, last edge first
  const auto step1 = contract_edge(g, V, Y);
  CHECK(step1.size() == 3);
  CHECK(contract_sequentially(g, {{U, V, Y}}) == rec.graph);

  const HamiltonianCycle t{{1, 0}};
  const auto full = expand(rec, t);
  CHECK(full.order() == std::vector<Vertex>{U, V, Y, X});
  CHECK(cycle_weight(g, full) == WeightVector{13});
  CHECK(cycle_weight(rec.graph, t) + rec.path_weight == WeightVector{13});
  CHECK(cycle_weight(rec.graph, t) == WeightVector{8});
}

TEST_CASE("empty path set is the identity") {
  const auto g = random_graph(1, 5);
  const auto rec = contract(g, {});
  CHECK(rec.graph == g);
  CHECK(rec.path_weight.is_zero());
  std::mt19937_64 rng(2);
  const auto t = random_cycle(rng, 5);
  CHECK(expand(rec, t) == t);
}

TEST_CASE("contraction rejects bad edge sets") {
  const auto g = random_graph(2, 5);
  CHECK_THROWS_AS(contract(g, {{0, 1}, {0, 2}}), PreconditionError);   // out-degree 2
  CHECK_THROWS_AS(contract(g, {{0, 1}, {1, 0}}), PreconditionError);   // cycle
  CHECK_THROWS_AS(contract(g, {{0, 7}}), PreconditionError);           // range
  CHECK_THROWS_AS(contract(g, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), PreconditionError);  // one vertex left
  CHECK_THROWS_AS(contract_edge(g, 1, 1), PreconditionError);
}

TEST_CASE("closed form agrees with literal edge-by-edge contraction in any path order") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng() % 5;
    const auto g = random_graph(100 + t, n);
    auto paths = random_paths(rng, n, n - 2);
    const auto rec = contract(g, edges_of(paths));

    Table table = table_of(g);
    std::vector<Vertex> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    auto shuffled = paths;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& p : shuffled)
      for (std::size_t i = p.size() - 1; i > 0; --i) contract_in_table(table, alive, p[i - 1], p[i]);
    CHECK(table == table_of(rec.graph));

    CHECK(contract_sequentially(g, shuffled) == rec.graph);
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(contract_sequentially(g, shuffled) == rec.graph);
  }
}

TEST_CASE("expansion identity on random triples") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = random_graph(500 + t, n);
    const auto paths = random_paths(rng, n, n - 2);
    const auto q = edges_of(paths);
    const auto rec = contract(g, q);
    const auto tc = random_cycle(rng, rec.graph.size());
    const auto full = expand(rec, tc);
    CHECK(is_hamiltonian(n, full));
    const auto fe = full.edges();
    for (const auto& e : q) CHECK(std::find(fe.begin(), fe.end(), e) != fe.end());
    // independent recomputation of both sides
    WeightVector lhs(2), rhs(2);
    for (const auto& [a, b] : fe) lhs += g.weight(a, b);
    for (Vertex a = 0; a < rec.graph.size(); ++a) rhs += rec.graph.weight(a, tc.next[a]);
    for (const auto& [a, b] : q) rhs += g.weight(a, b);
    CHECK(lhs == rhs);
    // expansion walks each survivor followed by the rest of its path
    std::vector<Vertex> walk;
    Vertex a = 0;
    for (std::size_t i = 0; i < rec.graph.size(); ++i, a = tc.next[a]) {
      const Vertex s = rec.graph.labels()[a];
      auto it = std::find_if(paths.begin(), paths.end(), [&](const auto& p) { return p.front() == s; });
      if (it == paths.end()) walk.push_back(s);
      else walk.insert(walk.end(), it->begin(), it->end());
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(full.next[walk[i]] == walk[(i + 1) % n]);
  }
}

TEST_CASE("expand rejects a non-Hamiltonian tour") {
  const auto rec = contract(random_graph(3, 5), {{0, 1}});
  CHECK_THROWS_AS(expand(rec, HamiltonianCycle{{1, 0, 3, 2}}), PreconditionError);
  CHECK_THROWS_AS(expand(rec, HamiltonianCycle{{1, 2}}), PreconditionError);
}

TEST_CASE("contract_edge_set maps surviving edges") {
  const auto g = random_graph(4, 6);
  const auto rec = contract(g, {{0, 1}, {1, 2}});
  // S = path plus (2,3) and (4,5): (2,3) leaves the path's tail, which is the survivor 0
  const auto m = contract_edge_set(rec, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  REQUIRE(m.size() == 2);
  CHECK(rec.graph.labels()[m[0].first] == 0);
  CHECK(rec.graph.labels()[m[0].second] == 3);
  CHECK(rec.graph.weight(m[0].first, m[0].second) == g.weight(2, 3));
  CHECK_THROWS_AS(contract_edge_set(rec, {{0, 1}, {2, 3}}), PreconditionError);
  CHECK_THROWS_AS(contract_edge_set(rec, {{0, 1}, {1, 2}, {3, 4}, {3, 5}}), PreconditionError);
}

#include "moapprox/maxatsp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "moapprox/balancing.hpp"

namespace moapprox {

namespace {

std::size_t even_dim(std::size_t dim) { return dim + (dim % 2); }

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

bool parity_ok(std::size_t size, SizeParity parity) {
  switch (parity) {
    case SizeParity::Any: return true;
    case SizeParity::Even: return size % 2 == 0;
    case SizeParity::Odd: return size % 2 == 1;
  }
  return false;
}

const MatchingBackend& backend_of(const MaxAtspOptions& opts) {
  static const ExactMatchingBackend exact;
  return opts.backend ? *opts.backend : exact;
}

// Path sets of size <= max_size whose contraction keeps at least two vertices.
std::vector<std::vector<Edge>> contractible_sets(std::size_t n, std::size_t max_size, SizeParity parity) {
  auto sets = enumerate_path_sets(n, max_size, parity);
  std::erase_if(sets, [&](const std::vector<Edge>& f) { return n - f.size() < 2; });
  return sets;
}

// Runs fn(index, thread_local_sink) over [0, count) on up to `threads`
// threads and returns the union of the sinks.
std::set<std::vector<Vertex>> parallel_collect(std::size_t count, unsigned threads, const auto& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::set<std::vector<Vertex>>> sinks(threads);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < count; i += threads) fn(i, sinks[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::set<std::vector<Vertex>> all;
  for (auto& s : sinks) all.merge(s);
  return all;
}

SolutionSet<HamiltonianCycle> to_solution_set(const LabeledDigraph& g, const std::set<std::vector<Vertex>>& cycles) {
  SolutionSet<HamiltonianCycle> out;
  out.reserve(cycles.size());
  for (const auto& next : cycles) {
    HamiltonianCycle c{next};
    auto w = cycle_weight(g, c);
    out.push_back({std::move(c), std::move(w)});
  }
  return pareto_filter(std::move(out));
}

void require_graph(const LabeledDigraph& g, const char* who) {
  g.validate();
  if (g.size() < 2) throw PreconditionError(std::string(who) + ": graph needs at least two vertices");
}

}  // namespace

std::vector<std::vector<Edge>> enumerate_path_sets(std::size_t n, std::size_t max_size, SizeParity parity) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) all.emplace_back(u, v);

  std::vector<std::vector<Edge>> out;
  std::vector<int> succ(n, -1), pred(n, -1);
  std::vector<Edge> cur;
  auto closes_cycle = [&](Vertex u, Vertex v) {
    for (int x = static_cast<int>(v); x != -1; x = succ[x])
      if (x == static_cast<int>(u)) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (parity_ok(cur.size(), parity)) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = from; i < all.size(); ++i) {
      const auto [u, v] = all[i];
      if (succ[u] != -1 || pred[v] != -1 || closes_cycle(u, v)) continue;
      succ[u] = static_cast<int>(v);
      pred[v] = static_cast<int>(u);
      cur.push_back(all[i]);
      self(self, i + 1);
      cur.pop_back();
      succ[u] = pred[v] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

HamiltonianCycle extend_to_cycle(std::size_t n, const Matching& m) {
  if (!is_matching(n, m.edges)) throw PreconditionError("extend_to_cycle: edge set is not a matching");
  std::vector<int> succ(n, -1), pred(n, -1);
  for (const auto& [u, v] : m.edges) {
    succ[u] = static_cast<int>(v);
    pred[v] = static_cast<int>(u);
  }
  // Fragments are identified by their first vertex; their last vertex is the
  // matching partner (or the vertex itself).
  std::vector<Vertex> starts;
  for (Vertex v = 0; v < n; ++v)
    if (pred[v] == -1) starts.push_back(v);
  auto last_of = [&](Vertex s) { return succ[s] == -1 ? s : static_cast<Vertex>(succ[s]); };

  std::vector<Vertex> first_frag;
  const Vertex zero_start = pred[0] == -1 ? 0 : static_cast<Vertex>(pred[0]);
  first_frag.push_back(zero_start);
  for (auto s : starts)
    if (s != zero_start) first_frag.push_back(s);

  HamiltonianCycle c{std::vector<Vertex>(n)};
  for (std::size_t i = 0; i < first_frag.size(); ++i) {
    const Vertex s = first_frag[i];
    if (succ[s] != -1) c.next[s] = static_cast<Vertex>(succ[s]);
    c.next[last_of(s)] = first_frag[(i + 1) % first_frag.size()];
  }
  if (!is_hamiltonian(n, c)) throw InvariantViolation("extend_to_cycle: completion is not Hamiltonian");
  return c;
}

std::uint64_t maxatsp_cost(std::size_t n, std::size_t dim, const MatchingBackend& backend) {
  std::uint64_t total = 0;
  for (const auto& f : contractible_sets(n, even_dim(dim), SizeParity::Any))
    total = sat_add(total, backend.cost(n - f.size()));
  return total;
}

SolutionSet<HamiltonianCycle> maxatsp_approx(const LabeledDigraph& g, const Rational& eps, const MaxAtspOptions& opts) {
  require_graph(g, "maxatsp_approx");
  const std::size_t n = g.size();
  if (n % 2 != 0)
    throw PreconditionError("maxatsp_approx: the vertex count must be even (" + std::to_string(n) +
                            " given); use the wrapper for odd graphs");
  const auto& backend = backend_of(opts);
  const std::size_t d = even_dim(g.dim());
  const auto work = g.padded(d - g.dim());
  const auto sets = contractible_sets(n, d, SizeParity::Any);

  std::uint64_t planned = 0;
  for (const auto& f : sets) planned = sat_add(planned, backend.cost(n - f.size()));
  if (planned > opts.budget)
    throw BudgetExceeded("maxatsp_approx: " + std::to_string(n) + " vertices with " + std::to_string(g.dim()) +
                         " objectives need " + std::to_string(planned) + " matching work units, budget is " +
                         std::to_string(opts.budget));

  auto cycles = parallel_collect(sets.size(), opts.threads, [&](std::size_t i, std::set<std::vector<Vertex>>& sink) {
    const auto rec = contract(work, sets[i]);
    for (const auto& entry : backend.pareto(rec.graph, eps)) {
      const auto tour = extend_to_cycle(rec.graph.size(), entry.solution);
      sink.insert(expand(rec, tour).next);
    }
  });
  return to_solution_set(g, cycles);
}

SolutionSet<HamiltonianCycle> maxatsp_half_wrapper(const LabeledDigraph& g, const MaxAtspOptions& opts) {
  require_graph(g, "maxatsp_half_wrapper");
  const std::size_t n = g.size();
  const auto& backend = backend_of(opts);
  const std::size_t d = even_dim(g.dim());
  const auto outer = contractible_sets(n, d, n % 2 == 0 ? SizeParity::Even : SizeParity::Odd);
  const Rational eps{1, static_cast<std::int64_t>(n)};

  std::map<std::size_t, std::uint64_t> inner_cost;
  std::uint64_t planned = 0;
  for (const auto& f : outer) {
    const std::size_t left = n - f.size();
    auto it = inner_cost.find(left);
    if (it == inner_cost.end()) it = inner_cost.emplace(left, maxatsp_cost(left, g.dim(), backend)).first;
    planned = sat_add(planned, it->second);
  }
  if (planned > opts.budget)
    throw BudgetExceeded("maxatsp_half_wrapper: " + std::to_string(n) + " vertices need " + std::to_string(planned) +
                         " matching work units, budget is " + std::to_string(opts.budget));

  MaxAtspOptions inner = opts;
  inner.threads = 1;
  inner.budget = UINT64_MAX;
  auto cycles = parallel_collect(outer.size(), opts.threads, [&](std::size_t i, std::set<std::vector<Vertex>>& sink) {
    const auto rec = contract(g, outer[i]);
    for (const auto& entry : maxatsp_approx(rec.graph, eps, inner)) sink.insert(expand(rec, entry.solution).next);
  });
  return to_solution_set(g, cycles);
}

SolutionSet<HamiltonianCycle> tsp_oracle(const LabeledDigraph& g, std::size_t vertex_cap) {
  require_graph(g, "tsp_oracle");
  const std::size_t n = g.size();
  if (n > vertex_cap)
    throw BudgetExceeded("tsp_oracle: " + std::to_string(n) + " vertices exceed the cap of " + std::to_string(vertex_cap));
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), Vertex{1});
  std::map<WeightVector, HamiltonianCycle> best;
  HamiltonianCycle c{std::vector<Vertex>(n)};
  do {
    Vertex prev = 0;
    for (auto v : rest) {
      c.next[prev] = v;
      prev = v;
    }
    c.next[prev] = 0;
    auto w = g.weight_of(c.edges());
    auto it = best.find(w);
    if (it == best.end())
      best.emplace(std::move(w), c);
    else if (c < it->second)
      it->second = c;
  } while (std::next_permutation(rest.begin(), rest.end()));
  SolutionSet<HamiltonianCycle> all;
  for (auto& [w, cyc] : best) all.push_back({cyc, w});
  return pareto_filter(std::move(all));
}

MatchingWitness matching_witness(const LabeledDigraph& g, const HamiltonianCycle& tour) {
  require_graph(g, "matching_witness");
  const std::size_t n = g.size();
  if (n % 2 != 0) throw PreconditionError("matching_witness: the vertex count must be even");
  if (!is_hamiltonian(n, tour)) throw PreconditionError("matching_witness: not a Hamiltonian cycle");
  const std::size_t d = even_dim(g.dim());
  const auto work = g.padded(d - g.dim());

  // T = u_1, e_1, v_1, f_1, u_2, ... starting at vertex 0.
  const auto order = tour.order();
  const std::size_t p = n / 2;
  std::vector<Edge> e(p), f(p);
  for (std::size_t i = 0; i < p; ++i) {
    e[i] = {order[2 * i], order[2 * i + 1]};
    f[i] = {order[2 * i + 1], order[(2 * i + 2) % n]};
  }
  BalancingInstance inst{BalanceVariant::Combinatorial, d / 2, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < p; ++i) {
    inst.x.push_back(work.weight(e[i].first, e[i].second));
    inst.y.push_back(work.weight(f[i].first, f[i].second));
  }
  const auto bal = balance_combinatorial(inst);
  const auto in = bal.family.membership();

  MatchingWitness wit;
  for (const auto& iv : bal.family.intervals) {
    wit.f.push_back(e[iv.a - 1]);
    wit.f.push_back(f[iv.b - 1]);
    wit.s.push_back(f[iv.b - 1]);
  }
  for (std::size_t i = 1; i <= p; ++i) wit.s.push_back(in[i] ? e[i - 1] : f[i - 1]);
  std::sort(wit.f.begin(), wit.f.end());
  wit.f.erase(std::unique(wit.f.begin(), wit.f.end()), wit.f.end());
  std::sort(wit.s.begin(), wit.s.end());
  wit.s.erase(std::unique(wit.s.begin(), wit.s.end()), wit.s.end());

  wit.tour_weight = g.weight_of(tour.edges());
  wit.f_weight = g.weight_of(wit.f);
  if (!is_path_set(n, wit.f) || n - wit.f.size() < 2) return wit;
  const auto rec = contract(g, wit.f);
  wit.contracted = true;
  wit.matching = contract_edge_set(rec, wit.s);
  wit.is_matching = is_matching(rec.graph.size(), wit.matching);
  wit.matching_weight = rec.graph.weight_of(wit.matching);
  // 2 w'(M') >= w(T) - 2 w(F)
  wit.bound_holds = (wit.matching_weight + wit.f_weight).scaled(2).geq(wit.tour_weight);
  return wit;
}

}  // namespace moapprox

#include "moapprox/contraction.hpp"

#include <algorithm>

namespace moapprox {

ContractionRecord contract(const LabeledDigraph& g, const std::vector<Edge>& q) {
  const std::size_t n = g.size();
  ContractionRecord rec;
  rec.original_size = n;
  rec.paths = decompose_paths(n, q);
  rec.contracted_edges = q;
  std::sort(rec.contracted_edges.begin(), rec.contracted_edges.end());
  rec.path_weight = g.weight_of(q);

  std::vector<Vertex> carries(n);
  std::vector<std::uint8_t> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) carries[v] = v;
  for (const auto& p : rec.paths) {
    for (std::size_t i = 1; i < p.size(); ++i) removed[p[i]] = 1;
    carries[p.front()] = p.back();
  }

  rec.to_contracted.assign(n, -1);
  std::vector<Vertex> survivors, labels;
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    rec.to_contracted[v] = static_cast<int>(survivors.size());
    survivors.push_back(v);
    rec.out_vertex.push_back(carries[v]);
    labels.push_back(g.labels()[v]);
  }
  const std::size_t m = survivors.size();
  if (m < 2) throw PreconditionError("contract: contraction would leave fewer than two vertices");

  rec.graph = LabeledDigraph(m, g.dim());
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < m; ++b)
      if (a != b) rec.graph.set_weight(a, b, g.weight(rec.out_vertex[a], survivors[b]));
  rec.graph.set_labels(std::move(labels));
  return rec;
}

LabeledDigraph contract_edge(const LabeledDigraph& g, Vertex u, Vertex v) {
  const std::size_t n = g.size();
  if (u >= n || v >= n || u == v) throw PreconditionError("contract_edge: invalid edge");
  if (n < 3) throw PreconditionError("contract_edge: graph too small to contract");
  std::vector<Vertex> keep;
  std::vector<Vertex> labels;
  for (Vertex x = 0; x < n; ++x)
    if (x != v) {
      keep.push_back(x);
      labels.push_back(g.labels()[x]);
    }
  LabeledDigraph h(n - 1, g.dim());
  for (Vertex a = 0; a < keep.size(); ++a)
    for (Vertex b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      const Vertex from = keep[a] == u ? v : keep[a];
      h.set_weight(a, b, g.weight(from, keep[b]));
    }
  h.set_labels(std::move(labels));
  return h;
}

LabeledDigraph contract_sequentially(const LabeledDigraph& g, const std::vector<std::vector<Vertex>>& paths) {
  LabeledDigraph cur = g;
  auto index_of = [&](Vertex label) {
    const auto& l = cur.labels();
    auto it = std::find(l.begin(), l.end(), label);
    if (it == l.end()) throw PreconditionError("contract_sequentially: vertex already contracted away");
    return static_cast<Vertex>(it - l.begin());
  };
  for (const auto& p : paths)
    for (std::size_t i = p.size() - 1; i >= 1; --i) cur = contract_edge(cur, index_of(p[i - 1]), index_of(p[i]));
  return cur;
}

HamiltonianCycle expand(const ContractionRecord& rec, const HamiltonianCycle& t) {
  const std::size_t m = rec.graph.size();
  if (!is_hamiltonian(m, t)) throw PreconditionError("expand: tour is not Hamiltonian in the contracted graph");
  HamiltonianCycle out{std::vector<Vertex>(rec.original_size)};
  for (const auto& p : rec.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.next[p[i]] = p[i + 1];
  std::vector<Vertex> survivor(m);
  for (Vertex v = 0; v < rec.original_size; ++v)
    if (rec.to_contracted[v] >= 0) survivor[static_cast<std::size_t>(rec.to_contracted[v])] = v;
  for (Vertex a = 0; a < m; ++a) out.next[rec.out_vertex[a]] = survivor[t.next[a]];
  if (!is_hamiltonian(rec.original_size, out)) throw InvariantViolation("expand: result is not a Hamiltonian cycle");
  return out;
}

std::vector<Edge> contract_edge_set(const ContractionRecord& rec, const std::vector<Edge>& s) {
  const std::size_t n = rec.original_size;
  std::vector<int> outdeg(n, 0), indeg(n, 0);
  for (const auto& [u, v] : s) {
    if (u >= n || v >= n || u == v) throw PreconditionError("contract_edge_set: invalid edge");
    if (++outdeg[u] > 1 || ++indeg[v] > 1) throw PreconditionError("contract_edge_set: vertex degree exceeds one");
  }
  for (const auto& e : rec.contracted_edges)
    if (std::find(s.begin(), s.end(), e) == s.end())
      throw PreconditionError("contract_edge_set: edge set does not contain the contracted paths");

  std::vector<int> tail_index(n, -1);
  for (Vertex a = 0; a < rec.out_vertex.size(); ++a) tail_index[rec.out_vertex[a]] = static_cast<int>(a);
  std::vector<Edge> out;
  for (const auto& e : s) {
    if (std::binary_search(rec.contracted_edges.begin(), rec.contracted_edges.end(), e)) continue;
    const int a = tail_index[e.first], b = rec.to_contracted[e.second];
    if (a < 0 || b < 0) throw InvariantViolation("contract_edge_set: edge touches a removed vertex");
    out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace moapprox

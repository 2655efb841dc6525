#include "moapprox/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace moapprox {

LabeledDigraph::LabeledDigraph(std::size_t num_vertices, std::size_t dim)
    : n_(num_vertices), dim_(dim), w_(num_vertices * num_vertices, WeightVector(dim)), labels_(num_vertices) {
  if (dim < 1) throw PreconditionError("graph: objective dimension must be >= 1");
  std::iota(labels_.begin(), labels_.end(), Vertex{0});
}

const WeightVector& LabeledDigraph::weight(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v)
    throw PreconditionError("graph: no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return w_[u * n_ + v];
}

void LabeledDigraph::set_weight(Vertex u, Vertex v, WeightVector w) {
  if (u >= n_ || v >= n_ || u == v)
    throw PreconditionError("graph: no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (w.dim() != dim_) throw DimensionError("graph: edge weight dimension " + std::to_string(w.dim()) + " != " + std::to_string(dim_));
  w_[u * n_ + v] = std::move(w);
}

void LabeledDigraph::set_labels(std::vector<Vertex> labels) {
  if (labels.size() != n_) throw PreconditionError("graph: label count does not match vertex count");
  labels_ = std::move(labels);
}

WeightVector LabeledDigraph::weight_of(const std::vector<Edge>& edges) const {
  WeightVector s(dim_);
  for (const auto& [u, v] : edges) s += weight(u, v);
  return s;
}

std::vector<Edge> LabeledDigraph::edges() const {
  std::vector<Edge> e;
  e.reserve(n_ * (n_ ? n_ - 1 : 0));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (u != v) e.emplace_back(u, v);
  return e;
}

LabeledDigraph LabeledDigraph::padded(std::size_t extra) const {
  LabeledDigraph g(*this);
  if (extra == 0) return g;
  g.dim_ += extra;
  for (auto& w : g.w_) w = w.padded(extra);
  return g;
}

void LabeledDigraph::validate() const {
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v) {
      if (u == v) continue;
      const auto& w = w_[u * n_ + v];
      if (w.dim() != dim_) throw DimensionError("graph: edge weight has wrong dimension");
      if (!w.non_negative())
        throw PreconditionError("graph: edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") has a negative weight");
    }
}

std::string Matching::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ' ';
    s += "(" + std::to_string(edges[i].first + 1) + "," + std::to_string(edges[i].second + 1) + ")";
  }
  return s + "}";
}

std::vector<Edge> HamiltonianCycle::edges() const {
  std::vector<Edge> e;
  e.reserve(next.size());
  for (Vertex u = 0; u < next.size(); ++u) e.emplace_back(u, next[u]);
  return e;
}

std::vector<Vertex> HamiltonianCycle::order() const {
  std::vector<Vertex> o;
  if (next.empty()) return o;
  Vertex v = 0;
  do {
    o.push_back(v);
    v = next[v];
  } while (v != 0 && o.size() <= next.size());
  return o;
}

std::string HamiltonianCycle::str() const {
  std::string s;
  for (auto v : order()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

bool is_matching(std::size_t num_vertices, const std::vector<Edge>& edges) {
  std::vector<std::uint8_t> used(num_vertices, 0);
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices || u == v) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

bool is_path_set(std::size_t num_vertices, const std::vector<Edge>& edges) {
  std::vector<int> out(num_vertices, -1), in(num_vertices, -1);
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices || u == v) return false;
    if (out[u] != -1 || in[v] != -1) return false;
    out[u] = static_cast<int>(v);
    in[v] = static_cast<int>(u);
  }
  // With in/out degree <= 1 the only obstruction left is a cycle: every
  // component must contain a vertex without a predecessor.
  std::vector<std::uint8_t> seen(num_vertices, 0);
  for (Vertex s = 0; s < num_vertices; ++s) {
    if (in[s] != -1) continue;
    for (int v = static_cast<int>(s); v != -1; v = out[v]) seen[v] = 1;
  }
  for (const auto& e : edges)
    if (!seen[e.first]) return false;
  return true;
}

bool is_hamiltonian(std::size_t num_vertices, const HamiltonianCycle& cycle) {
  if (cycle.next.size() != num_vertices || num_vertices < 2) return false;
  std::vector<std::uint8_t> seen(num_vertices, 0);
  Vertex v = 0;
  for (std::size_t step = 0; step < num_vertices; ++step) {
    if (v >= num_vertices || seen[v] || cycle.next[v] == v) return false;
    seen[v] = 1;
    v = cycle.next[v];
  }
  return v == 0;
}

HamiltonianCycle cycle_from_edges(std::size_t num_vertices, const std::vector<Edge>& edges) {
  HamiltonianCycle c{std::vector<Vertex>(num_vertices, static_cast<Vertex>(num_vertices))};
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices || c.next[u] != num_vertices)
      throw PreconditionError("edge set is not a Hamiltonian cycle");
    c.next[u] = v;
  }
  if (edges.size() != num_vertices || !is_hamiltonian(num_vertices, c))
    throw PreconditionError("edge set is not a Hamiltonian cycle");
  return c;
}

std::vector<std::vector<Vertex>> decompose_paths(std::size_t num_vertices, const std::vector<Edge>& edges) {
  if (!is_path_set(num_vertices, edges)) throw PreconditionError("edge set is not a set of vertex-disjoint paths");
  std::vector<int> out(num_vertices, -1), in(num_vertices, -1);
  for (const auto& [u, v] : edges) {
    out[u] = static_cast<int>(v);
    in[v] = static_cast<int>(u);
  }
  std::vector<std::vector<Vertex>> paths;
  for (Vertex s = 0; s < num_vertices; ++s) {
    if (in[s] != -1 || out[s] == -1) continue;
    std::vector<Vertex> p;
    for (int v = static_cast<int>(s); v != -1; v = out[v]) p.push_back(static_cast<Vertex>(v));
    paths.push_back(std::move(p));
  }
  return paths;
}

WeightVector cycle_weight(const LabeledDigraph& g, const HamiltonianCycle& c) {
  if (!is_hamiltonian(g.size(), c)) throw PreconditionError("cycle_weight: not a Hamiltonian cycle of the graph");
  return g.weight_of(c.edges());
}

}  // namespace moapprox

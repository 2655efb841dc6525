#ifndef MOAPPROX_DIGRAPH_HPP
#define MOAPPROX_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moapprox/weight.hpp"

namespace moapprox {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Complete directed graph with a k-dimensional weight on every ordered pair
 * u != v. Vertices are 0-based; `labels` carries the vertex names of the
 * graph this one was contracted from (identity for an original graph).
 */
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(std::size_t num_vertices, std::size_t dim);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }

  [[nodiscard]] const WeightVector& weight(Vertex u, Vertex v) const;
  void set_weight(Vertex u, Vertex v, WeightVector w);

  [[nodiscard]] const std::vector<Vertex>& labels() const { return labels_; }
  void set_labels(std::vector<Vertex> labels);

  /// Sum of edge weights; throws on self-loops or out-of-range vertices.
  [[nodiscard]] WeightVector weight_of(const std::vector<Edge>& edges) const;
  /// All ordered pairs u != v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;
  /// Copy whose weights carry `extra` trailing zero objectives.
  [[nodiscard]] LabeledDigraph padded(std::size_t extra) const;

  void validate() const;
  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::vector<WeightVector> w_;  // row-major n x n, diagonal unused
  std::vector<Vertex> labels_;
};

/// Edge set in which no two edges share a head or tail vertex.
struct Matching {
  std::vector<Edge> edges;  // sorted
  friend auto operator<=>(const Matching&, const Matching&) = default;
  [[nodiscard]] std::string str() const;
};

/// Directed Hamiltonian cycle stored as a successor table.
struct HamiltonianCycle {
  std::vector<Vertex> next;

  [[nodiscard]] std::vector<Edge> edges() const;
  /// Vertex order starting at vertex 0.
  [[nodiscard]] std::vector<Vertex> order() const;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const HamiltonianCycle&, const HamiltonianCycle&) = default;
};

bool is_matching(std::size_t num_vertices, const std::vector<Edge>& edges);
/// True iff the edges form vertex-disjoint simple paths (no cycles).
bool is_path_set(std::size_t num_vertices, const std::vector<Edge>& edges);
bool is_hamiltonian(std::size_t num_vertices, const HamiltonianCycle& cycle);

/// Builds the successor table of a Hamiltonian cycle from its edges; throws
/// PreconditionError if the edges do not form one.
HamiltonianCycle cycle_from_edges(std::size_t num_vertices, const std::vector<Edge>& edges);

/// Vertex sequences of the paths in a path set, ordered by first vertex.
std::vector<std::vector<Vertex>> decompose_paths(std::size_t num_vertices, const std::vector<Edge>& edges);

WeightVector cycle_weight(const LabeledDigraph& g, const HamiltonianCycle& c);

}  // namespace moapprox

#endif  // MOAPPROX_DIGRAPH_HPP

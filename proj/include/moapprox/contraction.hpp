#ifndef MOAPPROX_CONTRACTION_HPP
#define MOAPPROX_CONTRACTION_HPP

#include <vector>

#include "moapprox/digraph.hpp"

namespace moapprox {

/**
 * Result of contracting a set Q of vertex-disjoint paths.
 *
 * Each path u_0 -> ... -> u_r collapses into u_0, which keeps the ingoing
 * edges of u_0 and takes over the outgoing edges of u_r. Contracted vertices
 * are numbered by increasing original index; `graph.labels()` maps them
 * back to vertices of the original graph.
 */
struct ContractionRecord {
  std::size_t original_size = 0;
  std::vector<std::vector<Vertex>> paths;
  std::vector<Edge> contracted_edges;
  /// Original vertex -> contracted index, or -1 for removed vertices.
  std::vector<int> to_contracted;
  /// Contracted index -> original vertex whose outgoing edges it carries.
  std::vector<Vertex> out_vertex;
  LabeledDigraph graph;
  /// w(Q).
  WeightVector path_weight;
};

/// Contracts all paths of q; throws PreconditionError unless q is a set of
/// vertex-disjoint paths that leaves at least two vertices.
ContractionRecord contract(const LabeledDigraph& g, const std::vector<Edge>& q);

/**
 * Single-edge contraction applied to a graph that may itself be the result
 * of earlier contractions; u and v are current (0-based) vertex indices.
 * Removes v; w'(u, z) = w(v, z). Labels follow the surviving vertices.
 */
LabeledDigraph contract_edge(const LabeledDigraph& g, Vertex u, Vertex v);

/// Contracts the paths one after another in the given order, each path
/// edge-by-edge starting at its last edge. Paths are given as sequences of
/// original vertex labels.
LabeledDigraph contract_sequentially(const LabeledDigraph& g, const std::vector<std::vector<Vertex>>& paths);

/// Expands a Hamiltonian cycle of rec.graph back to a Hamiltonian cycle of
/// the original graph that contains every contracted edge.
HamiltonianCycle expand(const ContractionRecord& rec, const HamiltonianCycle& t);

/**
 * Maps an edge set S of the original graph with S containing Q and in/out
 * degree at most one to contracted indices: every contracted edge vanishes
 * and an edge leaving the last vertex of a path leaves its first vertex
 * instead. Throws if S violates the precondition.
 */
std::vector<Edge> contract_edge_set(const ContractionRecord& rec, const std::vector<Edge>& s);

}  // namespace moapprox

#endif  // MOAPPROX_CONTRACTION_HPP

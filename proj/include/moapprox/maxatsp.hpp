#ifndef MOAPPROX_MAXATSP_HPP
#define MOAPPROX_MAXATSP_HPP

#include <cstdint>
#include <vector>

#include "moapprox/contraction.hpp"
#include "moapprox/digraph.hpp"
#include "moapprox/matching.hpp"
#include "moapprox/pareto.hpp"

namespace moapprox {

enum class SizeParity { Any, Even, Odd };

/// Every F of at most max_size edges of the complete digraph on n vertices
/// that forms a set of vertex-disjoint paths, in lexicographic edge order.
std::vector<std::vector<Edge>> enumerate_path_sets(std::size_t n, std::size_t max_size, SizeParity parity = SizeParity::Any);

/**
 * Completes a matching of the complete digraph on n vertices to a
 * Hamiltonian cycle. Matching edges and unmatched vertices are fragments;
 * starting from the fragment holding vertex 0, the unused fragment with the
 * smallest first vertex is appended until the cycle closes.
 */
HamiltonianCycle extend_to_cycle(std::size_t n, const Matching& m);

struct MaxAtspOptions {
  /// Cap on matching-enumeration work summed over all contracted graphs.
  std::uint64_t budget = 500'000'000;
  unsigned threads = 1;
  /// Defaults to the exact enumeration backend.
  const MatchingBackend* backend = nullptr;
};

/// Planned matching-backend work of maxatsp_approx on an n-vertex graph
/// with `dim` objectives (saturating).
std::uint64_t maxatsp_cost(std::size_t n, std::size_t dim, const MatchingBackend& backend);

/**
 * For every set F of at most 2k vertex-disjoint path edges (2k the objective
 * count padded to even): contract F, take a Pareto set of matchings of the
 * contracted graph, complete each matching to a Hamiltonian cycle and expand
 * it through F. Requires an even vertex count. Output is deduplicated,
 * Pareto-filtered and canonical.
 */
SolutionSet<HamiltonianCycle> maxatsp_approx(const LabeledDigraph& g, const Rational& eps, const MaxAtspOptions& opts = {});

/**
 * Guesses a set F of heavy tour edges (|F| <= 2k, even when |V| is even and
 * odd when |V| is odd), contracts it, runs maxatsp_approx with eps = 1/|V|
 * on the contracted graph and expands the results back.
 */
SolutionSet<HamiltonianCycle> maxatsp_half_wrapper(const LabeledDigraph& g, const MaxAtspOptions& opts = {});

/// Exact Pareto set over all (|V|-1)! directed Hamiltonian cycles, one
/// representative per weight.
SolutionSet<HamiltonianCycle> tsp_oracle(const LabeledDigraph& g, std::size_t vertex_cap = 9);

/**
 * Constructive form of the matching argument behind maxatsp_approx: split a
 * Hamiltonian cycle T into alternating edges e_i, f_i, balance their weights,
 * and derive F (|F| <= 2k) and S with contract_F(S) a matching M' of
 * contract_F(G) and w'(M') >= w(T)/2 - w(F).
 */
struct MatchingWitness {
  std::vector<Edge> f;
  std::vector<Edge> s;
  std::vector<Edge> matching;  // contracted indices
  WeightVector matching_weight;
  WeightVector tour_weight;
  WeightVector f_weight;
  bool contracted = false;
  bool is_matching = false;
  bool bound_holds = false;
};

MatchingWitness matching_witness(const LabeledDigraph& g, const HamiltonianCycle& tour);

}  // namespace moapprox

#endif  // MOAPPROX_MAXATSP_HPP

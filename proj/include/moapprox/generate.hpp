#ifndef MOAPPROX_GENERATE_HPP
#define MOAPPROX_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "moapprox/balancing.hpp"
#include "moapprox/digraph.hpp"
#include "moapprox/io.hpp"
#include "moapprox/maxsat.hpp"

namespace moapprox {

/**
 * Parameters of a seeded random instance.
 *
 * Randomness comes from std::mt19937_64 seeded with `seed`; bounded values
 * are drawn by rejection sampling (see Rng::uniform), so the same spec gives
 * the same instance on every conforming platform.
 */
struct GeneratorSpec {
  InstanceKind kind = InstanceKind::Graph;
  BalanceVariant variant = BalanceVariant::Paired;  // balance only
  std::size_t m = 8;         // balance: sequence length; cnf: variables
  std::size_t n = 1;         // balance: half-dimension
  std::size_t vertices = 6;  // graph
  std::size_t clauses = 10;  // cnf
  std::size_t dim = 2;       // cnf, graph
  std::int64_t bound = 20;
  std::uint64_t seed = 1;
};

inline constexpr std::size_t kMaxGenSequence = 4096;
inline constexpr std::size_t kMaxGenHalfDim = 8;
inline constexpr std::size_t kMaxGenVars = 64;
inline constexpr std::size_t kMaxGenClauses = 100000;
inline constexpr std::size_t kMaxGenVertices = 64;
inline constexpr std::size_t kMaxGenDim = 16;
inline constexpr std::int64_t kMaxGenBound = 1'000'000'000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi]: draws r until r < limit, where limit is
  /// the largest multiple of (hi - lo + 1) not exceeding 2^64, and returns
  /// lo + r mod (hi - lo + 1).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Throws PreconditionError for non-positive parameters and BudgetExceeded
/// for parameters beyond the caps above.
void validate_spec(const GeneratorSpec& spec);

BalancingInstance generate_balance(const GeneratorSpec& spec);
CnfInstance generate_cnf(const GeneratorSpec& spec);
LabeledDigraph generate_graph(const GeneratorSpec& spec);

/// Serialized instance of the requested kind.
std::string generate_text(const GeneratorSpec& spec);

}  // namespace moapprox

#endif  // MOAPPROX_GENERATE_HPP

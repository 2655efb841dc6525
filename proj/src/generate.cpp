#include "moapprox/generate.hpp"

#include <algorithm>

namespace moapprox {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r > limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
}

void validate_spec(const GeneratorSpec& spec) {
  if (spec.bound < 0) throw PreconditionError("gen: bound must be >= 0");
  if (spec.bound > kMaxGenBound) throw BudgetExceeded("gen: bound exceeds " + std::to_string(kMaxGenBound));
  switch (spec.kind) {
    case InstanceKind::Balance:
      if (spec.m < 1 || spec.n < 1) throw PreconditionError("gen: balance needs m >= 1 and n >= 1");
      if (spec.m > kMaxGenSequence || spec.n > kMaxGenHalfDim) throw BudgetExceeded("gen: balance size exceeds caps");
      break;
    case InstanceKind::Cnf:
      if (spec.m < 1 || spec.dim < 1) throw PreconditionError("gen: cnf needs m >= 1 variables and dim >= 1");
      if (spec.m > kMaxGenVars || spec.clauses > kMaxGenClauses || spec.dim > kMaxGenDim)
        throw BudgetExceeded("gen: cnf size exceeds caps");
      break;
    case InstanceKind::Graph:
      if (spec.vertices < 2 || spec.dim < 1) throw PreconditionError("gen: graph needs >= 2 vertices and dim >= 1");
      if (spec.vertices > kMaxGenVertices || spec.dim > kMaxGenDim) throw BudgetExceeded("gen: graph size exceeds caps");
      break;
  }
}

namespace {

WeightVector random_vector(Rng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> c(dim);
  for (auto& v : c) v = rng.uniform(lo, hi);
  return WeightVector(std::move(c));
}

WeightVector componentwise_max_abs(const std::vector<WeightVector>& a, std::size_t dim) {
  WeightVector z(dim);
  for (const auto& v : a)
    for (std::size_t c = 0; c < dim; ++c) z[c] = std::max(z[c], v[c] < 0 ? -v[c] : v[c]);
  return z;
}

}  // namespace

BalancingInstance generate_balance(const GeneratorSpec& spec) {
  GeneratorSpec s = spec;
  s.kind = InstanceKind::Balance;
  validate_spec(s);
  Rng rng(s.seed);
  const std::size_t d = 2 * s.n;
  BalancingInstance inst{s.variant, s.n, {}, {}, std::nullopt};
  const bool is_signed = s.variant == BalanceVariant::Integer;
  for (std::size_t i = 0; i < s.m; ++i) inst.x.push_back(random_vector(rng, d, is_signed ? -s.bound : 0, s.bound));
  if (!is_signed)
    for (std::size_t i = 0; i < s.m; ++i) inst.y.push_back(random_vector(rng, d, 0, s.bound));
  switch (s.variant) {
    case BalanceVariant::Paired: {
      auto all = inst.x;
      all.insert(all.end(), inst.y.begin(), inst.y.end());
      inst.z = componentwise_max_abs(all, d);
      break;
    }
    case BalanceVariant::Integer: inst.z = componentwise_max_abs(inst.x, d); break;
    case BalanceVariant::Combinatorial: inst.z = componentwise_max_abs(inst.y, d); break;
  }
  return inst;
}

CnfInstance generate_cnf(const GeneratorSpec& spec) {
  GeneratorSpec s = spec;
  s.kind = InstanceKind::Cnf;
  validate_spec(s);
  Rng rng(s.seed);
  CnfInstance inst{s.m, s.dim, {}};
  const auto max_len = static_cast<std::int64_t>(std::min<std::size_t>(3, s.m));
  for (std::size_t c = 0; c < s.clauses; ++c) {
    Clause cl;
    const auto len = rng.uniform(1, max_len);
    while (static_cast<std::int64_t>(cl.literals.size()) < len) {
      const auto var = static_cast<std::uint32_t>(rng.uniform(1, static_cast<std::int64_t>(s.m)));
      const bool positive = rng.uniform(0, 1) == 1;
      bool used = std::any_of(cl.literals.begin(), cl.literals.end(), [&](Literal l) { return l.var == var; });
      if (!used) cl.literals.push_back({var, positive});
    }
    cl.weight = random_vector(rng, s.dim, 0, s.bound);
    inst.clauses.push_back(std::move(cl));
  }
  return inst;
}

LabeledDigraph generate_graph(const GeneratorSpec& spec) {
  GeneratorSpec s = spec;
  s.kind = InstanceKind::Graph;
  validate_spec(s);
  Rng rng(s.seed);
  LabeledDigraph g(s.vertices, s.dim);
  for (const auto& [u, v] : g.edges()) g.set_weight(u, v, random_vector(rng, s.dim, 0, s.bound));
  return g;
}

std::string generate_text(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::Balance: return serialize_balance(generate_balance(spec));
    case InstanceKind::Cnf: return serialize_cnf(generate_cnf(spec));
    case InstanceKind::Graph: return serialize_graph(generate_graph(spec));
  }
  throw PreconditionError("gen: unknown kind");
}

}  // namespace moapprox

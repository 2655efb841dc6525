#include "moapprox/maxsat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace moapprox {

bool Clause::contains(Literal l) const { return std::find(literals.begin(), literals.end(), l) != literals.end(); }

bool Clause::tautological() const {
  return std::any_of(literals.begin(), literals.end(), [&](Literal l) { return contains(l.negated()); });
}

void CnfInstance::validate() const {
  if (dim < 1) throw PreconditionError("cnf: objective dimension must be >= 1");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    if (cl.literals.empty()) throw PreconditionError("cnf: clause " + std::to_string(c + 1) + " is empty");
    if (cl.weight.dim() != dim)
      throw DimensionError("cnf: clause " + std::to_string(c + 1) + " weight has dimension " +
                           std::to_string(cl.weight.dim()) + ", expected " + std::to_string(dim));
    if (!cl.weight.non_negative()) throw PreconditionError("cnf: clause " + std::to_string(c + 1) + " has a negative weight");
    for (std::size_t i = 0; i < cl.literals.size(); ++i) {
      const auto l = cl.literals[i];
      if (l.var < 1 || l.var > num_vars)
        throw PreconditionError("cnf: clause " + std::to_string(c + 1) + " uses variable " + std::to_string(l.var) +
                                " outside 1.." + std::to_string(num_vars));
      for (std::size_t j = i + 1; j < cl.literals.size(); ++j)
        if (cl.literals[j] == l)
          throw PreconditionError("cnf: clause " + std::to_string(c + 1) + " repeats literal " +
                                  std::to_string(l.dimacs()));
    }
  }
}

std::size_t CnfInstance::tautology_count() const {
  return static_cast<std::size_t>(std::count_if(clauses.begin(), clauses.end(), [](const Clause& c) { return c.tautological(); }));
}

bool Assignment::satisfies(const Clause& c) const {
  return std::any_of(c.literals.begin(), c.literals.end(), [&](Literal l) { return satisfies(l); });
}

std::string Assignment::str() const {
  std::string s;
  s.reserve(values.size());
  for (auto v : values) s += v ? '1' : '0';
  return s;
}

WeightVector assignment_weight(const CnfInstance& inst, const Assignment& a) {
  if (a.values.size() != inst.num_vars)
    throw DimensionError("assignment_weight: assignment has " + std::to_string(a.values.size()) + " values, instance has " +
                         std::to_string(inst.num_vars) + " variables");
  WeightVector w(inst.dim);
  for (const auto& c : inst.clauses)
    if (a.satisfies(c)) w += c.weight;
  return w;
}

std::vector<std::size_t> clause_bucket(const CnfInstance& inst, const std::vector<std::size_t>& subset, Literal lit) {
  std::vector<std::size_t> out;
  for (auto idx : subset)
    if (inst.clauses.at(idx).contains(lit)) out.push_back(idx);
  return out;
}

namespace {

std::size_t even_dim(std::size_t dim) { return dim + (dim % 2); }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact because r is C(n - k + i - 1, i - 1).
    unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (t > UINT64_MAX) return UINT64_MAX;
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

// Enumerates every subset of {1..m} of size <= max_size.
void for_each_small_subset(std::size_t m, std::size_t max_size, const auto& fn) {
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    fn(cur);
    if (cur.size() == max_size) return;
    for (std::uint32_t v = next; v <= m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

using Bits = std::vector<std::uint8_t>;

// Calls fn for every 0/1 pattern over `len` positions with at most `runs`
// maximal runs of ones.
void for_each_run_pattern(std::size_t len, std::size_t runs, Bits& pattern, const auto& fn) {
  std::fill(pattern.begin(), pattern.end(), 0);
  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    fn(pattern);
    if (left == 0) return;
    for (std::size_t s = from; s < len; ++s) {
      for (std::size_t e = s; e < len; ++e) {
        for (std::size_t i = s; i <= e; ++i) pattern[i] = 1;
        self(self, e + 2, left - 1);
        for (std::size_t i = s; i <= e; ++i) pattern[i] = 0;
      }
    }
  };
  rec(rec, 0, runs);
}

// Literal endpoint loop: a_1, b_1, ..., a_k, b_k range over the indices of
// V'; v_i is set iff a_j <= i <= b_j for some j.
void for_each_endpoint_tuple(const std::vector<std::uint32_t>& vprime, std::size_t runs, Bits& pattern, const auto& fn) {
  const std::size_t len = vprime.size(), slots = 2 * runs;
  std::vector<std::size_t> pos(slots, 0);
  if (len == 0) return;
  while (true) {
    for (std::size_t i = 0; i < len; ++i) {
      pattern[i] = 0;
      for (std::size_t j = 0; j < runs; ++j)
        if (vprime[pos[2 * j]] <= vprime[i] && vprime[i] <= vprime[pos[2 * j + 1]]) pattern[i] = 1;
    }
    fn(pattern);
    std::size_t s = 0;
    while (s < slots && ++pos[s] == len) pos[s++] = 0;
    if (s == slots) break;
  }
}

struct PreparedCnf {
  std::size_t m;
  std::size_t dim;  // padded, even
  std::vector<std::vector<std::uint32_t>> negated;  // per clause
  std::vector<WeightVector> weight;                 // padded
};

PreparedCnf prepare(const CnfInstance& inst) {
  PreparedCnf p{inst.num_vars, even_dim(inst.dim), {}, {}};
  for (const auto& c : inst.clauses) {
    std::vector<std::uint32_t> neg;
    for (auto l : c.literals)
      if (!l.positive) neg.push_back(l.var);
    p.negated.push_back(std::move(neg));
    p.weight.push_back(c.weight.padded(p.dim - inst.dim));
  }
  return p;
}

SatState build_state(const CnfInstance& inst, const PreparedCnf& p, const std::vector<std::uint32_t>& v0) {
  SatState st;
  st.v0 = v0;
  std::vector<std::uint8_t> in_v0(p.m + 1, 0);
  for (auto v : v0) in_v0[v] = 1;

  WeightVector outside(p.dim);
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    bool hit = std::any_of(p.negated[c].begin(), p.negated[c].end(), [&](std::uint32_t v) { return in_v0[v] != 0; });
    if (hit)
      outside += p.weight[c];
    else
      st.g.push_back(c);
  }

  std::vector<WeightVector> neg_weight(p.m + 1, WeightVector(p.dim));
  for (auto c : st.g)
    for (auto v : p.negated[c]) neg_weight[v] += p.weight[c];

  const auto factor = static_cast<std::int64_t>(p.dim);
  std::vector<std::uint8_t> in_v1(p.m + 1, 0);
  for (std::uint32_t v = 1; v <= p.m; ++v) {
    if (in_v0[v]) continue;
    auto scaled = neg_weight[v].scaled(factor);
    bool exceeds = false;
    for (std::size_t j = 0; j < p.dim; ++j) exceeds = exceeds || scaled[j] > outside[j];
    if (exceeds) {
      st.v1.push_back(v);
      in_v1[v] = 1;
    } else {
      st.vprime.push_back(v);
    }
  }

  for (auto c : st.g) {
    const auto& lits = inst.clauses[c].literals;
    bool sat_by_v1 = std::any_of(lits.begin(), lits.end(), [&](Literal l) { return l.positive && in_v1[l.var]; });
    bool open = std::any_of(lits.begin(), lits.end(), [&](Literal l) { return !in_v0[l.var] && !in_v1[l.var]; });
    if (!sat_by_v1 && open) st.gprime.push_back(c);
  }
  return st;
}

}  // namespace

SatState sat_state(const CnfInstance& inst, const std::vector<std::uint32_t>& v0, std::size_t even) {
  inst.validate();
  auto p = prepare(inst);
  if (even != p.dim) throw DimensionError("sat_state: padded dimension must be " + std::to_string(p.dim));
  return build_state(inst, p, v0);
}

std::uint64_t maxsat_iteration_count(std::size_t num_vars, std::size_t dim, bool literal_loop) {
  const std::size_t d = even_dim(dim), runs = d / 2;
  std::uint64_t outer = 0;
  for (std::size_t j = 0; j <= std::min(d * d, num_vars); ++j) outer = sat_add(outer, binomial(num_vars, j));
  std::uint64_t inner = 0;
  if (literal_loop) {
    inner = 1;
    for (std::size_t s = 0; s < 2 * runs; ++s) inner = sat_mul(inner, num_vars);
    inner = sat_add(inner, 1);
  } else {
    for (std::size_t r = 0; r <= runs; ++r) inner = sat_add(inner, binomial(num_vars + 1, 2 * r));
  }
  return sat_mul(outer, inner);
}

SolutionSet<Assignment> maxsat_approx(const CnfInstance& inst, const MaxSatOptions& opts) {
  inst.validate();
  const auto planned = maxsat_iteration_count(inst.num_vars, inst.dim, opts.literal_loop);
  if (planned > opts.budget)
    throw BudgetExceeded("maxsat_approx: " + std::to_string(inst.num_vars) + " variables with " + std::to_string(inst.dim) +
                         " objectives need " + (planned == UINT64_MAX ? std::string(">2^64") : std::to_string(planned)) +
                         " iterations, budget is " + std::to_string(opts.budget));
  const auto p = prepare(inst);
  const std::size_t runs = p.dim / 2;

  std::vector<std::vector<std::uint32_t>> zero_sets;
  for_each_small_subset(p.m, p.dim * p.dim, [&](const std::vector<std::uint32_t>& s) { zero_sets.push_back(s); });

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(zero_sets.size())));
  std::vector<std::set<Bits>> found(threads);
  auto worker = [&](unsigned t) {
    Bits pattern(p.m), assignment(p.m);
    for (std::size_t i = t; i < zero_sets.size(); i += threads) {
      auto st = build_state(inst, p, zero_sets[i]);
      std::fill(assignment.begin(), assignment.end(), 0);
      for (auto v : st.v1) assignment[v - 1] = 1;
      auto emit = [&](const Bits& pat) {
        for (std::size_t k = 0; k < st.vprime.size(); ++k) assignment[st.vprime[k] - 1] = pat[k];
        found[t].insert(assignment);
      };
      if (opts.literal_loop) {
        for_each_endpoint_tuple(st.vprime, runs, pattern, emit);
        std::fill(pattern.begin(), pattern.end(), 0);
        emit(pattern);  // all intervals empty
      } else {
        for_each_run_pattern(st.vprime.size(), runs, pattern, emit);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::set<Bits> all;
  for (auto& f : found) all.merge(f);
  SolutionSet<Assignment> out;
  out.reserve(all.size());
  for (const auto& bits : all) {
    Assignment a{bits};
    auto w = assignment_weight(inst, a);
    out.push_back({std::move(a), std::move(w)});
  }
  return pareto_filter(std::move(out));
}

SolutionSet<Assignment> maxsat_oracle(const CnfInstance& inst, std::size_t var_cap) {
  inst.validate();
  if (inst.num_vars > var_cap || inst.num_vars >= 63)
    throw BudgetExceeded("maxsat_oracle: " + std::to_string(inst.num_vars) + " variables exceed the cap of " +
                         std::to_string(var_cap));
  // Smallest assignment per distinct weight; the full 2^m list is never stored.
  std::map<WeightVector, Assignment> best;
  const std::uint64_t count = std::uint64_t{1} << inst.num_vars;
  Assignment a{Bits(inst.num_vars)};
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < inst.num_vars; ++i) a.values[i] = (mask >> i) & 1U;
    auto w = assignment_weight(inst, a);
    auto it = best.find(w);
    if (it == best.end())
      best.emplace(std::move(w), a);
    else if (a < it->second)
      it->second = a;
  }
  SolutionSet<Assignment> all;
  for (auto& [w, sol] : best) all.push_back({sol, w});
  return one_per_weight(pareto_filter(std::move(all)));
}

}  // namespace moapprox

// Python bindings: plain lists and tuples in, plain lists and dicts out.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "moapprox/cli.hpp"
#include "moapprox/generate.hpp"
#include "moapprox/maxatsp.hpp"

namespace py = pybind11;
using namespace moapprox;

namespace {

using Vec = std::vector<std::int64_t>;

std::vector<WeightVector> to_weights(const std::vector<Vec>& rows) {
  std::vector<WeightVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

Vec to_vec(const WeightVector& w) { return {w.components().begin(), w.components().end()}; }

// weights[u][v] is the vector of edge (u, v); the diagonal is ignored.
LabeledDigraph to_graph(const std::vector<std::vector<Vec>>& weights) {
  const std::size_t n = weights.size();
  if (n < 2) throw PreconditionError("graph needs at least two vertices");
  std::size_t dim = 0;
  for (std::size_t u = 0; u < n && dim == 0; ++u)
    for (std::size_t v = 0; v < n && dim == 0; ++v)
      if (u != v) {
        if (weights[u].size() != n) throw DimensionError("weight matrix must be square");
        dim = weights[u][v].size();
      }
  LabeledDigraph g(n, dim);
  for (std::size_t u = 0; u < n; ++u) {
    if (weights[u].size() != n) throw DimensionError("weight matrix must be square");
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) g.set_weight(static_cast<Vertex>(u), static_cast<Vertex>(v), WeightVector(weights[u][v]));
  }
  g.validate();
  return g;
}

CnfInstance to_cnf(std::size_t num_vars, const std::vector<std::pair<Vec, std::vector<int>>>& clauses) {
  CnfInstance inst{num_vars, clauses.empty() ? 1 : clauses.front().first.size(), {}};
  for (const auto& [w, lits] : clauses) {
    Clause c;
    for (int l : lits) {
      if (l == 0) throw PreconditionError("literal 0 is not allowed");
      c.literals.push_back(Literal::from_dimacs(l));
    }
    c.weight = WeightVector(w);
    inst.clauses.push_back(std::move(c));
  }
  inst.validate();
  return inst;
}

py::list sat_points(const SolutionSet<Assignment>& set) {
  py::list out;
  for (const auto& e : set) out.append(py::make_tuple(e.solution.str(), to_vec(e.weight)));
  return out;
}

py::list tour_points(const SolutionSet<HamiltonianCycle>& set) {
  py::list out;
  for (const auto& e : set) {
    auto order = e.solution.order();
    for (auto& v : order) ++v;  // 1-based, as in the graph format
    out.append(py::make_tuple(order, to_vec(e.weight)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-objective approximation toolkit";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "balance",
      [](const std::string& variant, std::size_t n, const std::vector<Vec>& x, const std::vector<Vec>& y,
         std::optional<Vec> z) {
        BalancingInstance inst{parse_balance_variant(variant), n, to_weights(x), to_weights(y), std::nullopt};
        if (z) inst.z = WeightVector(*z);
        BalanceResult r;
        {
          py::gil_scoped_release release;
          r = balance(inst);
        }
        std::vector<std::pair<std::size_t, std::size_t>> iv;
        for (const auto& i : r.family.intervals) iv.emplace_back(i.a, i.b);
        py::dict d;
        d["intervals"] = iv;
        d["half_open"] = r.family.half_open;
        d["in_sum"] = to_vec(r.in_sum);
        d["out_sum"] = to_vec(r.out_sum);
        d["correction"] = to_vec(r.correction);
        d["verified"] = verify_balance(inst, r, inst.variant);
        return d;
      },
      py::arg("variant"), py::arg("n"), py::arg("x"), py::arg("y") = std::vector<Vec>{}, py::arg("z") = py::none(),
      "Run a balancing search; intervals are 1-based (a, b) pairs.");

  m.def(
      "maxsat",
      [](std::size_t num_vars, const std::vector<std::pair<Vec, std::vector<int>>>& clauses, unsigned threads) {
        const auto inst = to_cnf(num_vars, clauses);
        MaxSatOptions o;
        o.threads = threads;
        SolutionSet<Assignment> out;
        {
          py::gil_scoped_release release;
          out = maxsat_approx(inst, o);
        }
        return sat_points(out);
      },
      py::arg("num_vars"), py::arg("clauses"), py::arg("threads") = 1,
      "1/2-approximate Pareto set; clauses are (weights, dimacs literals). Returns (bits, weight) pairs.");

  m.def(
      "maxsat_oracle",
      [](std::size_t num_vars, const std::vector<std::pair<Vec, std::vector<int>>>& clauses) {
        return sat_points(maxsat_oracle(to_cnf(num_vars, clauses)));
      },
      py::arg("num_vars"), py::arg("clauses"));

  m.def(
      "maxatsp",
      [](const std::vector<std::vector<Vec>>& weights, bool wrapper, std::optional<std::string> eps, unsigned threads) {
        const auto g = to_graph(weights);
        MaxAtspOptions o;
        o.threads = threads;
        const Rational e = eps ? Rational::parse(*eps) : Rational{1, static_cast<std::int64_t>(g.size())};
        SolutionSet<HamiltonianCycle> out;
        {
          py::gil_scoped_release release;
          out = wrapper ? maxatsp_half_wrapper(g, o) : maxatsp_approx(g, e, o);
        }
        return tour_points(out);
      },
      py::arg("weights"), py::arg("wrapper") = false, py::arg("eps") = py::none(), py::arg("threads") = 1,
      "1/2-approximate Pareto set of Hamiltonian cycles; returns (1-based vertex order, weight) pairs.");

  m.def(
      "tsp_oracle", [](const std::vector<std::vector<Vec>>& weights) { return tour_points(tsp_oracle(to_graph(weights))); },
      py::arg("weights"));

  m.def(
      "pareto_filter",
      [](const std::vector<Vec>& weights) {
        SolutionSet<std::size_t> s;
        for (std::size_t i = 0; i < weights.size(); ++i) s.push_back({i, WeightVector(weights[i])});
        std::vector<std::size_t> kept;
        for (const auto& e : pareto_filter(std::move(s))) kept.push_back(e.solution);
        return kept;
      },
      py::arg("weights"), "Indices of the non-dominated weights, in canonical order.");

  m.def(
      "certify",
      [](const std::vector<Vec>& candidates, const std::vector<Vec>& reference, const std::string& alpha) {
        const auto cert = certify_weights(to_weights(candidates), to_weights(reference), Rational::parse(alpha));
        py::dict d;
        d["success"] = cert.success;
        std::vector<std::string> ratios;
        for (const auto& c : cert.covers) ratios.push_back(c.ratio.str());
        d["ratios"] = ratios;
        d["first_uncovered"] = cert.first_uncovered ? py::cast(*cert.first_uncovered) : py::none();
        return d;
      },
      py::arg("candidates"), py::arg("reference"), py::arg("alpha") = "1/2");

  m.def(
      "generate",
      [](const std::string& kind, std::uint64_t seed, std::size_t m_, std::size_t n, std::size_t vertices,
         std::size_t clauses, std::size_t dim, std::int64_t bound, const std::string& variant) {
        GeneratorSpec s;
        s.kind = parse_instance_kind(kind);
        s.variant = parse_balance_variant(variant);
        s.seed = seed;
        s.m = m_;
        s.n = n;
        s.vertices = vertices;
        s.clauses = clauses;
        s.dim = dim;
        s.bound = bound;
        return generate_text(s);
      },
      py::arg("kind"), py::arg("seed") = 1, py::arg("m") = 8, py::arg("n") = 1, py::arg("vertices") = 6,
      py::arg("clauses") = 10, py::arg("dim") = 2, py::arg("bound") = 20, py::arg("variant") = "paired",
      "Seeded instance in the text format of its kind.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI invocation in-process; returns (exit code, stdout, stderr).");

  m.def("machine_section", &machine_section, py::arg("report"));
}

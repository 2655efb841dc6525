#include "moapprox/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "moapprox/balancing.hpp"
#include "moapprox/generate.hpp"
#include "moapprox/io.hpp"
#include "moapprox/maxatsp.hpp"
#include "moapprox/maxsat.hpp"

namespace moapprox {

void RunReport::print(std::ostream& out) const {
  out << "[machine]\n";
  for (const auto& [k, v] : machine) out << k << '=' << v << '\n';
  out << "[/machine]\n";
  std::size_t width = 0;
  for (const auto& [k, v] : human) width = std::max(width, k.size());
  for (const auto& [k, v] : human) out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
}

std::string machine_section(const std::string& report_text) {
  const auto begin = report_text.find("[machine]\n");
  if (begin == std::string::npos) return {};
  const auto start = begin + std::string("[machine]\n").size();
  const auto end = report_text.find("[/machine]", start);
  return report_text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

namespace {

// Raised for bad flag combinations detected after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

using Clock = std::chrono::steady_clock;

std::string ms_since(Clock::time_point t0) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3)
     << std::chrono::duration<double, std::milli>(Clock::now() - t0).count() << " ms";
  return os.str();
}

std::uint64_t env_budget(std::uint64_t fallback) {
  const char* raw = std::getenv(kBudgetEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  errno = 0;
  const auto v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || raw[0] == '-') throw UsageError(std::string(kBudgetEnv) + " must be a non-negative integer");
  return v;
}

struct Common {
  unsigned threads = 1;
  std::uint64_t budget = 0;  // 0: module default (or the environment)
  [[nodiscard]] std::uint64_t budget_or(std::uint64_t module_default) const {
    return budget != 0 ? budget : env_budget(module_default);
  }
};

template <typename S>
void put_points(RunReport& r, const std::string& prefix, const SolutionSet<S>& set) {
  r.put(prefix + ".count", std::to_string(set.size()));
  for (std::size_t i = 0; i < set.size(); ++i)
    r.put(prefix + "." + std::to_string(i), set[i].solution.str() + " " + set[i].weight.str());
}

// Writes the certificate lines; returns the exit code it implies.
int put_certificate(RunReport& r, const ApproxCertificate& cert, const std::vector<WeightVector>& refs) {
  r.put("certificate.alpha", cert.alpha.str());
  r.put("certificate.result", cert.success ? "pass" : "fail");
  for (const auto& c : cert.covers)
    r.put("cover." + std::to_string(c.reference_index),
          refs[c.reference_index].str() + " by=" + std::to_string(c.candidate_index) + " ratio=" + c.ratio.str());
  if (cert.first_uncovered)
    r.put("certificate.first_uncovered", std::to_string(*cert.first_uncovered) + " " + cert.uncovered_weight->str());
  r.note("certificate", cert.success ? "PASS at alpha " + cert.alpha.str() : "FAIL at alpha " + cert.alpha.str());
  return cert.success ? kExitOk : kExitCertificateFailed;
}

Rational parse_alpha(const std::string& s) {
  const auto a = Rational::parse(s);
  if (a.num > a.den) throw UsageError("alpha must lie in [0, 1], got " + s);
  return a;
}

// ---- balance ---------------------------------------------------------------

struct BalanceArgs {
  std::string variant;
  std::string in;
  bool verify = false;
};

int cmd_balance(const BalanceArgs& a, const Common& c, RunReport& r) {
  const auto text = read_text_file(a.in);
  auto inst = parse_balance(text);
  if (!a.variant.empty() && parse_balance_variant(a.variant) != inst.variant)
    throw UsageError("--variant " + a.variant + " does not match the file header (" + to_string(inst.variant) + ")");
  r.put("command", "balance");
  r.put("instance.digest", digest(text));
  r.put("instance.variant", to_string(inst.variant));
  r.put("instance.m", std::to_string(inst.m()));
  r.put("instance.n", std::to_string(inst.n));
  const auto t0 = Clock::now();
  const auto res = balance(inst, c.budget_or(kDefaultBalanceBudget));
  r.note("wall_time", ms_since(t0));
  r.put("algorithm", "balance_" + to_string(inst.variant));
  r.put("result.intervals", res.family.str());
  r.put("result.in_sum", res.in_sum.str());
  r.put("result.out_sum", res.out_sum.str());
  if (inst.variant == BalanceVariant::Combinatorial) r.put("result.correction", res.correction.str());
  else r.put("result.imbalance", observed_imbalance(inst, res).str());
  r.note("intervals", res.family.str());
  if (!a.verify) return kExitOk;
  const bool ok = verify_balance(inst, res, inst.variant);
  r.put("certificate.result", ok ? "pass" : "fail");
  r.note("certificate", ok ? "PASS (bound verified)" : "FAIL");
  return ok ? kExitOk : kExitCertificateFailed;
}

// ---- maxsat ----------------------------------------------------------------

struct SolveArgs {
  std::string in;
  bool oracle = false;
  bool certify = false;
  std::string alpha = "1/2";
  bool literal_loop = false;  // maxsat
  std::string eps;            // maxatsp
  bool wrapper = false;       // maxatsp
};

int cmd_maxsat(const SolveArgs& a, const Common& c, RunReport& r) {
  const auto text = read_text_file(a.in);
  const auto inst = parse_cnf(text);
  const auto alpha = parse_alpha(a.alpha);
  r.put("command", "maxsat");
  r.put("instance.digest", digest(text));
  r.put("instance.vars", std::to_string(inst.num_vars));
  r.put("instance.clauses", std::to_string(inst.clauses.size()));
  r.put("instance.dim", std::to_string(inst.dim));
  MaxSatOptions opts;
  opts.budget = c.budget_or(opts.budget);
  opts.threads = c.threads;
  opts.literal_loop = a.literal_loop;
  r.put("algorithm", "maxsat_approx");
  r.put("params.literal_loop", a.literal_loop ? "1" : "0");
  r.put("params.iterations", std::to_string(maxsat_iteration_count(inst.num_vars, inst.dim, a.literal_loop)));

  auto t0 = Clock::now();
  const auto approx = maxsat_approx(inst, opts);
  r.note("approx_time", ms_since(t0));
  r.note("approx_points", std::to_string(approx.size()));
  put_points(r, "approx", approx);
  if (!a.oracle && !a.certify) return kExitOk;

  t0 = Clock::now();
  const auto exact = maxsat_oracle(inst);
  r.note("oracle_time", ms_since(t0));
  r.note("oracle_points", std::to_string(exact.size()));
  put_points(r, "oracle", exact);
  if (!a.certify) return kExitOk;
  return put_certificate(r, is_alpha_approx_set(approx, exact, alpha), weights_of(exact));
}

// ---- maxatsp ---------------------------------------------------------------

int cmd_maxatsp(const SolveArgs& a, const Common& c, RunReport& r) {
  const auto text = read_text_file(a.in);
  const auto g = parse_graph(text);
  const auto alpha = parse_alpha(a.alpha);
  r.put("command", "maxatsp");
  r.put("instance.digest", digest(text));
  r.put("instance.vertices", std::to_string(g.size()));
  r.put("instance.dim", std::to_string(g.dim()));
  MaxAtspOptions opts;
  opts.budget = c.budget_or(opts.budget);
  opts.threads = c.threads;
  const ExactMatchingBackend backend;
  opts.backend = &backend;

  auto t0 = Clock::now();
  SolutionSet<HamiltonianCycle> approx;
  if (a.wrapper) {
    if (!a.eps.empty()) throw UsageError("--eps cannot be combined with --wrapper (the wrapper fixes eps = 1/|V|)");
    r.put("algorithm", "maxatsp_half_wrapper");
    approx = maxatsp_half_wrapper(g, opts);
  } else {
    const Rational eps = a.eps.empty() ? Rational{1, static_cast<std::int64_t>(std::max<std::size_t>(g.size(), 1))}
                                       : Rational::parse(a.eps);
    r.put("algorithm", "maxatsp_approx");
    r.put("params.eps", eps.str());
    approx = maxatsp_approx(g, eps, opts);
  }
  r.put("params.backend", backend.name());
  r.note("approx_time", ms_since(t0));
  r.note("approx_points", std::to_string(approx.size()));
  put_points(r, "approx", approx);
  if (!a.oracle && !a.certify) return kExitOk;

  t0 = Clock::now();
  const auto exact = tsp_oracle(g);
  r.note("oracle_time", ms_since(t0));
  r.note("oracle_points", std::to_string(exact.size()));
  put_points(r, "oracle", exact);
  if (!a.certify) return kExitOk;
  return put_certificate(r, is_alpha_approx_set(approx, exact, alpha), weights_of(exact));
}

// ---- certify ---------------------------------------------------------------

int cmd_certify(const SolveArgs& a, const Common& c, RunReport& r) {
  const auto text = read_text_file(a.in);
  switch (detect_format(text)) {
    case InstanceKind::Balance: {
      BalanceArgs b;
      b.in = a.in;
      b.verify = true;
      return cmd_balance(b, c, r);
    }
    case InstanceKind::Cnf: {
      auto s = a;
      s.certify = true;
      return cmd_maxsat(s, c, r);
    }
    case InstanceKind::Graph: {
      auto s = a;
      s.certify = true;
      if (!s.wrapper && parse_graph(text).size() % 2 != 0) s.wrapper = true;
      return cmd_maxatsp(s, c, r);
    }
  }
  throw UsageError("unrecognized instance format");
}

// ---- gen / bench -------------------------------------------------------------

struct GenArgs {
  std::string kind = "graph";
  std::string variant = "paired";
  GeneratorSpec spec;
  std::string out;
  std::size_t count = 10;
};

GeneratorSpec finish_spec(const GenArgs& a) {
  auto s = a.spec;
  s.kind = parse_instance_kind(a.kind);
  s.variant = parse_balance_variant(a.variant);
  return s;
}

void put_spec(RunReport& r, const GeneratorSpec& s) {
  r.put("gen.kind", to_string(s.kind));
  r.put("gen.seed", std::to_string(s.seed));
  r.put("gen.bound", std::to_string(s.bound));
  switch (s.kind) {
    case InstanceKind::Balance:
      r.put("gen.variant", to_string(s.variant));
      r.put("gen.m", std::to_string(s.m));
      r.put("gen.n", std::to_string(s.n));
      break;
    case InstanceKind::Cnf:
      r.put("gen.m", std::to_string(s.m));
      r.put("gen.clauses", std::to_string(s.clauses));
      r.put("gen.dim", std::to_string(s.dim));
      break;
    case InstanceKind::Graph:
      r.put("gen.vertices", std::to_string(s.vertices));
      r.put("gen.dim", std::to_string(s.dim));
      break;
  }
}

// Without --out the instance itself goes to stdout and no report is printed.
int cmd_gen(const GenArgs& a, RunReport& r, std::ostream& out, bool& print_report) {
  const auto spec = finish_spec(a);
  const auto text = generate_text(spec);
  if (a.out.empty()) {
    out << text;
    print_report = false;
    return kExitOk;
  }
  write_text_file(a.out, text);
  r.put("command", "gen");
  put_spec(r, spec);
  r.put("instance.digest", digest(text));
  r.put("instance.bytes", std::to_string(text.size()));
  r.note("written", a.out);
  return kExitOk;
}

int cmd_bench(const GenArgs& a, const Common& c, RunReport& r) {
  auto spec = finish_spec(a);
  r.put("command", "bench");
  put_spec(r, spec);
  r.put("bench.count", std::to_string(a.count));
  std::size_t passed = 0;
  std::ostringstream all;
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < a.count; ++i) {
    spec.seed = a.spec.seed + i;
    bool ok = false;
    switch (spec.kind) {
      case InstanceKind::Balance: {
        const auto inst = generate_balance(spec);
        const auto res = balance(inst, c.budget_or(kDefaultBalanceBudget));
        ok = verify_balance(inst, res, inst.variant);
        all << res.family.str() << '\n';
        break;
      }
      case InstanceKind::Cnf: {
        const auto inst = generate_cnf(spec);
        MaxSatOptions o;
        o.budget = c.budget_or(o.budget);
        o.threads = c.threads;
        const auto approx = maxsat_approx(inst, o);
        ok = is_alpha_approx_set(approx, maxsat_oracle(inst), Rational{1, 2}).success;
        all << approx.size() << '\n';
        break;
      }
      case InstanceKind::Graph: {
        const auto g = generate_graph(spec);
        MaxAtspOptions o;
        o.budget = c.budget_or(o.budget);
        o.threads = c.threads;
        const auto approx = g.size() % 2 == 0 ? maxatsp_approx(g, Rational{1, static_cast<std::int64_t>(g.size())}, o)
                                              : maxatsp_half_wrapper(g, o);
        ok = is_alpha_approx_set(approx, tsp_oracle(g), Rational{1, 2}).success;
        all << approx.size() << '\n';
        break;
      }
    }
    if (ok) ++passed;
  }
  r.put("bench.passed", std::to_string(passed));
  r.put("bench.output_digest", digest(all.str()));
  r.note("wall_time", ms_since(t0));
  if (a.count > 0) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3)
       << std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / static_cast<double>(a.count) << " ms";
    r.note("per_instance", os.str());
  }
  r.note("passed", std::to_string(passed) + "/" + std::to_string(a.count));
  return passed == a.count ? kExitOk : kExitCertificateFailed;
}

void add_gen_flags(CLI::App* sub, GenArgs& g) {
  sub->add_option("--kind", g.kind, "balance | cnf | graph")->check(CLI::IsMember({"balance", "cnf", "graph"}));
  sub->add_option("--variant", g.variant, "balance variant")->check(CLI::IsMember({"paired", "integer", "combinatorial"}));
  sub->add_option("--m", g.spec.m, "sequence length (balance) or variable count (cnf)");
  sub->add_option("--n", g.spec.n, "balance half-dimension");
  sub->add_option("--vertices", g.spec.vertices, "graph vertex count");
  sub->add_option("--clauses", g.spec.clauses, "cnf clause count");
  sub->add_option("--dim", g.spec.dim, "objective count (cnf, graph)");
  sub->add_option("--bound", g.spec.bound, "largest weight magnitude");
  sub->add_option("--seed", g.spec.seed, "generator seed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-objective approximation toolkit: vector balancing, MaxSAT, MaxATSP"};
  app.name("moapprox");
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", common.budget,
                 std::string("work budget; defaults to $") + kBudgetEnv + " or the solver default");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  add_gen_flags(gen, gen_args);
  gen->add_option("--out", gen_args.out, "output file (stdout if omitted)");

  BalanceArgs bal_args;
  auto* bal = app.add_subcommand("balance", "run a balancing search");
  bal->add_option("--variant", bal_args.variant, "expected variant")
      ->check(CLI::IsMember({"paired", "integer", "combinatorial"}));
  bal->add_option("--in", bal_args.in, "instance file")->required();
  bal->add_flag("--verify", bal_args.verify, "recheck the bound");

  SolveArgs sat_args;
  auto* sat = app.add_subcommand("maxsat", "approximate Pareto set of a weighted CNF");
  sat->add_option("--in", sat_args.in, "instance file")->required();
  sat->add_flag("--oracle", sat_args.oracle, "also run the exact 2^m oracle");
  sat->add_flag("--certify", sat_args.certify, "check the alpha guarantee against the oracle");
  sat->add_option("--alpha", sat_args.alpha, "certificate ratio p/q");
  sat->add_flag("--literal-loop", sat_args.literal_loop, "iterate raw interval endpoints");

  SolveArgs tsp_args;
  auto* tsp = app.add_subcommand("maxatsp", "approximate Pareto set of Hamiltonian cycles");
  tsp->add_option("--in", tsp_args.in, "instance file")->required();
  tsp->add_option("--eps", tsp_args.eps, "matching accuracy p/q (default 1/|V|)");
  tsp->add_flag("--wrapper", tsp_args.wrapper, "guess heavy edges first (works for odd |V|)");
  tsp->add_flag("--oracle", tsp_args.oracle, "also run the exact cycle oracle");
  tsp->add_flag("--certify", tsp_args.certify, "check the alpha guarantee against the oracle");
  tsp->add_option("--alpha", tsp_args.alpha, "certificate ratio p/q");

  SolveArgs cert_args;
  auto* cert = app.add_subcommand("certify", "solve and certify any instance file");
  cert->add_option("--in", cert_args.in, "instance file")->required();
  cert->add_option("--alpha", cert_args.alpha, "certificate ratio p/q");
  cert->add_flag("--wrapper", cert_args.wrapper, "use the MaxATSP wrapper");

  GenArgs bench_args;
  auto* bench = app.add_subcommand("bench", "generate, solve and certify a batch of instances");
  add_gen_flags(bench, bench_args);
  bench->add_option("--count", bench_args.count, "number of instances (seeds seed..seed+count-1)");

  std::vector<const char*> argv{"moapprox"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  RunReport report;
  bool print_report = true;
  int code = kExitOk;
  try {
    if (gen->parsed()) code = cmd_gen(gen_args, report, out, print_report);
    else if (bal->parsed()) code = cmd_balance(bal_args, common, report);
    else if (sat->parsed()) code = cmd_maxsat(sat_args, common, report);
    else if (tsp->parsed()) code = cmd_maxatsp(tsp_args, common, report);
    else if (cert->parsed()) code = cmd_certify(cert_args, common, report);
    else if (bench->parsed()) code = cmd_bench(bench_args, common, report);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (print_report) report.print(out);
  return code;
}

}  // namespace moapprox

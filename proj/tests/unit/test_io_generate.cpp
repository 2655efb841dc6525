#include <doctest.h>

#include <filesystem>

#include "moapprox/generate.hpp"
#include "moapprox/io.hpp"

using namespace moapprox;

namespace {

std::size_t parse_error_line(const std::string& text, InstanceKind kind) {
  try {
    switch (kind) {
      case InstanceKind::Balance: parse_balance(text); break;
      case InstanceKind::Cnf: parse_cnf(text); break;
      case InstanceKind::Graph: parse_graph(text); break;
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

GeneratorSpec spec(InstanceKind k, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = k;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("balance format round trip") {
  for (auto v : {BalanceVariant::Paired, BalanceVariant::Integer, BalanceVariant::Combinatorial})
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto s = spec(InstanceKind::Balance, seed);
      s.variant = v;
      s.m = 1 + seed % 9;
      s.n = 1 + seed % 2;
      const auto inst = generate_balance(s);
      const auto text = serialize_balance(inst);
      CHECK(parse_balance(text) == inst);
      CHECK(serialize_balance(parse_balance(text)) == text);
      CHECK(detect_format(text) == InstanceKind::Balance);
    }
}

TEST_CASE("balance format details") {
  const std::string text =
      "# comment\n"
      "balance combinatorial m=2 n=1\n"
      "1 2\n"
      "\n"
      "3 4\n"
      "5 6\n"
      "7 8\n";
  const auto inst = parse_balance(text);
  CHECK(inst.variant == BalanceVariant::Combinatorial);
  CHECK_FALSE(inst.z.has_value());
  CHECK(inst.y[1] == WeightVector{7, 8});
  CHECK(parse_error_line("balance paired m=2 n=1\n1 2\n3 4\n5 6\n", InstanceKind::Balance) == 5);
  CHECK(parse_error_line("balance paired m=1 n=1\n1 2 3\n1 1\n2 2\n", InstanceKind::Balance) == 2);
  CHECK(parse_error_line("balance odd m=1 n=1\n", InstanceKind::Balance) == 1);
  CHECK(parse_error_line("balance integer m=1 n=1\n1 x\n1 1\n", InstanceKind::Balance) == 2);
}

TEST_CASE("cnf format round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto s = spec(InstanceKind::Cnf, seed);
    s.m = 1 + seed % 10;
    s.clauses = seed % 15;
    s.dim = 1 + seed % 3;
    const auto inst = generate_cnf(s);
    const auto text = serialize_cnf(inst);
    CHECK(parse_cnf(text) == inst);
    CHECK(serialize_cnf(parse_cnf(text)) == text);
    CHECK(detect_format(text) == InstanceKind::Cnf);
  }
}

TEST_CASE("cnf format details") {
  const auto inst = parse_cnf("p cnf 2 1\nw 5 1 -2 0\n");
  CHECK(inst.dim == 1);
  CHECK(inst.clauses[0].weight == WeightVector{5});
  CHECK(inst.clauses[0].literals == std::vector<Literal>{{1, true}, {2, false}});
  // truncated: header promises two clauses; the error names the missing line
  CHECK(parse_error_line("c k 2\np cnf 2 2\nw 1 1 1 0\n", InstanceKind::Cnf) == 4);
  CHECK(parse_error_line("c k 2\np cnf 2 1\nw 1 1 0\n", InstanceKind::Cnf) == 3);
  CHECK(parse_error_line("c k 1\np cnf 2 1\nw 1 3 0\n", InstanceKind::Cnf) == 3);
  CHECK(parse_error_line("c k 1\np cnf 2 1\nw 1 1 2\n", InstanceKind::Cnf) == 3);
  CHECK(parse_error_line("p cnf 2 1\nc k 2\nw 1 1 0\n", InstanceKind::Cnf) == 2);
  CHECK(parse_error_line("", InstanceKind::Cnf) >= 1);
  try {
    parse_cnf("c k 2\np cnf 2 2\nw 1 1 1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    CHECK(std::string(e.what()).find("end of file") != std::string::npos);
  }
}

TEST_CASE("graph format round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = spec(InstanceKind::Graph, seed);
    s.vertices = 2 + seed % 6;
    s.dim = 1 + seed % 3;
    const auto g = generate_graph(s);
    const auto text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
    CHECK(detect_format(text) == InstanceKind::Graph);
  }
}

TEST_CASE("graph format details") {
  CHECK(parse_error_line("moatsp k=1 n=2\n1 2 5\n", InstanceKind::Graph) == 3);
  CHECK(parse_error_line("moatsp k=1 n=2\n1 2 5\n1 2 4\n", InstanceKind::Graph) == 3);
  CHECK(parse_error_line("moatsp k=1 n=2\n1 1 5\n2 1 4\n", InstanceKind::Graph) == 2);
  CHECK(parse_error_line("moatsp k=1 n=2\n1 2 5\n2 1 -4\n", InstanceKind::Graph) == 3);
  CHECK(parse_error_line("moatsp k=1 n=2\n1 2 5\n2 1 4\n1 2 3\n", InstanceKind::Graph) == 4);
  CHECK(parse_error_line("moatsp k=1\n", InstanceKind::Graph) == 1);
  const auto g = parse_graph("moatsp k=2 n=2\n2 1 4 0\n1 2 5 1\n");
  CHECK(g.weight(0, 1) == WeightVector{5, 1});
  CHECK(g.weight(1, 0) == WeightVector{4, 0});
}

TEST_CASE("format detection and unknown input") {
  CHECK_THROWS_AS(detect_format("hello\n"), ParseError);
  CHECK_THROWS_AS(detect_format(""), ParseError);
  CHECK(parse_instance_kind("cnf") == InstanceKind::Cnf);
  CHECK_THROWS_AS(parse_instance_kind("tsp"), PreconditionError);
}

TEST_CASE("digest and files") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
  const auto path = (std::filesystem::temp_directory_path() / "moapprox_io_test.txt").string();
  write_text_file(path, "abc\n");
  CHECK(read_text_file(path) == "abc\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file(path), Error);
}

TEST_CASE("generator determinism and invariants") {
  for (auto k : {InstanceKind::Balance, InstanceKind::Cnf, InstanceKind::Graph})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto s = spec(k, seed);
      CHECK(generate_text(s) == generate_text(s));
      auto other = s;
      other.seed = seed + 1000;
      CHECK(generate_text(s) != generate_text(other));
    }
  for (auto v : {BalanceVariant::Paired, BalanceVariant::Integer, BalanceVariant::Combinatorial}) {
    auto s = spec(InstanceKind::Balance, 3);
    s.variant = v;
    s.m = 12;
    const auto inst = generate_balance(s);
    const auto& z = *inst.z;
    for (std::size_t i = 0; i < inst.m(); ++i)
      for (std::size_t c = 0; c < 2; ++c) {
        CHECK(std::abs(inst.x[i][c]) <= s.bound);
        if (v != BalanceVariant::Combinatorial) CHECK(std::abs(inst.x[i][c]) <= z[c]);
        if (v != BalanceVariant::Integer) CHECK(inst.y[i][c] <= z[c]);
        if (v != BalanceVariant::Integer) CHECK(inst.x[i][c] >= 0);
      }
  }
  auto c = generate_cnf(spec(InstanceKind::Cnf, 4));
  c.validate();
  for (const auto& cl : c.clauses) {
    CHECK(cl.literals.size() >= 1);
    CHECK(cl.literals.size() <= 3);
  }
  generate_graph(spec(InstanceKind::Graph, 4)).validate();
}

TEST_CASE("generator caps") {
  auto s = spec(InstanceKind::Graph, 1);
  s.vertices = 1;
  CHECK_THROWS_AS(generate_graph(s), PreconditionError);
  s.vertices = 65;
  CHECK_THROWS_AS(generate_graph(s), BudgetExceeded);
  auto b = spec(InstanceKind::Balance, 1);
  b.bound = -1;
  CHECK_THROWS_AS(generate_balance(b), PreconditionError);
}

TEST_CASE("bounded draws stay in range and hit both ends") {
  Rng rng(1);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    lo = lo || v == -3;
    hi = hi || v == 3;
  }
  CHECK(lo);
  CHECK(hi);
  CHECK(rng.uniform(5, 5) == 5);
  CHECK_THROWS_AS(rng.uniform(2, 1), PreconditionError);
}

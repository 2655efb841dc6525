#include "moapprox/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace moapprox {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Balance: return "balance";
    case InstanceKind::Cnf: return "cnf";
    case InstanceKind::Graph: return "graph";
  }
  return "?";
}

InstanceKind parse_instance_kind(std::string_view text) {
  if (text == "balance") return InstanceKind::Balance;
  if (text == "cnf") return InstanceKind::Cnf;
  if (text == "graph") return InstanceKind::Graph;
  throw PreconditionError("unknown instance kind '" + std::string(text) + "'");
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits text into non-blank lines of whitespace-separated tokens, keeping
// 1-based line and column numbers for error messages.
class Lexer {
 public:
  explicit Lexer(std::string_view text) {
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
      if (pos == text.size() && pos > 0) break;  // trailing newline
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view raw = text.substr(pos, end - pos);
      Line l{line_no, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i > start) l.tokens.push_back({raw.substr(start, i - start), start + 1});
      }
      if (!l.tokens.empty()) lines_.push_back(std::move(l));
      last_line_ = line_no;
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  [[nodiscard]] bool done() const { return next_ >= lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take(const std::string& expected) {
    if (done()) throw ParseError(last_line_ + 1, 1, "unexpected end of file, expected " + expected);
    return lines_[next_++];
  }
  [[nodiscard]] std::size_t end_line() const { return last_line_ + 1; }
  void skip_if(const auto& pred) {
    while (!done() && pred(lines_[next_])) ++next_;
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

std::int64_t to_int(const Line& l, const Token& t) {
  std::int64_t v = 0;
  auto s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError(l.number, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  return v;
}

// Parses "<key>=<non-negative integer>".
std::size_t keyed(const Line& l, std::size_t index, std::string_view key) {
  if (index >= l.tokens.size()) throw ParseError(l.number, 1, "missing '" + std::string(key) + "=' field");
  const auto& t = l.tokens[index];
  if (t.text.substr(0, key.size() + 1) != std::string(key) + "=")
    throw ParseError(l.number, t.column, "expected '" + std::string(key) + "=<int>', found '" + std::string(t.text) + "'");
  Token value{t.text.substr(key.size() + 1), t.column + key.size() + 1};
  auto v = to_int(l, value);
  if (v < 0) throw ParseError(l.number, value.column, std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void expect_count(const Line& l, std::size_t count, const std::string& what) {
  if (l.tokens.size() != count) {
    std::size_t col = l.tokens.size() > count ? l.tokens[count].column : l.tokens.back().column;
    throw ParseError(l.number, col,
                     "expected " + std::to_string(count) + " " + what + ", found " + std::to_string(l.tokens.size()));
  }
}

WeightVector vector_line(const Line& l, std::size_t dim, const std::string& what) {
  expect_count(l, dim, "integers for " + what);
  std::vector<std::int64_t> c;
  for (const auto& t : l.tokens) c.push_back(to_int(l, t));
  return WeightVector(std::move(c));
}

bool is_hash_comment(const Line& l) { return l.tokens.front().text.front() == '#'; }

void append_vector(std::string& out, const WeightVector& w) {
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  out += '\n';
}

}  // namespace

InstanceKind detect_format(std::string_view text) {
  Lexer lx(text);
  lx.skip_if(is_hash_comment);
  if (lx.done()) throw ParseError(1, 1, "empty instance file");
  const auto& head = lx.peek().tokens.front().text;
  if (head == "balance") return InstanceKind::Balance;
  if (head == "moatsp") return InstanceKind::Graph;
  if (head == "c" || head == "p") return InstanceKind::Cnf;
  throw ParseError(lx.peek().number, 1, "unrecognized instance header '" + std::string(head) + "'");
}

BalancingInstance parse_balance(std::string_view text) {
  Lexer lx(text);
  lx.skip_if(is_hash_comment);
  const auto& h = lx.take("balance header");
  if (h.tokens.front().text != "balance") throw ParseError(h.number, 1, "expected 'balance' header");
  if (h.tokens.size() != 4) throw ParseError(h.number, 1, "header must be 'balance <variant> m=<m> n=<n>'");
  BalancingInstance inst;
  try {
    inst.variant = parse_balance_variant(h.tokens[1].text);
  } catch (const PreconditionError& e) {
    throw ParseError(h.number, h.tokens[1].column, e.what());
  }
  const std::size_t m = keyed(h, 2, "m");
  inst.n = keyed(h, 3, "n");
  if (m < 1 || inst.n < 1) throw ParseError(h.number, 1, "m and n must be >= 1");
  const std::size_t d = 2 * inst.n;

  auto rows = [&](const char* name) {
    std::vector<WeightVector> v;
    for (std::size_t i = 1; i <= m; ++i) {
      lx.skip_if(is_hash_comment);
      const auto what = std::string(name) + "_" + std::to_string(i);
      v.push_back(vector_line(lx.take(what), d, what));
    }
    return v;
  };
  inst.x = rows("x");
  if (inst.variant != BalanceVariant::Integer) inst.y = rows("y");
  lx.skip_if(is_hash_comment);
  if (inst.variant != BalanceVariant::Combinatorial || !lx.done()) inst.z = vector_line(lx.take("z"), d, "z");
  lx.skip_if(is_hash_comment);
  if (!lx.done()) throw ParseError(lx.peek().number, 1, "trailing content after z");
  return inst;
}

std::string serialize_balance(const BalancingInstance& inst) {
  std::string out = "balance " + to_string(inst.variant) + " m=" + std::to_string(inst.m()) + " n=" + std::to_string(inst.n) + "\n";
  for (const auto& v : inst.x) append_vector(out, v);
  for (const auto& v : inst.y) append_vector(out, v);
  if (inst.z) append_vector(out, *inst.z);
  return out;
}

CnfInstance parse_cnf(std::string_view text) {
  Lexer lx(text);
  CnfInstance inst;
  bool have_header = false;
  std::size_t declared = 0;
  while (!lx.done()) {
    const auto& l = lx.take("clause");
    const auto head = l.tokens.front().text;
    if (head == "c") {
      if (l.tokens.size() == 3 && l.tokens[1].text == "k") {
        if (have_header) throw ParseError(l.number, 1, "'c k' line must precede the 'p cnf' header");
        auto k = to_int(l, l.tokens[2]);
        if (k < 1) throw ParseError(l.number, l.tokens[2].column, "objective dimension must be >= 1");
        inst.dim = static_cast<std::size_t>(k);
      }
      continue;
    }
    if (head == "p") {
      if (have_header) throw ParseError(l.number, 1, "duplicate 'p cnf' header");
      if (l.tokens.size() != 4 || l.tokens[1].text != "cnf") throw ParseError(l.number, 1, "header must be 'p cnf <vars> <clauses>'");
      auto vars = to_int(l, l.tokens[2]), clauses = to_int(l, l.tokens[3]);
      if (vars < 0 || clauses < 0) throw ParseError(l.number, l.tokens[2].column, "negative count in header");
      inst.num_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(l.number, 1, "clause before 'p cnf' header");
    if (head != "w") throw ParseError(l.number, 1, "clause lines must start with 'w'");
    const std::size_t k = inst.dim;
    if (l.tokens.size() < k + 3) throw ParseError(l.number, l.tokens.back().column, "clause needs " + std::to_string(k) + " weights, at least one literal and a terminating 0");
    Clause c;
    std::vector<std::int64_t> w;
    for (std::size_t i = 1; i <= k; ++i) {
      auto v = to_int(l, l.tokens[i]);
      if (v < 0) throw ParseError(l.number, l.tokens[i].column, "clause weights must be non-negative");
      w.push_back(v);
    }
    c.weight = WeightVector(std::move(w));
    for (std::size_t i = k + 1; i < l.tokens.size(); ++i) {
      auto lit = to_int(l, l.tokens[i]);
      if (lit == 0) {
        if (i + 1 != l.tokens.size()) throw ParseError(l.number, l.tokens[i + 1].column, "content after terminating 0");
        break;
      }
      if (i + 1 == l.tokens.size()) throw ParseError(l.number, l.tokens[i].column, "clause is not terminated by 0");
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > inst.num_vars)
        throw ParseError(l.number, l.tokens[i].column, "literal " + std::to_string(lit) + " exceeds declared variable count");
      auto literal = Literal::from_dimacs(static_cast<int>(lit));
      if (c.contains(literal)) throw ParseError(l.number, l.tokens[i].column, "duplicate literal " + std::to_string(lit));
      c.literals.push_back(literal);
    }
    inst.clauses.push_back(std::move(c));
  }
  if (!have_header) throw ParseError(1, 1, "missing 'p cnf' header");
  if (inst.clauses.size() != declared)
    throw ParseError(lx.end_line(), 1, "unexpected end of file: header declares " + std::to_string(declared) + " clauses, file has " + std::to_string(inst.clauses.size()));
  return inst;
}

std::string serialize_cnf(const CnfInstance& inst) {
  std::string out = "c k " + std::to_string(inst.dim) + "\n";
  out += "p cnf " + std::to_string(inst.num_vars) + " " + std::to_string(inst.clauses.size()) + "\n";
  for (const auto& c : inst.clauses) {
    out += 'w';
    for (auto v : c.weight.components()) out += ' ' + std::to_string(v);
    for (auto l : c.literals) out += ' ' + std::to_string(l.dimacs());
    out += " 0\n";
  }
  return out;
}

LabeledDigraph parse_graph(std::string_view text) {
  Lexer lx(text);
  lx.skip_if(is_hash_comment);
  const auto& h = lx.take("moatsp header");
  if (h.tokens.front().text != "moatsp" || h.tokens.size() != 3)
    throw ParseError(h.number, 1, "header must be 'moatsp k=<dim> n=<vertices>'");
  const std::size_t k = keyed(h, 1, "k"), n = keyed(h, 2, "n");
  if (k < 1) throw ParseError(h.number, h.tokens[1].column, "objective dimension must be >= 1");
  if (n < 2) throw ParseError(h.number, h.tokens[2].column, "graph needs at least two vertices");
  LabeledDigraph g(n, k);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < n * (n - 1); ++i) {
    lx.skip_if(is_hash_comment);
    const auto& l = lx.take("edge line " + std::to_string(i + 1) + " of " + std::to_string(n * (n - 1)));
    expect_count(l, k + 2, "fields (u v and " + std::to_string(k) + " weights)");
    auto u = to_int(l, l.tokens[0]), v = to_int(l, l.tokens[1]);
    if (u < 1 || static_cast<std::size_t>(u) > n) throw ParseError(l.number, l.tokens[0].column, "vertex out of range");
    if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError(l.number, l.tokens[1].column, "vertex out of range");
    if (u == v) throw ParseError(l.number, l.tokens[1].column, "self-loops are not allowed");
    Edge e{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
    if (!seen.insert(e).second) throw ParseError(l.number, 1, "edge listed twice");
    std::vector<std::int64_t> w;
    for (std::size_t j = 0; j < k; ++j) {
      auto x = to_int(l, l.tokens[j + 2]);
      if (x < 0) throw ParseError(l.number, l.tokens[j + 2].column, "edge weights must be non-negative");
      w.push_back(x);
    }
    g.set_weight(e.first, e.second, WeightVector(std::move(w)));
  }
  lx.skip_if(is_hash_comment);
  if (!lx.done()) throw ParseError(lx.peek().number, 1, "trailing content after the last edge");
  return g;
}

std::string serialize_graph(const LabeledDigraph& g) {
  std::string out = "moatsp k=" + std::to_string(g.dim()) + " n=" + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u + 1) + ' ' + std::to_string(v + 1);
    for (auto x : g.weight(u, v).components()) out += ' ' + std::to_string(x);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace moapprox

#ifndef MOAPPROX_IO_HPP
#define MOAPPROX_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "moapprox/balancing.hpp"
#include "moapprox/digraph.hpp"
#include "moapprox/maxsat.hpp"

namespace moapprox {

/// Syntax or shape error in an instance file, tagged with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class InstanceKind { Balance, Cnf, Graph };

std::string to_string(InstanceKind k);
InstanceKind parse_instance_kind(std::string_view text);

/// Guesses the format from the first significant line.
InstanceKind detect_format(std::string_view text);

// Balancing format:
//   balance <variant> m=<m> n=<n>
//   m lines of 2n integers (x), then m lines (y) for paired/combinatorial,
//   then one line (z) for paired/integer, optional for combinatorial.
// Blank lines and lines starting with '#' are ignored.
BalancingInstance parse_balance(std::string_view text);
std::string serialize_balance(const BalancingInstance& inst);

// Weighted DIMACS with vector weights:
//   c k <dim>
//   p cnf <vars> <clauses>
//   w <w_1> ... <w_k> <lit> ... 0
CnfInstance parse_cnf(std::string_view text);
std::string serialize_cnf(const CnfInstance& inst);

// Complete digraph:
//   moatsp k=<dim> n=<vertices>
//   n(n-1) lines "u v w_1 ... w_k" with 1-based u != v, each pair once.
LabeledDigraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledDigraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// 64-bit FNV-1a digest, printed as 16 hex digits.
std::string digest(std::string_view text);

}  // namespace moapprox

#endif  // MOAPPROX_IO_HPP

#ifndef MOAPPROX_WEIGHT_HPP
#define MOAPPROX_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moapprox {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two weight vectors (or an instance and a vector) disagree on dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation's input violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured operation budget or cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A search that is guaranteed to succeed did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic; throws Error on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/**
 * Fixed-dimension integer objective vector.
 *
 * All arithmetic is overflow-checked. Comparison operators (<, ==) are the
 * lexicographic order used for canonical output; the componentwise partial
 * order is exposed as geq()/leq().
 */
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t dim) : c_(dim, 0) {}
  explicit WeightVector(std::vector<std::int64_t> components) : c_(std::move(components)) {}
  WeightVector(std::initializer_list<std::int64_t> components) : c_(components) {}

  [[nodiscard]] std::size_t dim() const { return c_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  [[nodiscard]] std::span<const std::int64_t> components() const { return c_; }

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  /// Componentwise scaling.
  [[nodiscard]] WeightVector scaled(std::int64_t factor) const;

  /// Componentwise a >= b.
  [[nodiscard]] bool geq(const WeightVector& o) const;
  /// Componentwise a <= b.
  [[nodiscard]] bool leq(const WeightVector& o) const { return o.geq(*this); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool non_negative() const;

  /// Copy with `extra` zero components appended.
  [[nodiscard]] WeightVector padded(std::size_t extra) const;
  /// Copy of the first `dim` components.
  [[nodiscard]] WeightVector truncated(std::size_t dim) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.c_ <=> b.c_; }

  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

void require_same_dim(const WeightVector& a, const WeightVector& b, std::string_view what);

/// Exact non-negative rational, used for approximation factors and epsilon.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Parses "p/q" or "p"; throws PreconditionError on malformed text or q <= 0.
  static Rational parse(std::string_view text);
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] bool is_zero() const { return num == 0; }
};

}  // namespace moapprox

#endif  // MOAPPROX_WEIGHT_HPP

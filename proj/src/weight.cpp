#include "moapprox/weight.hpp"

#include <charconv>
#include <sstream>

namespace moapprox {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in weight addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in weight subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in weight multiplication");
  return r;
}

void require_same_dim(const WeightVector& a, const WeightVector& b, std::string_view what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(os.str());
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  require_same_dim(*this, o, "weight addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  require_same_dim(*this, o, "weight subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

WeightVector WeightVector::scaled(std::int64_t factor) const {
  WeightVector r(*this);
  for (auto& v : r.c_) v = checked_mul(v, factor);
  return r;
}

bool WeightVector::geq(const WeightVector& o) const {
  require_same_dim(*this, o, "weight comparison");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] < o.c_[i]) return false;
  return true;
}

bool WeightVector::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

bool WeightVector::non_negative() const {
  for (auto v : c_)
    if (v < 0) return false;
  return true;
}

WeightVector WeightVector::padded(std::size_t extra) const {
  auto c = c_;
  c.resize(c.size() + extra, 0);
  return WeightVector(std::move(c));
}

WeightVector WeightVector::truncated(std::size_t dim) const {
  return WeightVector(std::vector<std::int64_t>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(dim)));
}

std::string WeightVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

namespace {

std::int64_t parse_int(std::string_view t, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty())
    throw PreconditionError("malformed rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int(text, text);
    r.den = 1;
  } else {
    r.num = parse_int(text.substr(0, slash), text);
    r.den = parse_int(text.substr(slash + 1), text);
  }
  if (r.den <= 0 || r.num < 0) throw PreconditionError("rational '" + std::string(text) + "' must be p/q with p >= 0, q > 0");
  return r;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

}  // namespace moapprox

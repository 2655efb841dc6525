#include <doctest.h>

#include <random>
#include <string>

#include "moapprox/pareto.hpp"

using namespace moapprox;

namespace {

using Set = SolutionSet<std::string>;

Set make_set(const std::vector<WeightVector>& ws) {
  Set s;
  for (std::size_t i = 0; i < ws.size(); ++i) s.push_back({"s" + std::to_string(i), ws[i]});
  return s;
}

// Quadratic reference: keep e unless some other entry's weight dominates it.
Set all_pairs_filter(const Set& s) {
  Set out;
  for (const auto& e : s) {
    bool dominated = false;
    for (const auto& o : s) {
      bool geq = true;
      for (std::size_t i = 0; i < e.weight.dim(); ++i) geq = geq && o.weight[i] >= e.weight[i];
      if (geq && o.weight != e.weight) dominated = true;
    }
    if (!dominated) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), canonical_less<std::string>);
  return out;
}

WeightVector random_weight(std::mt19937_64& rng, std::size_t dim, int hi) {
  WeightVector w(dim);
  for (std::size_t i = 0; i < dim; ++i) w[i] = static_cast<std::int64_t>(rng() % static_cast<unsigned>(hi + 1));
  return w;
}

}  // namespace

TEST_CASE("checked arithmetic detects overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), Error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), Error);
  WeightVector a{INT64_MAX, 0};
  CHECK_THROWS(a += WeightVector{1, 0});
  CHECK_THROWS_AS(WeightVector({1, 2}) + WeightVector({1}), DimensionError);
}

TEST_CASE("weight vector helpers") {
  WeightVector a{1, 2};
  CHECK(a.padded(1) == WeightVector{1, 2, 0});
  CHECK(a.padded(1).truncated(2) == a);
  CHECK(a.scaled(3) == WeightVector{3, 6});
  CHECK(a.str() == "(1,2)");
  CHECK(WeightVector(3).is_zero());
  CHECK_FALSE(WeightVector({-1, 0}).non_negative());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2").num == 1);
  CHECK(Rational::parse("1/2").den == 2);
  CHECK(Rational::parse("3").den == 1);
  CHECK(Rational::parse("2/4").str() == "2/4");
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("-1/2"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("a/b"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse(""), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), PreconditionError);
}

TEST_CASE("dominates examples") {
  CHECK_FALSE(dominates({3, 2}, {3, 2}));
  CHECK(dominates({4, 2}, {3, 2}));
  CHECK_FALSE(dominates({4, 1}, {3, 2}));
  CHECK_THROWS_AS(dominates({1}, {1, 2}), DimensionError);
}

TEST_CASE("dominates is a strict partial order") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5000; ++t) {
    auto a = random_weight(rng, 2, 3), b = random_weight(rng, 2, 3), c = random_weight(rng, 2, 3);
    CHECK_FALSE(dominates(a, a));
    CHECK_FALSE((dominates(a, b) && dominates(b, a)));
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("pareto_filter examples") {
  auto out = pareto_filter(make_set({{1, 2}, {2, 1}, {1, 1}}));
  REQUIRE(out.size() == 2);
  CHECK(out[0].weight == WeightVector{1, 2});
  CHECK(out[1].weight == WeightVector{2, 1});
  auto single = make_set({{5, 5}});
  CHECK(pareto_filter(single) == single);
  CHECK(pareto_filter(Set{}).empty());
}

TEST_CASE("pareto_filter keeps duplicate weights") {
  auto out = pareto_filter(make_set({{2, 2}, {2, 2}, {1, 1}}));
  CHECK(out.size() == 2);
}

TEST_CASE("pareto_filter agrees with the all-pairs scan") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<WeightVector> ws;
    const auto count = rng() % 100;
    for (std::size_t i = 0; i < count; ++i) ws.push_back(random_weight(rng, dim, 8));
    const auto s = make_set(ws);
    const auto got = pareto_filter(s);
    CHECK(got == all_pairs_filter(s));
    // idempotent
    CHECK(pareto_filter(got) == got);
    // every entry is kept or dominated by a kept one
    for (const auto& e : s) {
      bool ok = std::any_of(got.begin(), got.end(), [&](const auto& f) { return f.weight == e.weight || dominates(f.weight, e.weight); });
      CHECK(ok);
    }
    CHECK(is_alpha_approx_set(s, got, Rational{1, 1}).success);
  }
}

TEST_CASE("pareto_filter rejects mixed dimensions") {
  CHECK_THROWS_AS(pareto_filter(make_set({{1, 2}, {1}})), DimensionError);
}

TEST_CASE("cover ratio and alpha cover") {
  auto r = cover_ratio({1, 3}, {2, 4});
  CHECK(r.str() == "1/2");
  CHECK(r.at_least({1, 2}));
  CHECK_FALSE(r.at_least({2, 3}));
  CHECK(cover_ratio({0, 0}, {0, 0}).unbounded);
  CHECK(alpha_covers({1, 0}, {2, 0}, {1, 2}));
  CHECK_FALSE(alpha_covers({1, 0}, {3, 0}, {1, 2}));
  // exactness at the boundary where doubles could misround
  const std::int64_t big = (std::int64_t{1} << 61) + 1;
  CHECK(alpha_covers({big}, {2 * big}, {1, 2}));
  CHECK_FALSE(alpha_covers({big - 1}, {2 * big}, {1, 2}));
}

TEST_CASE("is_alpha_approx_set examples") {
  auto ref = make_set({{1, 2}, {2, 1}});
  auto ok = is_alpha_approx_set(ref, ref, {1, 1});
  CHECK(ok.success);
  REQUIRE(ok.covers.size() == 2);
  CHECK(ok.covers[0].candidate_index == 0);
  CHECK(ok.covers[1].candidate_index == 1);

  auto fail = is_alpha_approx_set(make_set({{1, 0}}), make_set({{0, 2}}), {1, 2});
  CHECK_FALSE(fail.success);
  REQUIRE(fail.first_uncovered.has_value());
  CHECK(*fail.first_uncovered == 0);
  CHECK(*fail.uncovered_weight == WeightVector{0, 2});
}

TEST_CASE("certificate ratios are at least alpha on success") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<WeightVector> c, r;
    for (int i = 0; i < 6; ++i) c.push_back(random_weight(rng, 2, 10));
    for (int i = 0; i < 4; ++i) r.push_back(random_weight(rng, 2, 10));
    const Rational alpha{1, 2};
    auto cert = certify_weights(c, r, alpha);
    bool expected = std::all_of(r.begin(), r.end(), [&](const WeightVector& ref) {
      return std::any_of(c.begin(), c.end(), [&](const WeightVector& cand) {
        return 2 * cand[0] >= ref[0] && 2 * cand[1] >= ref[1];
      });
    });
    CHECK(cert.success == expected);
    if (cert.success)
      for (const auto& p : cert.covers) CHECK(p.ratio.at_least(alpha));
  }
}

#include "moapprox/pareto.hpp"

#include <numeric>

namespace moapprox {

bool dominates(const WeightVector& a, const WeightVector& b) {
  require_same_dim(a, b, "dominates");
  return a.geq(b) && a != b;
}

bool alpha_covers(const WeightVector& candidate, const WeightVector& reference, const Rational& alpha) {
  require_same_dim(candidate, reference, "alpha_covers");
  for (std::size_t i = 0; i < candidate.dim(); ++i) {
    __int128 lhs = static_cast<__int128>(alpha.num) * reference[i];
    __int128 rhs = static_cast<__int128>(alpha.den) * candidate[i];
    if (lhs > rhs) return false;
  }
  return true;
}

CoverRatio cover_ratio(const WeightVector& candidate, const WeightVector& reference) {
  require_same_dim(candidate, reference, "cover_ratio");
  CoverRatio best;
  for (std::size_t i = 0; i < candidate.dim(); ++i) {
    if (reference[i] <= 0) continue;
    CoverRatio r{candidate[i], reference[i], false};
    if (best.unbounded || r < best) best = r;
  }
  if (!best.unbounded) {
    const auto g = std::gcd(best.num, best.den);
    if (g > 1) {
      best.num /= g;
      best.den /= g;
    }
  }
  return best;
}

bool operator<(const CoverRatio& a, const CoverRatio& b) {
  if (a.unbounded) return false;
  if (b.unbounded) return true;
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool CoverRatio::at_least(const Rational& alpha) const {
  if (unbounded) return true;
  return static_cast<__int128>(num) * alpha.den >= static_cast<__int128>(alpha.num) * den;
}

std::string CoverRatio::str() const {
  if (unbounded) return "inf";
  return std::to_string(num) + "/" + std::to_string(den);
}

ApproxCertificate certify_weights(const std::vector<WeightVector>& candidates, const std::vector<WeightVector>& reference,
                                  const Rational& alpha) {
  ApproxCertificate cert;
  cert.alpha = alpha;
  cert.success = true;
  for (std::size_t r = 0; r < reference.size(); ++r) {
    std::optional<CoverPair> best;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      auto ratio = cover_ratio(candidates[c], reference[r]);
      if (!best || best->ratio < ratio) best = CoverPair{r, c, ratio};
    }
    bool covered = best && alpha_covers(candidates[best->candidate_index], reference[r], alpha);
    if (best) cert.covers.push_back(*best);
    if (!covered && cert.success) {
      cert.success = false;
      cert.first_uncovered = r;
      cert.uncovered_weight = reference[r];
    }
  }
  return cert;
}

}  // namespace moapprox

#pragma once
// Semantic checker for cut-ideal arithmetic. A cut ideal is determined by
// its value set, an upward-closed subset of the rationals; products add
// values (Minkowski sum), lattice operations act pointwise. This module
// samples those value sets on a uniform grid and recomputes each operation
// from the sampled semantics alone, so the closed-form rules in the
// valuation module can be checked against something that never consults
// them.
//
// Exactness domain: cuts whose boundary lies on the grid (denominator
// dividing q) with |gamma| <= B/2. Inside that domain a cut's coarse
// projection separates open from closed at its own boundary, and the
// witnessed product below provably matches the true product's projection.
// The B/2 margin keeps product boundaries inside the window.
//
// Two places need the half-step grid instead. The product: for two open
// cuts the first grid point of the product sits strictly between
// admissible splits on the coarse grid. And containment: an open cut and
// the closed cut one step up differ only inside that step, so the coarse
// projections coincide and only half-step sampling tells them apart.

#include <cstdlib>
#include <vector>

#include "nicetop/base.hpp"

namespace nicetop::gridcheck {

// Characteristic vector of a value set restricted to { i/q : |i| <= B*q }.
struct GridSet {
  int q = 0;
  int B = 0;
  std::vector<bool> pts;  // pts[i + B*q] marks the point i/q
  bool operator==(const GridSet&) const = default;
};

// Sampling view of a cut ideal: either the zero ideal (empty value set) or
// the values above gamma, with or without gamma itself.
struct CutDesc {
  bool zero = false;
  Rat gamma{0};
  bool closed = true;
};

namespace detail {

// p/r in the value set, by cross multiplication; r > 0.
inline bool value_in(const CutDesc& c, long long p, long long r) {
  if (c.zero) return false;
  const long long lhs = p * c.gamma.denominator();
  const long long rhs = c.gamma.numerator() * r;
  return lhs > rhs || (c.closed && lhs == rhs);
}

inline void check_domain(const CutDesc& c, int q, int B) {
  if (q < 1 || B < 1) throw InvalidParameter("grid needs q >= 1 and B >= 1");
  if (c.zero) return;
  if (q % c.gamma.denominator() != 0)
    throw InvalidParameter("cut boundary off the sampling grid");
  if (boost::abs(c.gamma) * 2 > B)
    throw InvalidParameter("cut boundary outside the sampling window");
}

// Smallest k in [-span, span] with k/(2q) in the value set, or span+1 when
// the window misses the set entirely. Value sets are upward closed, so the
// window restriction is a single ray.
inline long long fine_threshold(const CutDesc& c, int q, long long span) {
  for (long long k = -span; k <= span; ++k)
    if (value_in(c, k, 2LL * q)) return k;
  return span + 1;
}

}  // namespace detail

// Raw sampling, no domain check: used to compare against product results,
// whose boundary may sit past the B/2 margin yet inside the window.
inline GridSet sample_values(const CutDesc& c, int q = 64, int B = 16) {
  if (q < 1 || B < 1) throw InvalidParameter("grid needs q >= 1 and B >= 1");
  GridSet g{q, B, std::vector<bool>(2 * B * q + 1, false)};
  for (long long i = -static_cast<long long>(B) * q; i <= 1LL * B * q; ++i)
    g.pts[i + 1LL * B * q] = detail::value_in(c, i, q);
  return g;
}

inline GridSet project(const CutDesc& c, int q = 64, int B = 16) {
  detail::check_domain(c, q, B);
  return sample_values(c, q, B);
}

// Half-step sampling over the same window; exact for containment between
// on-grid cuts, which the coarse grid is not.
inline GridSet sample_values_half(const CutDesc& c, int q = 64, int B = 16) {
  detail::check_domain(c, q, B);
  GridSet g{2 * q, B, std::vector<bool>(4LL * B * q + 1, false)};
  for (long long k = -2LL * B * q; k <= 2LL * B * q; ++k)
    g.pts[k + 2LL * B * q] = detail::value_in(c, k, 2LL * q);
  return g;
}

// Projection of the product value set { v1 + v2 : v1 in c1, v2 in c2 },
// computed from sampled memberships. A coarse point s is in the product
// iff some half-step v1 in the window has v1 in c1 and s - v1 in c2; with
// both thresholds sampled, that existential collapses to an index
// inequality.
inline GridSet minkowski_product(const CutDesc& c1, const CutDesc& c2,
                                 int q = 64, int B = 16) {
  detail::check_domain(c1, q, B);
  detail::check_domain(c2, q, B);
  const long long span1 = 2LL * B * q;      // v1 window, half-step units
  const long long span2 = 4LL * B * q;      // s - v1 range, half-step units
  const long long t1 = detail::fine_threshold(c1, q, span1);
  const long long t2 = detail::fine_threshold(c2, q, span2);
  GridSet g{q, B, std::vector<bool>(2 * B * q + 1, false)};
  if (t1 > span1 || t2 > span2) return g;
  for (long long i = -static_cast<long long>(B) * q; i <= 1LL * B * q; ++i)
    g.pts[i + 1LL * B * q] = 2 * i >= t1 + t2;
  return g;
}

inline GridSet pointwise_meet(const GridSet& a, const GridSet& b) {
  if (a.q != b.q || a.B != b.B)
    throw InvalidParameter("grid mismatch in meet");
  GridSet g = a;
  for (std::size_t i = 0; i < g.pts.size(); ++i)
    g.pts[i] = a.pts[i] && b.pts[i];
  return g;
}

inline GridSet pointwise_join(const GridSet& a, const GridSet& b) {
  if (a.q != b.q || a.B != b.B)
    throw InvalidParameter("grid mismatch in join");
  GridSet g = a;
  for (std::size_t i = 0; i < g.pts.size(); ++i)
    g.pts[i] = a.pts[i] || b.pts[i];
  return g;
}

inline bool grid_subset(const GridSet& sub, const GridSet& sup) {
  if (sub.q != sup.q || sub.B != sup.B)
    throw InvalidParameter("grid mismatch in subset test");
  for (std::size_t i = 0; i < sub.pts.size(); ++i)
    if (sub.pts[i] && !sup.pts[i]) return false;
  return true;
}

}  // namespace nicetop::gridcheck

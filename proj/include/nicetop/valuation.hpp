#pragma once
// Fractional ideals of a valuation domain with value group the reals,
// represented exactly: an ideal is either zero or the set of elements whose
// value lies above a rational cut, with or without the cut point itself.
// Inclusion, product, intersection, and sum all reduce to rational
// comparisons, so everything here is decidable and round-off free.

#include <string>
#include <utility>

#include "nicetop/base.hpp"

namespace nicetop {

enum class Bound { Closed, Open };

struct CutIdeal {
  bool zero = false;
  Rat gamma{0};        // meaningful only when !zero
  Bound bound = Bound::Closed;

  static CutIdeal make_zero() { return CutIdeal{true, Rat{0}, Bound::Closed}; }
  static CutIdeal make_cut(Rat gamma, Bound b) {
    return CutIdeal{false, std::move(gamma), b};
  }

  friend bool operator==(const CutIdeal& a, const CutIdeal& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.gamma == b.gamma && a.bound == b.bound;
  }
};

// The valuation domain itself and its maximal ideal.
inline CutIdeal ov() { return CutIdeal::make_cut(Rat{0}, Bound::Closed); }
inline CutIdeal maximal_ideal() { return CutIdeal::make_cut(Rat{0}, Bound::Open); }

// Whether the element value v lies in the ideal's value set.
inline bool contains_value(const CutIdeal& I, const Rat& v) {
  if (I.zero) return false;
  return v > I.gamma || (v == I.gamma && I.bound == Bound::Closed);
}

// Set containment I ⊇ J. Cuts are totally ordered by inclusion, with the
// zero ideal at the bottom; at equal cut points the closed set is the
// bigger one.
inline bool contains(const CutIdeal& I, const CutIdeal& J) {
  if (J.zero) return true;
  if (I.zero) return false;
  if (I.gamma != J.gamma) return I.gamma < J.gamma;
  return I.bound == Bound::Closed || J.bound == Bound::Open;
}

// Ideal product: value sets add. The product contains its own cut point
// only when both factors contain theirs.
inline CutIdeal multiply(const CutIdeal& I, const CutIdeal& J) {
  if (I.zero || J.zero) return CutIdeal::make_zero();
  Bound b = (I.bound == Bound::Closed && J.bound == Bound::Closed)
                ? Bound::Closed
                : Bound::Open;
  return CutIdeal::make_cut(I.gamma + J.gamma, b);
}

inline CutIdeal intersect(const CutIdeal& I, const CutIdeal& J) {
  return contains(I, J) ? J : I;
}

// Ideal sum; for a chain of ideals this is just the larger one.
inline CutIdeal sum(const CutIdeal& I, const CutIdeal& J) {
  return contains(I, J) ? I : J;
}

// Ideals of O_v are Zero, every cut strictly above 0, the maximal ideal,
// and the unit ideal O_v itself; equivalently, value set inside [0, ∞).
inline bool is_ov_ideal(const CutIdeal& I) {
  return I.zero || I.gamma >= 0;
}

inline bool is_nonzero_ov_ideal(const CutIdeal& I) {
  return !I.zero && I.gamma >= 0;
}

inline std::string show_cut(const CutIdeal& I) {
  if (I.zero) return "0";
  return std::string("Cut(") + show_rat(I.gamma) +
         (I.bound == Bound::Closed ? ", closed)" : ", open)");
}

// A one-parameter chain of cut ideals: Cut(a·t + b, bound) for t ranging
// over the open interval (lo, hi). Strictly monotone when a ≠ 0, so the
// family is a chain under inclusion.
struct ParamIdealFamily {
  Rat lo{0}, hi{1};
  Rat a{0}, b{0};
  Bound bound = Bound::Closed;

  ParamIdealFamily(Rat lo_, Rat hi_, Rat a_, Rat b_, Bound bd)
      : lo(std::move(lo_)), hi(std::move(hi_)), a(std::move(a_)),
        b(std::move(b_)), bound(bd) {
    if (lo >= hi) throw InvalidParameter("parameter interval must be nonempty");
  }

  Rat gamma_at(const Rat& t) const { return a * t + b; }

  CutIdeal instantiate(const Rat& t) const {
    if (t <= lo || t >= hi)
      throw InvalidParameter("parameter outside the open interval");
    return CutIdeal::make_cut(gamma_at(t), bound);
  }
};

// Intersection over the whole family. For a ≠ 0 the supremum of γ(t) over
// the open interval is not attained, and an element lies in every member
// iff its value reaches that supremum; the limit cut is therefore closed
// no matter the pointwise bound. The degenerate a = 0 family is constant
// and returns its one member.
inline CutIdeal intersect_family(const ParamIdealFamily& F) {
  if (F.a == Rat{0}) return CutIdeal::make_cut(F.b, F.bound);
  Rat sup = F.a > 0 ? F.gamma_at(F.hi) : F.gamma_at(F.lo);
  return CutIdeal::make_cut(sup, Bound::Closed);
}

// Union over the whole family; dual to intersect_family, the unattained
// infimum makes the limit cut open.
inline CutIdeal union_family(const ParamIdealFamily& F) {
  if (F.a == Rat{0}) return CutIdeal::make_cut(F.b, F.bound);
  Rat inf = F.a > 0 ? F.gamma_at(F.lo) : F.gamma_at(F.hi);
  return CutIdeal::make_cut(inf, Bound::Open);
}

}  // namespace nicetop

#pragma once
// Pattern subrings of a matrix algebra over the valuation model: an n x n
// matrix of cut ideals prescribes which coefficients each slot admits.
// Such a pattern is a ring iff it is multiplicatively closed, is unital,
// and represents a nice subalgebra iff additionally the diagonal ideals
// meet in exactly the base ring and no entry vanishes.
//
// Symbolic open families describe opens of the (infinite) member space as
// unions of basic opens V(G): finitely many literal generators plus
// parametric pieces whose one designated entry sweeps a cut chain. All
// queries about these families reduce to rational comparisons and are
// decided exactly; anything outside the descriptor vocabulary is refused
// rather than approximated.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "nicetop/order_core.hpp"
#include "nicetop/valuation.hpp"

namespace nicetop {

struct SizeMismatch : Error {
  using Error::Error;
};

struct NotDirected : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

struct UnsupportedDescriptor : Error {
  using Error::Error;
};

struct PatternRing {
  int n = 0;
  std::vector<std::vector<CutIdeal>> entries;

  static PatternRing of(std::vector<std::vector<CutIdeal>> e) {
    PatternRing P;
    P.n = static_cast<int>(e.size());
    if (P.n < 1) throw InvalidParameter("pattern needs at least one row");
    for (const auto& row : e)
      if (static_cast<int>(row.size()) != P.n)
        throw InvalidParameter("pattern must be square");
    P.entries = std::move(e);
    return P;
  }

  static PatternRing filled(int n, const CutIdeal& I) {
    if (n < 1) throw InvalidParameter("pattern needs at least one row");
    return PatternRing{
        n, std::vector<std::vector<CutIdeal>>(
               n, std::vector<CutIdeal>(static_cast<std::size_t>(n), I))};
  }

  bool operator==(const PatternRing&) const = default;
};

// Entrywise set containment P ⊇ Q.
inline bool contains(const PatternRing& P, const PatternRing& Q) {
  if (P.n != Q.n) throw SizeMismatch("pattern sizes differ");
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (!contains(P.entries[i][j], Q.entries[i][j])) return false;
  return true;
}

struct PatternReport {
  bool multiplicatively_closed = true;
  bool unital = true;
  bool s_nice = true;

  struct ClosureWitness {
    int i, j, k;  // entries[i][k]*entries[k][j] escapes entries[i][j]
  };
  std::vector<ClosureWitness> closure_violations;
  std::vector<int> non_unital_rows;           // diagonal slots missing O_v
  std::vector<std::pair<int, int>> zero_entries;
  bool diagonal_meet_is_base = true;          // ∩_i entries[i][i] = O_v

  bool all_ok() const { return multiplicatively_closed && unital && s_nice; }
};

// Ring/niceness audit. The full-span half of niceness is the nonzero-entry
// rule; the span oracle in the test suite justifies that rule at n = 2, 3
// by exact linear algebra.
inline PatternReport check_pattern(const PatternRing& P) {
  PatternReport rep;
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      for (int k = 0; k < P.n; ++k) {
        CutIdeal prod = multiply(P.entries[i][k], P.entries[k][j]);
        if (!contains(P.entries[i][j], prod)) {
          rep.multiplicatively_closed = false;
          rep.closure_violations.push_back({i, j, k});
        }
      }
  for (int i = 0; i < P.n; ++i)
    if (!contains(P.entries[i][i], ov())) {
      rep.unital = false;
      rep.non_unital_rows.push_back(i);
    }
  CutIdeal diag_meet = P.entries[0][0];
  for (int i = 1; i < P.n; ++i)
    diag_meet = intersect(diag_meet, P.entries[i][i]);
  rep.diagonal_meet_is_base = diag_meet == ov();
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.entries[i][j].zero) rep.zero_entries.emplace_back(i, j);
  rep.s_nice = rep.diagonal_meet_is_base && rep.zero_entries.empty();
  return rep;
}

inline PatternRing intersect_rings(const PatternRing& P1,
                                   const PatternRing& P2) {
  if (P1.n != P2.n) throw SizeMismatch("pattern sizes differ");
  PatternRing R = P1;
  for (int i = 0; i < R.n; ++i)
    for (int j = 0; j < R.n; ++j)
      R.entries[i][j] = intersect(P1.entries[i][j], P2.entries[i][j]);
  return R;
}

// Entrywise least upper bound of a directed list; the union of a directed
// set of patterns is again a pattern ring, and this computes it.
inline PatternRing union_directed(const std::vector<PatternRing>& list) {
  if (list.empty()) throw NotDirected("empty input is not directed");
  for (std::size_t i = 1; i < list.size(); ++i)
    if (list[i].n != list[0].n) throw SizeMismatch("pattern sizes differ");
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      bool bounded = false;
      for (const PatternRing& c : list)
        if (contains(c, list[i]) && contains(c, list[j])) {
          bounded = true;
          break;
        }
      if (!bounded)
        throw NotDirected("members " + std::to_string(i) + " and " +
                          std::to_string(j) + " have no upper bound in the list");
    }
  PatternRing R = list[0];
  for (std::size_t m = 1; m < list.size(); ++m)
    for (int i = 0; i < R.n; ++i)
      for (int j = 0; j < R.n; ++j)
        R.entries[i][j] = sum(R.entries[i][j], list[m].entries[i][j]);
  return R;
}

// Inclusion order of a list of same-size patterns, as a finite poset.
inline FinitePoset inclusion_order(const std::vector<PatternRing>& list) {
  const int n = static_cast<int>(list.size());
  if (n < 1) throw InvalidParameter("need at least one pattern");
  if (n > 64) throw InvalidParameter("too many patterns for one poset");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[i][j] = contains(list[j], list[i]);
  return validate_poset(rel);
}

// One parametric piece: the shape pattern with the designated entry swept
// through a chain of cuts. The designated slot of the stored shape is
// ignored; instances overwrite it.
struct ParamPatternFamily {
  PatternRing shape;
  int di = 0, dj = 0;
  ParamIdealFamily values;
};

// The value interval (lo, hi) the designated cut point ranges over,
// normalized regardless of the sweep direction.
inline std::pair<Rat, Rat> designated_value_interval(
    const ParamIdealFamily& F) {
  Rat at_lo = F.gamma_at(F.lo), at_hi = F.gamma_at(F.hi);
  return at_lo <= at_hi ? std::make_pair(at_lo, at_hi)
                        : std::make_pair(at_hi, at_lo);
}

// The instance whose designated entry is Cut(g, bound); g must lie in the
// open value interval.
inline PatternRing instance_at_value(const ParamPatternFamily& piece,
                                     const Rat& g) {
  auto [lo, hi] = designated_value_interval(piece.values);
  if (piece.values.a == Rat{0} ? g != piece.values.b : (g <= lo || g >= hi))
    throw InvalidParameter("designated value outside the sweep interval");
  PatternRing P = piece.shape;
  P.entries[piece.di][piece.dj] = CutIdeal::make_cut(g, piece.values.bound);
  return P;
}

// A described open set of the member space: the union of V(G) over the
// listed generators and of V(G(t)) over each parametric piece; or, with
// whole_space set, the entire space (whose infimum is not itself a member
// once n >= 2, which is why that case is its own descriptor).
struct SymbolicOpenFamily {
  int n = 0;
  bool whole_space = false;
  std::vector<PatternRing> generators;
  std::vector<ParamPatternFamily> pieces;
};

namespace detail {

// Piece clause of membership: PR ⊇ G(t) for some admissible t. Containment
// away from the designated slot is t-free; at the slot, a cut contains some
// member of a chain sweeping the open value interval iff its cut point sits
// strictly below the upper end.
inline bool contains_some_instance(const ParamPatternFamily& piece,
                                   const PatternRing& PR) {
  for (int i = 0; i < PR.n; ++i)
    for (int j = 0; j < PR.n; ++j) {
      if (i == piece.di && j == piece.dj) continue;
      if (!contains(PR.entries[i][j], piece.shape.entries[i][j])) return false;
    }
  const CutIdeal& E = PR.entries[piece.di][piece.dj];
  auto [lo, hi] = designated_value_interval(piece.values);
  if (piece.values.a == Rat{0})
    return contains(E, CutIdeal::make_cut(piece.values.b, piece.values.bound));
  return !E.zero && E.gamma < hi;
}

}  // namespace detail

inline bool member_of(const SymbolicOpenFamily& U, const PatternRing& PR) {
  if (PR.n != U.n) throw SizeMismatch("pattern size does not match family");
  if (U.whole_space) return check_pattern(PR).all_ok();
  for (const PatternRing& G : U.generators)
    if (contains(PR, G)) return true;
  for (const ParamPatternFamily& piece : U.pieces)
    if (detail::contains_some_instance(piece, PR)) return true;
  return false;
}

// Entrywise intersection over everything the family describes. Equals the
// intersection of all members, because every member contains one of the
// pieces and each piece's own intersection is attained entrywise. For the
// whole space the result has zero off-diagonal entries and is not itself a
// member.
inline PatternRing infimum_of_open(const SymbolicOpenFamily& U) {
  if (U.whole_space) {
    PatternRing P = PatternRing::filled(U.n, CutIdeal::make_zero());
    for (int i = 0; i < U.n; ++i) P.entries[i][i] = ov();
    return P;
  }
  if (U.generators.empty() && U.pieces.empty())
    throw EmptyFamily("described open set has no pieces");
  std::vector<PatternRing> piece_infima = U.generators;
  for (const ParamPatternFamily& piece : U.pieces) {
    PatternRing P = piece.shape;
    P.entries[piece.di][piece.dj] = intersect_family(piece.values);
    piece_infima.push_back(std::move(P));
  }
  PatternRing acc = piece_infima[0];
  for (std::size_t i = 1; i < piece_infima.size(); ++i)
    acc = intersect_rings(acc, piece_infima[i]);
  return acc;
}

struct OpenConditions {
  bool a = false;  // U is the basic open of one of its members
  bool b = false;  // closed under arbitrary nonempty intersection
  bool c = false;  // basic open of the infimum equals U
  bool d = false;  // basic open of the infimum is inside U
  bool e = false;  // closed under pairwise intersection
  bool f = false;  // at most one minimal member
};

namespace detail {

// Decides "G ∩ G(t) is a member of U for every t" exactly: every membership
// predicate, as a function of the designated cut point, is piecewise
// constant with breakpoints among the finitely many cut points mentioned by
// U and G. Testing each interior breakpoint and each gap midpoint therefore
// covers the whole interval.
inline bool intersections_with_piece_stay_inside(
    const SymbolicOpenFamily& U, const PatternRing& G,
    const ParamPatternFamily& piece) {
  auto [lo, hi] = designated_value_interval(piece.values);
  std::set<Rat> cuts;
  auto note = [&](const CutIdeal& I) {
    if (!I.zero && I.gamma > lo && I.gamma < hi) cuts.insert(I.gamma);
  };
  note(G.entries[piece.di][piece.dj]);
  for (const PatternRing& H : U.generators) note(H.entries[piece.di][piece.dj]);
  for (const ParamPatternFamily& other : U.pieces)
    note(other.shape.entries[piece.di][piece.dj]);
  std::vector<Rat> grid{lo};
  grid.insert(grid.end(), cuts.begin(), cuts.end());
  grid.push_back(hi);
  std::vector<Rat> samples;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    samples.push_back((grid[i] + grid[i + 1]) / 2);
    if (i + 2 < grid.size()) samples.push_back(grid[i + 1]);
  }
  for (const Rat& g : samples) {
    PatternRing W = intersect_rings(G, instance_at_value(piece, g));
    if (!member_of(U, W)) return false;
  }
  return true;
}

}  // namespace detail

// Exact evaluation of the six open-set conditions on a described family.
//
// The rules below are consequences of the descriptor shape, not guesses:
//  - the infimum of a non-whole-space family is itself nice (diagonal meets
//    intersect to the base ring, entries stay nonzero, closure survives
//    entrywise intersection), so "U is a basic open" holds iff that infimum
//    is a member, and the same test settles arbitrary-intersection closure
//    and both infimum conditions;
//  - a strictly monotone open-interval sweep has no smallest instance, so
//    minimal members can only be generators;
//  - pairwise-intersection closure reduces to finitely many generator pairs
//    plus interval analysis against each parametric piece (instances of one
//    piece form a chain, so their mutual intersections stay inside).
// For the whole space the flags are fixed by construction: its infimum has
// zero entries and is not a member, yet every member contains it, and
// pairwise intersections of nice patterns are nice.
inline OpenConditions eval_open_conditions_symbolic(
    const SymbolicOpenFamily& U) {
  if (U.whole_space) {
    if (U.n < 2)
      throw UnsupportedDescriptor("whole-space descriptor needs n >= 2");
    return OpenConditions{false, false, true, true, true, true};
  }
  if (U.generators.empty() && U.pieces.empty())
    throw EmptyFamily("described open set has no pieces");
  if (U.pieces.size() > 1)
    throw UnsupportedDescriptor("at most one parametric piece is supported");
  for (const ParamPatternFamily& piece : U.pieces)
    if (piece.values.a == Rat{0})
      throw UnsupportedDescriptor(
          "constant parametric piece; list its single ring as a generator");

  OpenConditions out;
  PatternRing inf = infimum_of_open(U);
  bool inf_member = member_of(U, inf);
  out.a = inf_member;
  out.b = inf_member;
  out.c = inf_member;
  out.d = inf_member;

  out.e = true;
  for (std::size_t i = 0; i < U.generators.size() && out.e; ++i)
    for (std::size_t j = i + 1; j < U.generators.size() && out.e; ++j)
      out.e = member_of(
          U, intersect_rings(U.generators[i], U.generators[j]));
  for (const ParamPatternFamily& piece : U.pieces)
    for (const PatternRing& G : U.generators) {
      if (!out.e) break;
      out.e = detail::intersections_with_piece_stay_inside(U, G, piece);
    }

  int minimal = 0;
  for (std::size_t i = 0; i < U.generators.size(); ++i) {
    const PatternRing& G = U.generators[i];
    bool with_gen_below = false;
    for (std::size_t j = 0; j < U.generators.size(); ++j)
      if (j != i && contains(G, U.generators[j]) && U.generators[j] != G)
        with_gen_below = true;
    bool with_instance_below = false;
    for (const ParamPatternFamily& piece : U.pieces)
      if (detail::contains_some_instance(piece, G))
        with_instance_below = true;
    if (!with_gen_below && !with_instance_below) ++minimal;
  }
  out.f = minimal <= 1;
  return out;
}

// --- Named constructions over the two-by-two and chain models ---

// U = union of the basic opens of R_r for r in (0, r0), where R_r has O_v on
// the diagonal, Cut(r, Closed) above it, and the fixed ideal J1 below it.
// A chain shrinking toward the missing floor R_{r0}.
inline SymbolicOpenFamily shrinking_chain_family(const Rat& r0,
                                                 const CutIdeal& J1) {
  if (r0 <= 0) throw InvalidParameter("interval bound must be positive");
  if (!is_nonzero_ov_ideal(J1))
    throw InvalidParameter("lower-left entry must be a nonzero integral ideal");
  PatternRing shape = PatternRing::filled(2, ov());
  shape.entries[1][0] = J1;
  SymbolicOpenFamily U;
  U.n = 2;
  U.pieces.push_back(ParamPatternFamily{
      std::move(shape), 0, 1,
      ParamIdealFamily{Rat{0}, r0, Rat{1}, Rat{0}, Bound::Closed}});
  return U;
}

// The same chain with one extra basic open V(R') glued in, where R' closes
// the sweep at Cut(r0, Closed) but strictly enlarges the lower-left ideal.
// R' becomes the unique minimal member while pairwise-intersection closure
// breaks: R' ∩ R_r falls outside.
inline SymbolicOpenFamily shrinking_chain_with_floor(const Rat& r0,
                                                     const CutIdeal& J1,
                                                     const CutIdeal& J2) {
  if (!is_nonzero_ov_ideal(J2))
    throw InvalidParameter("floor's lower-left entry must be a nonzero integral ideal");
  if (!contains(J2, J1) || J2 == J1)
    throw InvalidParameter("floor must strictly enlarge the lower-left ideal");
  SymbolicOpenFamily U = shrinking_chain_family(r0, J1);
  PatternRing floor = PatternRing::filled(2, ov());
  floor.entries[0][1] = CutIdeal::make_cut(r0, Bound::Closed);
  floor.entries[1][0] = J2;
  U.generators.push_back(std::move(floor));
  return U;
}

// Strictly ascending chain R_1 ⊂ ... ⊂ R_K of nice patterns: all entries
// O_v except the last column above the diagonal, which holds Cut(1/k,
// Closed) -- a strictly ascending ideal chain witnessing non-Noetherianity.
inline std::vector<PatternRing> ascending_nice_chain(int n, int K) {
  if (n < 2) throw InvalidParameter("chain patterns need size at least 2");
  if (K < 1) throw InvalidParameter("chain depth must be positive");
  std::vector<PatternRing> chain;
  chain.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    PatternRing P = PatternRing::filled(n, ov());
    for (int i = 0; i + 1 < n; ++i)
      P.entries[i][n - 1] = CutIdeal::make_cut(Rat{1, k}, Bound::Closed);
    chain.push_back(std::move(P));
  }
  return chain;
}

// The least cut containing every last-column ideal Cut(1/k, Closed) of the
// full infinite chain: values above 0, not including 0. No single chain
// member reaches it, which is the exact reason no member contains all
// members.
inline CutIdeal ascending_chain_union_bound() {
  return CutIdeal::make_cut(Rat{0}, Bound::Open);
}

// The whole member space as a described open set; its infimum computation
// needs at least two rows to have an off-diagonal slot that forces zero.
inline SymbolicOpenFamily whole_member_space(int n) {
  if (n < 2) throw InvalidParameter("whole-space descriptor needs n >= 2");
  SymbolicOpenFamily U;
  U.n = n;
  U.whole_space = true;
  return U;
}

}  // namespace nicetop

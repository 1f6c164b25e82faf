#pragma once
// The condition ladders: six conditions for an open set and six for a
// closed set of a member-space model, the implication chains between them,
// and the machinery that verifies those chains exhaustively on finite
// models and via symbolic certificates where finite models provably cannot
// witness a failure.
//
// Open and closed ladders quantify over intersections and suprema of
// members, so they run on family models (where pairwise intersections are
// members by construction). The greatest-element equivalences, component
// structure, and the greatest-vs-all-opens characterization are pure order
// statements and run on any finite model.

#include <string>
#include <vector>

#include "nicetop/alexandroff.hpp"
#include "nicetop/order_core.hpp"
#include "nicetop/pattern_rings.hpp"

namespace nicetop {

struct OpenLadder {
  bool a = false;  // U is V(R0) for some member R0
  bool b = false;  // closed under arbitrary nonempty member intersection
  bool c = false;  // V(intersection of U) = U
  bool d = false;  // V(intersection of U) ⊆ U
  bool e = false;  // closed under pairwise intersection
  bool f = false;  // at most one minimal element
  bool vacuous = false;  // U empty; excluded from implication assertions
};

struct ClosedLadder {
  bool a = false;  // C is the closure of a single member
  bool b = false;  // every nonempty subset of C has a supremum lying in C
  bool c = false;  // sup C exists and its closure equals C
  bool d = false;  // sup C exists and its closure is inside C
  bool e = false;  // pairwise suprema exist and stay in C
  bool f = false;  // at most one maximal element
  bool vacuous = false;
};

struct ImplicationViolation {
  std::string model;
  std::string set;
  std::string rule;
};

struct LadderReport {
  std::string model;
  long long checked = 0;
  std::vector<ImplicationViolation> violations;
};

inline OpenLadder eval_open_ladder(const FamilySpace& S, Mask U) {
  if (!is_open_set(S, U)) throw NotOpen("set is not an upper set");
  if (U == 0) return OpenLadder{false, true, false, true, true, true, true};
  OpenLadder L;
  const NiceFamily& F = S.family;

  Mask ground_inter = full_mask(F.ground);
  for_bits(U, [&](int i) { ground_inter &= F.members[i]; });

  for (int j = 0; j < S.size() && !L.a; ++j)
    L.a = v_of(S, F.members[j]) == U;

  L.b = true;
  std::vector<int> idx = bits_of(U);
  for (Mask h = 1; h < bit(static_cast<int>(idx.size())); ++h) {
    Mask m = full_mask(F.ground);
    for_bits(h, [&](int p) { m &= F.members[idx[p]]; });
    int mi = member_index(F, m);
    if (mi < 0 || !has(U, mi)) {
      L.b = false;
      break;
    }
  }

  Mask v_inter = v_of(S, ground_inter);
  L.c = v_inter == U;
  L.d = subset_of(v_inter, U);

  L.e = true;
  for (std::size_t p = 0; p < idx.size() && L.e; ++p)
    for (std::size_t q = p + 1; q < idx.size() && L.e; ++q) {
      int mi = member_index(F, F.members[idx[p]] & F.members[idx[q]]);
      L.e = mi >= 0 && has(U, mi);
    }

  L.f = popcount(minimal_elements(S.order, U)) <= 1;
  return L;
}

inline ClosedLadder eval_closed_ladder(const FamilySpace& S, Mask C) {
  if (!is_closed_set(S, C)) throw NotClosed("set is not a lower set");
  if (C == 0) return ClosedLadder{false, true, false, false, true, true, true};
  ClosedLadder L;

  for (int j = 0; j < S.size() && !L.a; ++j)
    L.a = closure_point(S, j) == C;

  L.b = true;
  std::vector<int> idx = bits_of(C);
  for (Mask h = 1; h < bit(static_cast<int>(idx.size())); ++h) {
    Mask sub = 0;
    for_bits(h, [&](int p) { sub |= bit(idx[p]); });
    auto s = sup(S.order, sub);
    if (!s || !has(C, *s)) {
      L.b = false;
      break;
    }
  }

  auto top = sup(S.order, C);
  L.c = top && closure_point(S, *top) == C;
  L.d = top && subset_of(closure_point(S, *top), C);

  L.e = true;
  for (std::size_t p = 0; p < idx.size() && L.e; ++p)
    for (std::size_t q = p + 1; q < idx.size() && L.e; ++q) {
      auto s = sup(S.order, bit(idx[p]) | bit(idx[q]));
      L.e = s && has(C, *s);
    }

  L.f = popcount(maximal_elements(S.order, C)) <= 1;
  return L;
}

// Six characterizations of a nonempty open set having a greatest element,
// each evaluated independently so their equivalence is a real check rather
// than a restatement.
struct GreatestEquivalents {
  bool a = false;  // U has a greatest element
  bool b = false;  // cl U is the closure of a single point of the model
  bool c = false;  // U has exactly one maximal element
  bool d = false;  // U is irreducible
  bool e = false;  // pairwise sups of U exist and lie in U
  bool f = false;  // every nonempty subset of U has a supremum in the model
};

inline GreatestEquivalents eval_greatest_equivalents(const FinitePoset& P,
                                                     Mask U) {
  if (U == 0) throw InvalidParameter("needs a nonempty set");
  GreatestEquivalents G;
  PosetSpace sp{P};

  G.a = false;
  for_bits(U, [&](int g) {
    if (subset_of(U, P.down_of(g))) G.a = true;
  });

  Mask cl = closure_set(sp, U);
  for (int x = 0; x < P.n && !G.b; ++x) G.b = closure_point(sp, x) == cl;

  G.c = popcount(maximal_elements(P, U)) == 1;

  G.d = is_irreducible(sp, U).irreducible;

  G.e = true;
  std::vector<int> idx = bits_of(U);
  for (std::size_t p = 0; p < idx.size() && G.e; ++p)
    for (std::size_t q = p; q < idx.size() && G.e; ++q) {
      auto s = sup(P, bit(idx[p]) | bit(idx[q]));
      G.e = s && has(U, *s);
    }

  G.f = true;
  for (Mask h = 1; h < bit(static_cast<int>(idx.size())) && G.f; ++h) {
    Mask sub = 0;
    for_bits(h, [&](int p) { sub |= bit(idx[p]); });
    G.f = sup(P, sub).has_value();
  }
  return G;
}

// Bounds-iff-extrema law for one nonempty subset: a lower bound exists iff
// the infimum does, and dually for upper bounds.
inline bool check_bounds_iff_extrema(const FinitePoset& P, Mask H) {
  if (H == 0) throw InvalidParameter("needs a nonempty set");
  Mask lbs = full_mask(P.n), ubs = full_mask(P.n);
  for_bits(H, [&](int x) {
    lbs &= P.down_of(x);
    ubs &= P.up[x];
  });
  bool lb_iff_inf = (lbs != 0) == inf(P, H).has_value();
  bool ub_iff_sup = (ubs != 0) == sup(P, H).has_value();
  return lb_iff_inf && ub_iff_sup;
}

// Components really are the closures of maximal points: recompute them the
// slow definitional way (maximal elements among all closed irreducible
// sets) and compare.
template <SpaceModel M>
bool components_are_maximal_closures(const M& m) {
  if (m.size() > 16) throw CapExceeded("component sweep", m.size(), 16);
  std::vector<Mask> irr;
  for (Mask C = 1; C <= all_points(m); ++C)
    if (is_closed_set(m, C) && is_irreducible(m, C).irreducible)
      irr.push_back(C);
  std::vector<Mask> maximal;
  for (Mask C : irr) {
    bool top = true;
    for (Mask D : irr)
      if (D != C && subset_of(C, D)) top = false;
    if (top) maximal.push_back(C);
  }
  std::vector<Mask> fast = irreducible_components(m);
  std::sort(maximal.begin(), maximal.end());
  std::sort(fast.begin(), fast.end());
  return maximal == fast;
}

// A greatest element exists iff the intersection of all nonempty opens is
// exactly that singleton; checked in both directions.
template <SpaceModel M>
bool greatest_iff_opens_intersect_to_it(const M& m) {
  if (m.size() > 16) throw CapExceeded("opens sweep", m.size(), 16);
  Mask inter = all_points(m);
  for (Mask U = 1; U <= all_points(m); ++U)
    if (is_open_set(m, U)) inter &= U;
  std::optional<int> greatest;
  for (int g = 0; g < m.size() && !greatest; ++g) {
    bool top = true;
    for (int x = 0; x < m.size(); ++x)
      if (!m.leq(x, g)) top = false;
    if (top) greatest = g;
  }
  if (greatest) return inter == bit(*greatest);
  return popcount(inter) != 1;
}

namespace detail {

inline void note(LadderReport& rep, const std::string& set,
                 const std::string& rule, bool ok) {
  if (!ok) rep.violations.push_back({rep.model, set, rule});
}

}  // namespace detail

// Exhaustive law check on one family model: both ladders' implication
// chains on every open/closed set, bounds-iff-extrema on every nonempty
// subset, the greatest-element equivalences on every nonempty open, the
// component characterization, and the all-opens-intersection law.
inline LadderReport verify_ladders(const FamilySpace& S) {
  LadderReport rep;
  rep.model = "family ground=" + std::to_string(S.family.ground) +
              " members=" + std::to_string(S.size());
  const Mask all = all_points(S);

  for (Mask X = 0; X <= all; ++X) {
    if (is_open_set(S, X)) {
      OpenLadder L = eval_open_ladder(S, X);
      ++rep.checked;
      if (!L.vacuous) {
        std::string s = "open " + show_mask(X);
        detail::note(rep, s, "a iff b", L.a == L.b);
        detail::note(rep, s, "b implies c", !L.b || L.c);
        detail::note(rep, s, "c iff d", L.c == L.d);
        detail::note(rep, s, "d implies e", !L.d || L.e);
        detail::note(rep, s, "e implies f", !L.e || L.f);
      }
      if (X != 0) {
        GreatestEquivalents G = eval_greatest_equivalents(S.order, X);
        ++rep.checked;
        bool all_equal = G.a == G.b && G.b == G.c && G.c == G.d &&
                         G.d == G.e && G.e == G.f;
        detail::note(rep, "open " + show_mask(X),
                     "greatest-element equivalences", all_equal);
      }
    }
    if (is_closed_set(S, X)) {
      ClosedLadder L = eval_closed_ladder(S, X);
      ++rep.checked;
      if (!L.vacuous) {
        std::string s = "closed " + show_mask(X);
        detail::note(rep, s, "a iff b", L.a == L.b);
        detail::note(rep, s, "b iff c", L.b == L.c);
        detail::note(rep, s, "c iff d", L.c == L.d);
        detail::note(rep, s, "d implies e", !L.d || L.e);
        detail::note(rep, s, "e implies f", !L.e || L.f);
        if (L.e) {
          bool ideal = is_ideal(S.order, X);
          bool infs_inside = true;
          std::vector<int> idx = bits_of(X);
          for (std::size_t p = 0; p < idx.size() && infs_inside; ++p)
            for (std::size_t q = p; q < idx.size() && infs_inside; ++q) {
              auto g = inf(S.order, bit(idx[p]) | bit(idx[q]));
              infs_inside = g && has(X, *g);
            }
          detail::note(rep, s, "pairwise-sup closed set is an ideal", ideal);
          detail::note(rep, s, "pairwise-sup closed set is a sublattice",
                       infs_inside);
        }
      }
    }
    if (X != 0) {
      ++rep.checked;
      detail::note(rep, "subset " + show_mask(X), "bounds iff extrema",
                   check_bounds_iff_extrema(S.order, X));
    }
  }

  ++rep.checked;
  detail::note(rep, "whole model", "components are maximal closures",
               components_are_maximal_closures(S));
  ++rep.checked;
  detail::note(rep, "whole model", "greatest iff opens intersect to it",
               greatest_iff_opens_intersect_to_it(S));
  return rep;
}

// Order-law check on one plain poset model: components and the all-opens
// law, plus the first four greatest-element conditions. The sup-existence
// conditions (e) and (f) join the equivalence only over member spaces,
// where bounded sets have suprema because upper bounds intersect to one;
// an arbitrary poset can have a greatest element above a sup-free pair.
inline LadderReport verify_poset_laws(const FinitePoset& P) {
  LadderReport rep;
  rep.model = "poset n=" + std::to_string(P.n);
  PosetSpace sp{P};
  for (Mask U = 1; U <= full_mask(P.n); ++U) {
    if (!is_open_set(sp, U)) continue;
    GreatestEquivalents G = eval_greatest_equivalents(P, U);
    ++rep.checked;
    bool four_equal = G.a == G.b && G.b == G.c && G.c == G.d;
    detail::note(rep, "open " + show_mask(U),
                 "greatest-element equivalences (order part)", four_equal);
  }
  ++rep.checked;
  detail::note(rep, "whole model", "components are maximal closures",
               components_are_maximal_closures(sp));
  ++rep.checked;
  detail::note(rep, "whole model", "greatest iff opens intersect to it",
               greatest_iff_opens_intersect_to_it(sp));
  return rep;
}

struct CollapseReport {
  int families = 0;
  long long opens_checked = 0;
  // Reversal witnesses found at finite scale; all must stay false, which is
  // what forces the reversal certificates to be symbolic.
  bool e_without_d = false;
  bool f_without_e = false;
  bool c_without_b = false;
  bool f_without_a = false;
};

inline CollapseReport finite_collapse_facts(int ground, int max_members) {
  CollapseReport rep;
  for (const NiceFamily& F : enumerate_nice_families(ground, max_members)) {
    FamilySpace S{F};
    ++rep.families;
    for (Mask U = 1; U <= all_points(S); ++U) {
      if (!is_open_set(S, U)) continue;
      OpenLadder L = eval_open_ladder(S, U);
      ++rep.opens_checked;
      rep.e_without_d = rep.e_without_d || (L.e && !L.d);
      rep.f_without_e = rep.f_without_e || (L.f && !L.e);
      rep.c_without_b = rep.c_without_b || (L.c && !L.b);
      rep.f_without_a = rep.f_without_a || (L.f && !L.a);
    }
  }
  return rep;
}

struct ReversalCertificate {
  std::string implication;
  std::string family;
  OpenConditions flags;
  bool verified = false;
};

// The three one-way implications, witnessed symbolically: each certificate
// re-derives the claimed flag pattern through the exact evaluator and
// re-checks the crux fact directly.
inline std::vector<ReversalCertificate> search_reversals() {
  std::vector<ReversalCertificate> out;

  {
    SymbolicOpenFamily U = shrinking_chain_family(
        Rat{1}, CutIdeal::make_cut(Rat{2}, Bound::Closed));
    OpenConditions c = eval_open_conditions_symbolic(U);
    ReversalCertificate cert;
    cert.implication = "(e) without (d)";
    cert.family = "shrinking chain, interval (0,1)";
    cert.flags = c;
    cert.verified = c.e && !c.d && !member_of(U, infimum_of_open(U));
    out.push_back(cert);
  }
  {
    SymbolicOpenFamily U = shrinking_chain_with_floor(
        Rat{1}, CutIdeal::make_cut(Rat{2}, Bound::Closed),
        CutIdeal::make_cut(Rat{1}, Bound::Closed));
    OpenConditions c = eval_open_conditions_symbolic(U);
    PatternRing escape = intersect_rings(
        U.generators.at(0), instance_at_value(U.pieces.at(0), Rat{1, 2}));
    ReversalCertificate cert;
    cert.implication = "(f) without (e)";
    cert.family = "shrinking chain with floor, interval (0,1)";
    cert.flags = c;
    cert.verified = c.f && !c.e && !member_of(U, escape) &&
                    check_pattern(escape).all_ok();
    out.push_back(cert);
  }
  {
    SymbolicOpenFamily U = whole_member_space(2);
    OpenConditions c = eval_open_conditions_symbolic(U);
    PatternRing inf = infimum_of_open(U);
    ReversalCertificate cert;
    cert.implication = "(c) without (b)";
    cert.family = "whole member space, n=2";
    cert.flags = c;
    cert.verified = c.c && !c.b && !member_of(U, inf) &&
                    !check_pattern(inf).s_nice;
    out.push_back(cert);
  }
  return out;
}

}  // namespace nicetop

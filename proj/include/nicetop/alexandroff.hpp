#pragma once
// Order <-> topology dictionary. Opens are upper sets of a preorder; every
// point has a minimal open neighborhood; closures are down-sets. Generic
// algorithms run over any SpaceModel (a finite point universe with a
// specialization order); the two concrete models wrap FinitePoset and
// NiceFamily.

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "nicetop/order_core.hpp"

namespace nicetop {

struct NotT0 : Error {
  int x, y;
  NotT0(int x_, int y_)
      : Error("points " + std::to_string(x_) + " and " + std::to_string(y_) +
              " are indistinguishable by opens"),
        x(x_),
        y(y_) {}
};

struct NotClosed : Error {
  using Error::Error;
};

struct NotOpen : Error {
  using Error::Error;
};

struct InvalidTopology : Error {
  using Error::Error;
};

// A finite Alexandroff topology, stored as the minimal-open map. The open
// sets are exactly the unions of minimal opens.
struct AlexTopology {
  int n = 0;
  std::vector<Mask> min_open;  // min_open[x] = U_x, smallest open containing x
  bool operator==(const AlexTopology&) const = default;
};

inline AlexTopology topology_from_order(const FinitePoset& P) {
  return AlexTopology{P.n, P.up};
}

inline bool is_open(const AlexTopology& T, Mask S) {
  bool ok = true;
  for_bits(S, [&](int x) { ok = ok && subset_of(T.min_open[x], S); });
  return ok;
}

// Builds the minimal-open map from an explicit list of opens, validating the
// topology axioms (finite case: pairwise union/intersection closure).
inline AlexTopology from_opens(int n, const std::vector<Mask>& opens) {
  if (n < 1) throw InvalidParameter("space must be nonempty");
  if (n > 20) throw InvalidParameter("space too large");
  std::vector<Mask> os = opens;
  std::sort(os.begin(), os.end());
  os.erase(std::unique(os.begin(), os.end()), os.end());
  auto present = [&](Mask m) {
    return std::binary_search(os.begin(), os.end(), m);
  };
  for (Mask o : os)
    if (!subset_of(o, full_mask(n)))
      throw InvalidTopology("open set exceeds point universe");
  if (!present(0)) throw InvalidTopology("empty set missing");
  if (!present(full_mask(n))) throw InvalidTopology("full set missing");
  for (std::size_t i = 0; i < os.size(); ++i)
    for (std::size_t j = i + 1; j < os.size(); ++j) {
      if (!present(os[i] | os[j])) throw InvalidTopology("union escapes");
      if (!present(os[i] & os[j])) throw InvalidTopology("intersection escapes");
    }
  AlexTopology T;
  T.n = n;
  T.min_open.assign(n, full_mask(n));
  for (int x = 0; x < n; ++x)
    for (Mask o : os)
      if (has(o, x)) T.min_open[x] &= o;
  return T;
}

// x <= y iff x lies in the closure of {y}, i.e. y is in every open around x.
inline FinitePoset specialization_order(const AlexTopology& T) {
  for (int x = 0; x < T.n; ++x)
    for (int y = x + 1; y < T.n; ++y)
      if (T.min_open[x] == T.min_open[y]) throw NotT0(x, y);
  std::vector<std::vector<bool>> rel(T.n, std::vector<bool>(T.n));
  for (int x = 0; x < T.n; ++x)
    for (int y = 0; y < T.n; ++y) rel[x][y] = has(T.min_open[x], y);
  return validate_poset(rel);
}

// All opens of T; exponential sweep, for small verification universes only.
inline std::vector<Mask> all_opens(const AlexTopology& T) {
  if (T.n > 16) throw CapExceeded("all_opens sweep", T.n, 16);
  std::vector<Mask> out;
  for (Mask S = 0; S <= full_mask(T.n); ++S)
    if (is_open(T, S)) out.push_back(S);
  return out;
}

// Every topology on up to 4 labeled points, by filtering all collections of
// subsets for the axioms. Independent of the poset enumerator on purpose:
// this is the oracle side of the round-trip check.
inline std::vector<AlexTopology> enumerate_topologies(int n,
                                                      bool t0_only = false) {
  if (n < 1) throw InvalidParameter("space must be nonempty");
  if (n > 4) throw CapExceeded("enumerate_topologies", n, 4);
  const int masks = 1 << n;
  std::vector<AlexTopology> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << masks); ++c) {
    if (!(c & 1)) continue;                          // empty set
    if (!(c >> (masks - 1) & 1)) continue;           // full set
    std::vector<Mask> opens;
    for (int m = 0; m < masks; ++m)
      if (c >> m & 1) opens.push_back(static_cast<Mask>(m));
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
        closed = (c >> (opens[i] | opens[j]) & 1) &&
                 (c >> (opens[i] & opens[j]) & 1);
    if (!closed) continue;
    AlexTopology T = from_opens(n, opens);
    if (t0_only) {
      bool t0 = true;
      for (int x = 0; x < n && t0; ++x)
        for (int y = x + 1; y < n && t0; ++y)
          t0 = T.min_open[x] != T.min_open[y];
      if (!t0) continue;
    }
    out.push_back(std::move(T));
  }
  return out;
}

// A SpaceModel is a finite point universe carrying its specialization order.
template <class M>
concept SpaceModel = requires(const M& m, int x, int y) {
  { m.size() } -> std::convertible_to<int>;
  { m.leq(x, y) } -> std::convertible_to<bool>;
};

struct PosetSpace {
  FinitePoset order;
  int size() const { return order.n; }
  bool leq(int x, int y) const { return order.leq(x, y); }
};

// The finite stand-in for the space of S-nice subalgebras: points are family
// members, the order is inclusion.
struct FamilySpace {
  NiceFamily family;
  FinitePoset order;
  explicit FamilySpace(NiceFamily F)
      : family(std::move(F)), order(inclusion_order(family)) {}
  int size() const { return order.n; }
  bool leq(int x, int y) const { return order.leq(x, y); }
};

template <SpaceModel M>
Mask all_points(const M& m) {
  return full_mask(m.size());
}

template <SpaceModel M>
Mask minimal_open(const M& m, int x) {
  Mask r = 0;
  for (int y = 0; y < m.size(); ++y)
    if (m.leq(x, y)) r |= bit(y);
  return r;
}

template <SpaceModel M>
Mask closure_point(const M& m, int x) {
  Mask r = 0;
  for (int y = 0; y < m.size(); ++y)
    if (m.leq(y, x)) r |= bit(y);
  return r;
}

template <SpaceModel M>
Mask closure_set(const M& m, Mask X) {
  Mask r = 0;
  for_bits(X, [&](int x) { r |= closure_point(m, x); });
  return r;
}

template <SpaceModel M>
bool is_closed_set(const M& m, Mask X) {
  return closure_set(m, X) == X;
}

template <SpaceModel M>
bool is_open_set(const M& m, Mask X) {
  Mask r = 0;
  for_bits(X, [&](int x) { r |= minimal_open(m, x); });
  return r == X;
}

// Members of the family containing the ground subset M. This is the basic
// open V(M); for a member R, v_of(R) is its minimal open neighborhood.
inline Mask v_of(const FamilySpace& S, Mask M) {
  if (!subset_of(M, full_mask(S.family.ground)))
    throw InvalidParameter("V argument exceeds ground set");
  Mask r = 0;
  for (int i = 0; i < S.size(); ++i)
    if (subset_of(M, S.family.members[i])) r |= bit(i);
  return r;
}

struct IrreducibilityResult {
  bool irreducible = false;
  // For a negative verdict: a pair with no upper bound inside the set. The
  // complements of the two principal up-sets are the closed cover splitting
  // the set.
  std::optional<std::pair<int, int>> witness;
};

// Directedness form: in an Alexandroff space a nonempty set is irreducible
// exactly when every two of its points share an upper bound inside the set.
template <SpaceModel M>
IrreducibilityResult is_irreducible(const M& m, Mask X) {
  if (X == 0) return {false, std::nullopt};
  auto xs = bits_of(X);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      bool bounded = false;
      for_bits(X, [&](int c) {
        bounded = bounded || (m.leq(xs[i], c) && m.leq(xs[j], c));
      });
      if (!bounded) return {false, std::make_pair(xs[i], xs[j])};
    }
  return {true, std::nullopt};
}

// Definitional form, used to cross-check the directedness form: X is
// irreducible iff no pair of closed sets covers X without one of them
// containing it. Candidate closeds are the complements of principal up-sets
// (the shape used in the union-of-members proof); tiny universes get the
// exhaustive closed-pair sweep on top.
template <SpaceModel M>
bool is_irreducible_by_covers(const M& m, Mask X) {
  if (X == 0) return false;
  const Mask all = all_points(m);
  auto splits = [&](Mask g1, Mask g2) {
    return subset_of(X, g1 | g2) && !subset_of(X, g1) && !subset_of(X, g2);
  };
  auto xs = bits_of(X);
  for (int a : xs)
    for (int b : xs) {
      Mask g1 = all & ~minimal_open(m, a);
      Mask g2 = all & ~minimal_open(m, b);
      if (splits(g1, g2)) return false;
    }
  if (m.size() <= 5) {
    std::vector<Mask> closeds;
    for (Mask C = 0; C <= all; ++C)
      if (is_closed_set(m, C)) closeds.push_back(C);
    for (Mask g1 : closeds)
      for (Mask g2 : closeds)
        if (splits(g1, g2)) return false;
  }
  return true;
}

// Closures of maximal points; pairwise incomparable, and they cover the
// space.
template <SpaceModel M>
std::vector<Mask> irreducible_components(const M& m) {
  Mask maxs = 0;
  for (int x = 0; x < m.size(); ++x) {
    bool is_max = true;
    for (int y = 0; y < m.size(); ++y)
      if (y != x && m.leq(x, y)) is_max = false;
    if (is_max) maxs |= bit(x);
  }
  std::vector<Mask> out;
  for_bits(maxs, [&](int x) { out.push_back(closure_point(m, x)); });
  return out;
}

// The unique point whose closure is C, when C has one; C must be closed.
template <SpaceModel M>
std::optional<int> generic_point(const M& m, Mask C) {
  if (!is_closed_set(m, C)) throw NotClosed("generic_point needs a closed set");
  std::optional<int> g;
  for_bits(C, [&](int x) {
    if (!g && closure_point(m, x) == C) g = x;
  });
  return g;
}

// Exhaustive sobriety check: every irreducible closed set has a generic
// point. Finite T0 Alexandroff spaces always pass; the check is still run
// honestly rather than short-circuited.
template <SpaceModel M>
bool is_sober(const M& m) {
  if (m.size() > 16) throw CapExceeded("is_sober sweep", m.size(), 16);
  for (Mask C = 1; C <= all_points(m); ++C) {
    if (!is_closed_set(m, C)) continue;
    if (!is_irreducible(m, C).irreducible) continue;
    if (!generic_point(m, C)) return false;
  }
  return true;
}

}  // namespace nicetop

#pragma once
// Finite posets and intersection-closed set families, with the usual order
// predicates (chains, directedness, bounds, semilattices) and enumeration of
// small instances up to isomorphism. Elements are positional indices; subsets
// are Masks.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "nicetop/base.hpp"

namespace nicetop {

struct ReflexivityViolation : Error {
  int x;
  explicit ReflexivityViolation(int x_)
      : Error("relation not reflexive at element " + std::to_string(x_)),
        x(x_) {}
};

struct AntisymmetryViolation : Error {
  int x, y;
  AntisymmetryViolation(int x_, int y_)
      : Error("antisymmetry fails on pair (" + std::to_string(x_) + "," +
              std::to_string(y_) + ")"),
        x(x_),
        y(y_) {}
};

struct TransitivityViolation : Error {
  int x, z;
  TransitivityViolation(int x_, int z_)
      : Error("transitivity fails: missing " + std::to_string(x_) +
              " <= " + std::to_string(z_)),
        x(x_),
        z(z_) {}
};

struct FinitePoset {
  int n = 0;
  std::vector<Mask> up;  // up[x] = { y : x <= y }, always contains x

  bool leq(int x, int y) const { return has(up[x], y); }
  Mask up_of(int x) const { return up[x]; }
  Mask down_of(int x) const {
    Mask d = 0;
    for (int y = 0; y < n; ++y)
      if (leq(y, x)) d |= bit(y);
    return d;
  }
  bool operator==(const FinitePoset&) const = default;
};

inline FinitePoset validate_poset(const std::vector<std::vector<bool>>& rel) {
  const int n = static_cast<int>(rel.size());
  if (n == 0) throw InvalidParameter("empty relation");
  if (n > 64) throw InvalidParameter("relation too large for Mask");
  for (const auto& row : rel)
    if (static_cast<int>(row.size()) != n)
      throw InvalidParameter("relation not square");
  for (int x = 0; x < n; ++x)
    if (!rel[x][x]) throw ReflexivityViolation(x);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rel[x][y] && rel[y][x]) throw AntisymmetryViolation(x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rel[x][y]) continue;
      for (int z = 0; z < n; ++z)
        if (rel[y][z] && !rel[x][z]) throw TransitivityViolation(x, z);
    }
  FinitePoset P;
  P.n = n;
  P.up.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel[x][y]) P.up[x] |= bit(y);
  return P;
}

// Smallest upper set containing X.
inline Mask up_set(const FinitePoset& P, Mask X) {
  Mask r = 0;
  for_bits(X, [&](int x) { r |= P.up[x]; });
  return r;
}

// Smallest lower set containing X.
inline Mask down_set(const FinitePoset& P, Mask X) {
  Mask r = 0;
  for (int x = 0; x < P.n; ++x)
    if (P.up[x] & X) r |= bit(x);
  return r;
}

inline bool is_upper_set(const FinitePoset& P, Mask X) {
  return up_set(P, X) == X;
}
inline bool is_lower_set(const FinitePoset& P, Mask X) {
  return down_set(P, X) == X;
}

inline Mask maximal_elements(const FinitePoset& P, Mask X) {
  Mask r = 0;
  for_bits(X, [&](int x) {
    if ((P.up[x] & X) == bit(x)) r |= bit(x);
  });
  return r;
}

inline Mask minimal_elements(const FinitePoset& P, Mask X) {
  Mask r = 0;
  for_bits(X, [&](int x) {
    if ((P.down_of(x) & X) == bit(x)) r |= bit(x);
  });
  return r;
}

inline bool is_chain(const FinitePoset& P, Mask X) {
  auto xs = bits_of(X);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!P.leq(xs[i], xs[j]) && !P.leq(xs[j], xs[i])) return false;
  return true;
}

// Directed sets are nonempty by definition.
inline bool is_directed(const FinitePoset& P, Mask X) {
  if (X == 0) return false;
  auto xs = bits_of(X);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j)
      if ((P.up[xs[i]] & P.up[xs[j]] & X) == 0) return false;
  return true;
}

inline bool is_ideal(const FinitePoset& P, Mask X) {
  return is_lower_set(P, X) && is_directed(P, X);
}

// Least upper bound when it exists. X may be empty: the bound set is then the
// whole poset and the result is its least element, if any.
inline std::optional<int> sup(const FinitePoset& P, Mask X) {
  Mask ub = full_mask(P.n);
  for_bits(X, [&](int x) { ub &= P.up[x]; });
  std::optional<int> least;
  for_bits(ub, [&](int c) {
    if (!least && subset_of(ub, P.up[c])) least = c;
  });
  return least;
}

inline std::optional<int> inf(const FinitePoset& P, Mask X) {
  Mask lb = full_mask(P.n);
  for_bits(X, [&](int x) { lb &= P.down_of(x); });
  std::optional<int> greatest;
  for_bits(lb, [&](int c) {
    if (!greatest && subset_of(lb, P.down_of(c))) greatest = c;
  });
  return greatest;
}

inline std::optional<int> greatest_element(const FinitePoset& P) {
  Mask m = maximal_elements(P, full_mask(P.n));
  if (popcount(m) != 1) return std::nullopt;
  int g = bits_of(m)[0];
  if (P.down_of(g) != full_mask(P.n)) return std::nullopt;
  return g;
}

inline std::optional<int> least_element(const FinitePoset& P) {
  Mask m = minimal_elements(P, full_mask(P.n));
  if (popcount(m) != 1) return std::nullopt;
  int l = bits_of(m)[0];
  if (P.up[l] != full_mask(P.n)) return std::nullopt;
  return l;
}

inline bool is_inf_semilattice(const FinitePoset& P) {
  for (int x = 0; x < P.n; ++x)
    for (int y = x + 1; y < P.n; ++y)
      if (!inf(P, bit(x) | bit(y))) return false;
  return true;
}

inline bool is_sup_semilattice(const FinitePoset& P) {
  for (int x = 0; x < P.n; ++x)
    for (int y = x + 1; y < P.n; ++y)
      if (!sup(P, bit(x) | bit(y))) return false;
  return true;
}

inline bool is_lattice(const FinitePoset& P) {
  return is_inf_semilattice(P) && is_sup_semilattice(P);
}

// Exhaustive over all directed subsets; P is finite, so this is decidable.
inline bool is_dcpo(const FinitePoset& P) {
  if (P.n > 20) throw CapExceeded("is_dcpo subset sweep", P.n, 20);
  for (Mask X = 1; X <= full_mask(P.n); ++X)
    if (is_directed(P, X) && !sup(P, X)) return false;
  return true;
}

// Lexicographically minimal row-major relation encoding over all relabelings.
// n <= 8 keeps the encoding inside 64 bits; enumeration caps are far lower.
inline std::uint64_t poset_key(const FinitePoset& P) {
  std::vector<int> perm(P.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t e = 0;
    int b = 0;
    for (int i = 0; i < P.n; ++i)
      for (int j = 0; j < P.n; ++j, ++b)
        if (P.leq(perm[i], perm[j])) e |= std::uint64_t{1} << b;
    best = std::min(best, e);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class, built level by level: every poset
// on k+1 elements is some poset on k elements plus a fresh maximal element
// sitting above a lower set.
inline std::vector<FinitePoset> enumerate_posets(int n, int cap = 6) {
  if (n < 1) throw InvalidParameter("poset size must be positive");
  if (n > cap) throw CapExceeded("enumerate_posets", n, cap);
  std::vector<FinitePoset> level{FinitePoset{1, {bit(0)}}};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<FinitePoset> next;
    for (const FinitePoset& P : level) {
      for (Mask L = 0; L <= full_mask(k); ++L) {
        if (!is_lower_set(P, L)) continue;
        FinitePoset Q;
        Q.n = k + 1;
        Q.up = P.up;
        for_bits(L, [&](int x) { Q.up[x] |= bit(k); });
        Q.up.push_back(bit(k));
        if (seen.insert(poset_key(Q)).second) next.push_back(Q);
      }
    }
    level = std::move(next);
  }
  return level;
}

struct NotIntersectionClosed : Error {
  Mask a, b;
  NotIntersectionClosed(Mask a_, Mask b_)
      : Error("family misses an intersection of two members"), a(a_), b(b_) {}
};

// Finite stand-in for the space of S-nice subalgebras: a collection of
// subsets of a ground set, closed under pairwise intersection, ordered by
// inclusion.
struct NiceFamily {
  int ground = 0;
  std::vector<Mask> members;  // strictly ascending as integers, hence distinct
  bool operator==(const NiceFamily&) const = default;
};

inline NiceFamily validate_family(int ground, std::vector<Mask> members) {
  if (ground < 0 || ground > 20) throw InvalidParameter("bad ground size");
  if (members.empty()) throw InvalidParameter("family must be nonempty");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidParameter("family members must be distinct");
  for (Mask m : members)
    if (!subset_of(m, full_mask(ground)))
      throw InvalidParameter("member exceeds ground set");
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Mask c = members[i] & members[j];
      if (!std::binary_search(members.begin(), members.end(), c))
        throw NotIntersectionClosed(members[i], members[j]);
    }
  return NiceFamily{ground, std::move(members)};
}

// Index of a member set, or -1.
inline int member_index(const NiceFamily& F, Mask m) {
  auto it = std::lower_bound(F.members.begin(), F.members.end(), m);
  if (it == F.members.end() || *it != m) return -1;
  return static_cast<int>(it - F.members.begin());
}

// Inclusion order on member indices.
inline FinitePoset inclusion_order(const NiceFamily& F) {
  const int k = static_cast<int>(F.members.size());
  FinitePoset P;
  P.n = k;
  P.up.assign(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (subset_of(F.members[i], F.members[j])) P.up[i] |= bit(j);
  return P;
}

inline std::vector<Mask> permuted_members(const NiceFamily& F,
                                          const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(F.members.size());
  for (Mask m : F.members) {
    Mask p = 0;
    for_bits(m, [&](int i) { p |= bit(perm[i]); });
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> family_key(const NiceFamily& F) {
  std::vector<int> perm(F.ground);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = F.members;
  do {
    std::vector<Mask> cand = permuted_members(F, perm);
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Pairwise-intersection closure of a set of masks.
inline std::vector<Mask> close_under_intersection(std::vector<Mask> ms) {
  std::set<Mask> s(ms.begin(), ms.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (s.insert(cur[i] & cur[j]).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// All intersection-closed families over `ground` with at most `max_members`
// members, one per orbit of the ground-set permutation action. Grown by
// adding one member at a time and re-closing; any closed family is reachable
// this way because dropping an inclusion-maximal member keeps it closed.
inline std::vector<NiceFamily> enumerate_nice_families(int ground,
                                                       int max_members,
                                                       int ground_cap = 5,
                                                       int members_cap = 8) {
  if (ground < 1) throw InvalidParameter("ground must be positive");
  if (ground > ground_cap)
    throw CapExceeded("enumerate_nice_families ground", ground, ground_cap);
  if (max_members < 1) throw InvalidParameter("max_members must be positive");
  if (max_members > members_cap)
    throw CapExceeded("enumerate_nice_families members", max_members,
                      members_cap);

  std::set<std::vector<Mask>> seen;
  std::vector<NiceFamily> out;
  std::vector<NiceFamily> frontier;
  auto admit = [&](std::vector<Mask> members) {
    NiceFamily F{ground, std::move(members)};
    std::sort(F.members.begin(), F.members.end());
    if (!seen.insert(family_key(F)).second) return;
    out.push_back(F);
    frontier.push_back(F);
  };
  for (Mask m = 0; m <= full_mask(ground); ++m) admit({m});
  while (!frontier.empty()) {
    std::vector<NiceFamily> batch = std::move(frontier);
    frontier.clear();
    for (const NiceFamily& F : batch) {
      if (static_cast<int>(F.members.size()) >= max_members) continue;
      for (Mask m = 0; m <= full_mask(ground); ++m) {
        if (std::binary_search(F.members.begin(), F.members.end(), m))
          continue;
        std::vector<Mask> grown = F.members;
        grown.push_back(m);
        grown = close_under_intersection(std::move(grown));
        if (static_cast<int>(grown.size()) <= max_members)
          admit(std::move(grown));
      }
    }
  }
  return out;
}

}  // namespace nicetop

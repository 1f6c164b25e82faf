#pragma once
// Executable model of prime covers: each member of a family carries the set
// of base primes its spectrum lies over, antitone in the member. A
// refinement oracle shrinks a member to cover one more prime; iterating it
// from a cofinitely-covering member reaches full cover ("lying over") in at
// most one step per missing prime. The module validates every oracle answer
// against its contract instead of trusting it.
//
// The non-existence conditions quantify over infinite descending chains, so
// finite models cannot realize them; lazily generated chain models verify
// the chain clauses to a configured depth and the reports say exactly which
// scale each claim was checked at.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nicetop/alexandroff.hpp"
#include "nicetop/order_core.hpp"

namespace nicetop {

struct UnknownMember : Error {
  using Error::Error;
};

struct AlreadyCovered : Error {
  using Error::Error;
};

struct OracleViolation : Error {
  using Error::Error;
};

struct EmptyClosedSet : Error {
  using Error::Error;
};

struct DepthExceeded : Error {
  using Error::Error;
};

struct SpectralModel {
  NiceFamily base;
  int primes = 0;
  std::vector<Mask> cover;  // cover[i] ⊆ full_mask(primes)
  // (model, member index, prime) -> member index strictly below, covering
  // the prime. Replaceable so contract enforcement can be tested.
  std::function<int(const SpectralModel&, int, int)> oracle;
};

// Intersection oracle: meet the member with any member that covers the
// prime; the meet is a member by intersection closure, strictly smaller
// (equality would mean the prime was covered already), and covers the
// union of both cover sets by antitonicity.
inline int default_refinement(const SpectralModel& M, int r1, int p) {
  for (std::size_t m = 0; m < M.base.members.size(); ++m)
    if (has(M.cover[m], p))
      return member_index(M.base,
                          M.base.members[static_cast<std::size_t>(r1)] &
                              M.base.members[m]);
  throw OracleViolation("no member covers prime " + std::to_string(p));
}

inline SpectralModel make_spectral_model(
    NiceFamily base, int primes, std::vector<Mask> cover,
    std::function<int(const SpectralModel&, int, int)> oracle = {}) {
  if (primes < 0 || primes > 20)
    throw InvalidParameter("prime count out of range");
  if (cover.size() != base.members.size())
    throw InvalidParameter("cover map size does not match member count");
  // validate_family sorts members; keep each cover glued to its member
  std::vector<std::pair<Mask, Mask>> paired;
  for (std::size_t i = 0; i < cover.size(); ++i)
    paired.emplace_back(base.members[i], cover[i]);
  std::sort(paired.begin(), paired.end());
  for (std::size_t i = 0; i < paired.size(); ++i) {
    base.members[i] = paired[i].first;
    cover[i] = paired[i].second;
  }
  base = validate_family(base.ground, base.members);
  for (Mask c : cover)
    if (!subset_of(c, full_mask(primes)))
      throw InvalidParameter("cover set exceeds the prime universe");
  for (std::size_t i = 0; i < base.members.size(); ++i)
    for (std::size_t j = 0; j < base.members.size(); ++j)
      if (subset_of(base.members[i], base.members[j]) &&
          !subset_of(cover[j], cover[i]))
        throw InvalidParameter("cover map is not antitone on members " +
                               std::to_string(i) + "," + std::to_string(j));
  SpectralModel M{std::move(base), primes, std::move(cover),
                  oracle ? std::move(oracle) : default_refinement};
  return M;
}

inline void require_member(const SpectralModel& M, int r) {
  if (r < 0 || r >= static_cast<int>(M.base.members.size()))
    throw UnknownMember("no member with index " + std::to_string(r));
}

inline bool satisfies_lo(const SpectralModel& M, int r) {
  require_member(M, r);
  return M.cover[static_cast<std::size_t>(r)] == full_mask(M.primes);
}

// One refinement step, with the oracle's answer checked against both
// contract clauses.
inline int refine(const SpectralModel& M, int r1, int p) {
  require_member(M, r1);
  if (p < 0 || p >= M.primes) throw InvalidParameter("prime out of range");
  if (has(M.cover[static_cast<std::size_t>(r1)], p))
    throw AlreadyCovered("prime " + std::to_string(p) + " already covered");
  int r = M.oracle(M, r1, p);
  require_member(M, r);
  Mask mr = M.base.members[static_cast<std::size_t>(r)];
  Mask m1 = M.base.members[static_cast<std::size_t>(r1)];
  if (!(subset_of(mr, m1) && mr != m1))
    throw OracleViolation("refined member is not strictly below the input");
  Mask want = M.cover[static_cast<std::size_t>(r1)] | bit(p);
  if (!subset_of(want, M.cover[static_cast<std::size_t>(r)]))
    throw OracleViolation("refined member does not cover the requested prime");
  return r;
}

struct LoResult {
  int member = -1;
  int steps = 0;
};

// Walks missing primes down to full cover; each step covers at least one
// missing prime, so the step count never exceeds the initial deficit.
inline LoResult lo_from_cofinite(const SpectralModel& M, int r1) {
  require_member(M, r1);
  LoResult res{r1, 0};
  while (!satisfies_lo(M, res.member)) {
    Mask missing =
        full_mask(M.primes) & ~M.cover[static_cast<std::size_t>(res.member)];
    int p = bits_of(missing).front();
    res.member = refine(M, res.member, p);
    ++res.steps;
    if (res.steps > M.primes)
      throw OracleViolation("refinement failed to terminate");
  }
  return res;
}

// A full-cover member inside a nonempty closed set, when the model has one
// anywhere: meet the witness with any element of the set. The meet is a
// member below an element of a lower set, hence in the set, and covers
// everything by antitonicity.
inline std::optional<int> closed_set_lo(const SpectralModel& M, Mask C) {
  if (C == 0) throw EmptyClosedSet("closed set has no members");
  FamilySpace S{M.base};
  if (!is_closed_set(S, C)) throw NotClosed("set is not a lower set");
  std::optional<int> global;
  for (int r = 0; r < S.size() && !global; ++r)
    if (satisfies_lo(M, r)) global = r;
  if (!global) return std::nullopt;
  int r2 = bits_of(C).front();
  int meet = member_index(M.base,
                          M.base.members[static_cast<std::size_t>(*global)] &
                              M.base.members[static_cast<std::size_t>(r2)]);
  return meet;
}

struct FinalConditionsReport {
  bool no_lo_member = false;       // (a) of the non-existence equivalence
  bool no_maximal_cover = false;   // (b); false on every finite model
  bool finite_artifact = false;    // (a) holds while (b) fails, finite-scale only
  std::string note;
};

// Finite-model half of the non-existence equivalence. A finite nonempty
// set of cover sets always has a maximal element, so (b) cannot hold here;
// when (a) holds anyway the report marks the pair as a finite-scale
// artifact rather than a refutation.
inline FinalConditionsReport check_final_conditions(const SpectralModel& M) {
  FinalConditionsReport rep;
  rep.no_lo_member = true;
  for (std::size_t r = 0; r < M.base.members.size(); ++r)
    if (M.cover[r] == full_mask(M.primes)) rep.no_lo_member = false;
  bool any_maximal = false;
  for (std::size_t r = 0; r < M.base.members.size() && !any_maximal; ++r) {
    bool maximal = true;
    for (std::size_t s = 0; s < M.base.members.size(); ++s)
      if (M.cover[r] != M.cover[s] && subset_of(M.cover[r], M.cover[s]))
        maximal = false;
    any_maximal = maximal;
  }
  rep.no_maximal_cover = !any_maximal;
  rep.finite_artifact = rep.no_lo_member && !rep.no_maximal_cover;
  rep.note = rep.finite_artifact
                 ? "no full cover, yet a maximal cover exists: the chain "
                   "conditions need infinite models"
                 : "finite model consistent with the equivalence";
  return rep;
}

// Lazily generated strictly-descending chain: member k is the integer tail
// { x : x >= member_floor(k) }, and its spectrum covers the first
// cover_count(k) primes of an unbounded enumeration. Strict descent and
// strict cover growth are properties of the two rule functions and are
// verified, not assumed.
struct LazyChainModel {
  std::function<long long(int)> member_floor;
  std::function<long long(int)> cover_count;
  int depth_cap = 1000;
};

inline LazyChainModel tail_chain_model(int growth, int depth_cap = 1000) {
  if (growth < 1) throw InvalidParameter("cover growth must be positive");
  return LazyChainModel{
      [](int k) { return static_cast<long long>(k); },
      [growth](int k) { return static_cast<long long>(growth) * k; },
      depth_cap};
}

struct LazyChainReport {
  int depth = 0;
  bool members_strictly_descend = true;
  bool covers_strictly_grow = true;
  // Every truncated closed set (a tail of the chain) contains a descending
  // chain with strictly growing covers: the tail itself, re-verified from
  // each truncation point.
  bool chains_inside_every_tail = true;
  bool full_cover_reached = false;  // must stay false: counts are finite
};

inline LazyChainReport check_lazy_chain(const LazyChainModel& M,
                                          int depth) {
  if (depth < 1) throw InvalidParameter("depth must be positive");
  if (depth > M.depth_cap)
    throw DepthExceeded("depth " + std::to_string(depth) + " exceeds cap " +
                        std::to_string(M.depth_cap));
  LazyChainReport rep;
  rep.depth = depth;
  for (int k = 1; k < depth; ++k) {
    // member k+1 inside member k, strictly: the floor must rise
    if (M.member_floor(k + 1) <= M.member_floor(k))
      rep.members_strictly_descend = false;
    if (M.cover_count(k + 1) <= M.cover_count(k))
      rep.covers_strictly_grow = false;
  }
  for (int start = 1; start < depth && rep.chains_inside_every_tail; ++start)
    for (int k = start; k < depth; ++k)
      if (M.member_floor(k + 1) <= M.member_floor(k) ||
          M.cover_count(k + 1) <= M.cover_count(k)) {
        rep.chains_inside_every_tail = false;
        break;
      }
  rep.full_cover_reached = false;
  return rep;
}

// Nested-prefix fixture: member k is {0..k} over a ground set of the same
// size, covering the first (primes - k) primes, so smaller members cover
// more and the bottom member satisfies full cover.
inline SpectralModel nested_chain_fixture(int members, int primes) {
  if (members < 1 || members > 20)
    throw InvalidParameter("member count out of range");
  std::vector<Mask> ms;
  for (int k = 0; k < members; ++k) ms.push_back(full_mask(k + 1));
  std::vector<Mask> cover;
  for (int k = 0; k < members; ++k)
    cover.push_back(full_mask(std::max(0, primes - k)));
  return make_spectral_model(NiceFamily{members, std::move(ms)}, primes,
                             std::move(cover));
}

}  // namespace nicetop

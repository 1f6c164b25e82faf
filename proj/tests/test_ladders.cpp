// Condition-ladder tests: hand-computed rows on small models, the pinned
// empty-set conventions, exhaustive law sweeps over every enumerated family
// and poset in range, the finite collapse facts, and the three symbolic
// reversal certificates.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "nicetop/ladders.hpp"

using namespace nicetop;

namespace {

FinitePoset chain(int n) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[i][j] = i <= j;
  return validate_poset(rel);
}

FinitePoset from_pairs(int n, const std::vector<std::pair<int, int>>& lt) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [x, y] : lt) rel[x][y] = true;
  return validate_poset(rel);
}

// members ∅, {0}, {1}, {0,1}; inclusion order is the four-point diamond
NiceFamily diamond_family() {
  return validate_family(2, {0, bit(0), bit(1), bit(0) | bit(1)});
}

// two bottoms below two incomparable tops: sup-free pairs
FinitePoset bowtie() {
  return from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("open ladder on the diamond family", "[ladders]") {
  FamilySpace S{diamond_family()};

  OpenLadder top = eval_open_ladder(S, bit(3));
  REQUIRE((top.a && top.b && top.c && top.d && top.e && top.f));
  REQUIRE_FALSE(top.vacuous);

  OpenLadder wedge = eval_open_ladder(S, bit(1) | bit(3));
  REQUIRE((wedge.a && wedge.b && wedge.c && wedge.d && wedge.e && wedge.f));

  // {0} and {1} intersect to the empty member, which this open omits
  OpenLadder holed = eval_open_ladder(S, bit(1) | bit(2) | bit(3));
  REQUIRE_FALSE(holed.a);
  REQUIRE_FALSE(holed.b);
  REQUIRE_FALSE(holed.c);
  REQUIRE_FALSE(holed.d);
  REQUIRE_FALSE(holed.e);
  REQUIRE_FALSE(holed.f);

  OpenLadder whole = eval_open_ladder(S, full_mask(4));
  REQUIRE((whole.a && whole.b && whole.c && whole.d && whole.e && whole.f));

  OpenLadder empty = eval_open_ladder(S, 0);
  REQUIRE(empty.vacuous);
  REQUIRE_FALSE(empty.a);
  REQUIRE(empty.b);
  REQUIRE_FALSE(empty.c);
  REQUIRE(empty.d);
  REQUIRE(empty.e);
  REQUIRE(empty.f);

  REQUIRE_THROWS_AS(eval_open_ladder(S, bit(0)), NotOpen);
}

TEST_CASE("open ladder without a top member", "[ladders]") {
  FamilySpace S{validate_family(2, {0, bit(0), bit(1)})};
  OpenLadder L = eval_open_ladder(S, bit(1) | bit(2));
  REQUIRE_FALSE(L.a);
  REQUIRE_FALSE(L.b);
  REQUIRE_FALSE(L.c);
  REQUIRE_FALSE(L.d);
  REQUIRE_FALSE(L.e);
  REQUIRE_FALSE(L.f);
}

TEST_CASE("closed ladder on the diamond family", "[ladders]") {
  FamilySpace S{diamond_family()};

  ClosedLadder pt = eval_closed_ladder(S, bit(0));
  REQUIRE((pt.a && pt.b && pt.c && pt.d && pt.e && pt.f));

  ClosedLadder half = eval_closed_ladder(S, bit(0) | bit(1));
  REQUIRE((half.a && half.b && half.c && half.d && half.e && half.f));
  REQUIRE(is_ideal(S.order, bit(0) | bit(1)));

  // both atoms but not their join: no supremum inside, two maximal points
  ClosedLadder torn = eval_closed_ladder(S, bit(0) | bit(1) | bit(2));
  REQUIRE_FALSE(torn.a);
  REQUIRE_FALSE(torn.b);
  REQUIRE_FALSE(torn.c);
  REQUIRE_FALSE(torn.d);
  REQUIRE_FALSE(torn.e);
  REQUIRE_FALSE(torn.f);

  ClosedLadder whole = eval_closed_ladder(S, full_mask(4));
  REQUIRE((whole.a && whole.b && whole.c && whole.d && whole.e && whole.f));

  ClosedLadder empty = eval_closed_ladder(S, 0);
  REQUIRE(empty.vacuous);
  REQUIRE_FALSE(empty.a);
  REQUIRE(empty.b);
  REQUIRE_FALSE(empty.c);
  REQUIRE_FALSE(empty.d);
  REQUIRE(empty.e);
  REQUIRE(empty.f);

  REQUIRE_THROWS_AS(eval_closed_ladder(S, bit(3)), NotClosed);
}

TEST_CASE("greatest-element equivalences on concrete models", "[ladders]") {
  FinitePoset C3 = chain(3);
  GreatestEquivalents g = eval_greatest_equivalents(C3, full_mask(3));
  REQUIRE((g.a && g.b && g.c && g.d && g.e && g.f));

  FinitePoset D = FamilySpace{diamond_family()}.order;
  GreatestEquivalents gd = eval_greatest_equivalents(D, bit(1) | bit(2) | bit(3));
  REQUIRE((gd.a && gd.b && gd.c && gd.d && gd.e && gd.f));

  GreatestEquivalents gm = eval_greatest_equivalents(D, bit(1) | bit(2));
  REQUIRE_FALSE(gm.a);
  REQUIRE_FALSE(gm.c);

  REQUIRE_THROWS_AS(eval_greatest_equivalents(C3, 0), InvalidParameter);
}

TEST_CASE("sup-existence conditions split off on plain posets", "[ladders]") {
  // two points below two incomparable middles below one top: (a)-(d) hold
  // for the whole space, yet the bottom pair has no supremum
  FinitePoset P = from_pairs(
      5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 4}, {1, 4}});
  GreatestEquivalents g = eval_greatest_equivalents(P, full_mask(5));
  REQUIRE(g.a);
  REQUIRE(g.b);
  REQUIRE(g.c);
  REQUIRE(g.d);
  REQUIRE_FALSE(g.e);
  REQUIRE_FALSE(g.f);
  REQUIRE_FALSE(sup(P, bit(0) | bit(1)).has_value());
}

TEST_CASE("bounds exist iff extrema exist, on family spaces", "[ladders]") {
  FamilySpace S{diamond_family()};
  for (Mask H = 1; H <= full_mask(4); ++H) {
    REQUIRE(check_bounds_iff_extrema(S.order, H));
    REQUIRE(inf(S.order, H).has_value());  // meets always exist here
  }
  REQUIRE_THROWS_AS(check_bounds_iff_extrema(S.order, 0), InvalidParameter);

  // and fails on a poset with a bounded sup-free pair
  REQUIRE_FALSE(check_bounds_iff_extrema(bowtie(), bit(0) | bit(1)));
  REQUIRE_FALSE(check_bounds_iff_extrema(bowtie(), bit(2) | bit(3)));
}

TEST_CASE("component and opens-intersection laws", "[ladders]") {
  REQUIRE(components_are_maximal_closures(FamilySpace{diamond_family()}));
  REQUIRE(components_are_maximal_closures(PosetSpace{bowtie()}));
  REQUIRE(greatest_iff_opens_intersect_to_it(FamilySpace{diamond_family()}));
  REQUIRE(greatest_iff_opens_intersect_to_it(PosetSpace{bowtie()}));
  REQUIRE(greatest_iff_opens_intersect_to_it(PosetSpace{chain(4)}));
  REQUIRE_THROWS_AS(components_are_maximal_closures(PosetSpace{chain(17)}),
                    CapExceeded);
  REQUIRE_THROWS_AS(greatest_iff_opens_intersect_to_it(PosetSpace{chain(17)}),
                    CapExceeded);
}

TEST_CASE("ladder laws hold on every family in range", "[ladders]") {
  LadderReport one = verify_ladders(FamilySpace{diamond_family()});
  REQUIRE(one.checked > 0);
  REQUIRE(one.violations.empty());

  long long total = 0;
  for (const NiceFamily& F : enumerate_nice_families(3, 5)) {
    LadderReport rep = verify_ladders(FamilySpace{F});
    total += rep.checked;
    REQUIRE(rep.violations.empty());
  }
  REQUIRE(total > 0);
}

TEST_CASE("order laws hold on every poset in range", "[ladders]") {
  for (int n = 1; n <= 4; ++n)
    for (const FinitePoset& P : enumerate_posets(n)) {
      LadderReport rep = verify_poset_laws(P);
      REQUIRE(rep.violations.empty());
    }
}

TEST_CASE("no finite model reverses the one-way implications", "[ladders]") {
  CollapseReport rep = finite_collapse_facts(3, 5);
  REQUIRE(rep.families > 0);
  REQUIRE(rep.opens_checked > 0);
  REQUIRE_FALSE(rep.e_without_d);
  REQUIRE_FALSE(rep.f_without_e);
  REQUIRE_FALSE(rep.c_without_b);
  REQUIRE_FALSE(rep.f_without_a);
}

TEST_CASE("symbolic reversal certificates", "[ladders]") {
  std::vector<ReversalCertificate> certs = search_reversals();
  REQUIRE(certs.size() == 3);

  REQUIRE(certs[0].implication == "(e) without (d)");
  REQUIRE(certs[0].verified);
  REQUIRE(certs[0].flags.e);
  REQUIRE_FALSE(certs[0].flags.d);
  REQUIRE_FALSE(certs[0].flags.a);

  REQUIRE(certs[1].implication == "(f) without (e)");
  REQUIRE(certs[1].verified);
  REQUIRE(certs[1].flags.f);
  REQUIRE_FALSE(certs[1].flags.e);

  REQUIRE(certs[2].implication == "(c) without (b)");
  REQUIRE(certs[2].verified);
  REQUIRE(certs[2].flags.c);
  REQUIRE(certs[2].flags.d);
  REQUIRE_FALSE(certs[2].flags.b);
  REQUIRE_FALSE(certs[2].flags.a);
}

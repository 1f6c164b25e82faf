// Cut-ideal arithmetic tests. The closed-form rules are checked two ways:
// the named example rows below, and agreement with the sampling oracle that
// recomputes every operation from value sets on a uniform grid.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "nicetop/grid_oracle.hpp"
#include "nicetop/runner.hpp"
#include "nicetop/valuation.hpp"

using namespace nicetop;

namespace {

CutIdeal cc(long long num, long long den = 1) {
  return CutIdeal::make_cut(Rat{num, den}, Bound::Closed);
}
CutIdeal oc(long long num, long long den = 1) {
  return CutIdeal::make_cut(Rat{num, den}, Bound::Open);
}

gridcheck::CutDesc desc(const CutIdeal& I) {
  return gridcheck::CutDesc{I.zero, I.gamma, I.bound == Bound::Closed};
}

}  // namespace

TEST_CASE("containment rules", "[valuation]") {
  REQUIRE(contains(cc(0), cc(1)));
  REQUIRE_FALSE(contains(cc(1), cc(0)));
  REQUIRE(contains(cc(0), oc(0)));
  REQUIRE_FALSE(contains(oc(0), cc(0)));
  REQUIRE_FALSE(contains(oc(1, 2), cc(1, 2)));
  REQUIRE(contains(cc(1, 2), oc(1, 2)));
  REQUIRE(contains(cc(5), CutIdeal::make_zero()));
  REQUIRE_FALSE(contains(CutIdeal::make_zero(), cc(5)));
  REQUIRE(contains(CutIdeal::make_zero(), CutIdeal::make_zero()));
}

TEST_CASE("containment is a total order on cuts", "[valuation]") {
  std::vector<CutIdeal> pool{cc(-2), oc(-2), cc(0),      oc(0),
                             cc(1, 2),  oc(1, 2),  cc(3), CutIdeal::make_zero()};
  for (const CutIdeal& I : pool)
    for (const CutIdeal& J : pool) {
      REQUIRE((contains(I, J) || contains(J, I)));
      if (contains(I, J) && contains(J, I)) REQUIRE(I == J);
      for (const CutIdeal& K : pool)
        if (contains(I, J) && contains(J, K)) REQUIRE(contains(I, K));
    }
}

TEST_CASE("products add cut points and intersect bounds", "[valuation]") {
  REQUIRE(multiply(cc(1), cc(2)) == cc(3));
  REQUIRE(multiply(oc(1), cc(2)) == oc(3));
  REQUIRE(multiply(oc(1), oc(2)) == oc(3));
  REQUIRE(multiply(CutIdeal::make_zero(), cc(7)) == CutIdeal::make_zero());
  REQUIRE(multiply(cc(7), CutIdeal::make_zero()) == CutIdeal::make_zero());

  std::vector<CutIdeal> pool{cc(-1), oc(0), cc(1, 2), cc(2), oc(3, 4),
                             CutIdeal::make_zero()};
  for (const CutIdeal& I : pool) {
    REQUIRE(multiply(I, ov()) == I);
    REQUIRE(multiply(ov(), I) == I);
    for (const CutIdeal& J : pool) {
      REQUIRE(multiply(I, J) == multiply(J, I));
      for (const CutIdeal& K : pool)
        REQUIRE(multiply(multiply(I, J), K) == multiply(I, multiply(J, K)));
      // monotone in each argument
      for (const CutIdeal& K : pool)
        if (contains(J, K)) REQUIRE(contains(multiply(I, J), multiply(I, K)));
    }
  }
}

TEST_CASE("intersect picks the smaller set, sum the larger", "[valuation]") {
  REQUIRE(intersect(cc(1), cc(2)) == cc(2));
  REQUIRE(sum(cc(1), cc(2)) == cc(1));
  REQUIRE(intersect(oc(1), cc(1)) == oc(1));
  REQUIRE(sum(oc(1), cc(1)) == cc(1));
  REQUIRE(intersect(cc(1), CutIdeal::make_zero()) == CutIdeal::make_zero());
  REQUIRE(sum(cc(1), CutIdeal::make_zero()) == cc(1));

  std::vector<CutIdeal> pool{cc(0), oc(0), cc(1), oc(1),
                             CutIdeal::make_zero()};
  for (const CutIdeal& I : pool)
    for (const CutIdeal& J : pool) {
      REQUIRE(intersect(I, J) == intersect(J, I));
      REQUIRE(sum(I, J) == sum(J, I));
      REQUIRE(intersect(I, I) == I);
      REQUIRE(sum(I, I) == I);
      REQUIRE(sum(I, intersect(I, J)) == I);        // absorption
      REQUIRE(intersect(I, sum(I, J)) == I);
      REQUIRE(contains(I, intersect(I, J)));
      REQUIRE(contains(sum(I, J), I));
    }
}

TEST_CASE("membership of concrete values", "[valuation]") {
  REQUIRE(contains_value(cc(1, 2), Rat{1, 2}));
  REQUIRE_FALSE(contains_value(oc(1, 2), Rat{1, 2}));
  REQUIRE(contains_value(oc(1, 2), Rat{2, 3}));
  REQUIRE_FALSE(contains_value(cc(1, 2), Rat{1, 3}));
  REQUIRE_FALSE(contains_value(CutIdeal::make_zero(), Rat{100}));
}

TEST_CASE("the integral-ideal predicate", "[valuation]") {
  REQUIRE(is_ov_ideal(ov()));
  REQUIRE(is_ov_ideal(maximal_ideal()));
  REQUIRE(is_ov_ideal(cc(3, 2)));
  REQUIRE(is_ov_ideal(CutIdeal::make_zero()));
  REQUIRE_FALSE(is_ov_ideal(cc(-1, 2)));
  REQUIRE(is_nonzero_ov_ideal(ov()));
  REQUIRE_FALSE(is_nonzero_ov_ideal(CutIdeal::make_zero()));
  REQUIRE(show_cut(oc(-1, 2)) == "Cut(-1/2, open)");
  REQUIRE(show_cut(CutIdeal::make_zero()) == "0");
}

TEST_CASE("parametric family construction and instantiation", "[valuation]") {
  REQUIRE_THROWS_AS(ParamIdealFamily(Rat{1}, Rat{1}, Rat{1}, Rat{0},
                                     Bound::Closed),
                    InvalidParameter);
  REQUIRE_THROWS_AS(ParamIdealFamily(Rat{2}, Rat{1}, Rat{1}, Rat{0},
                                     Bound::Closed),
                    InvalidParameter);
  ParamIdealFamily F{Rat{0}, Rat{1}, Rat{1}, Rat{0}, Bound::Closed};
  REQUIRE(F.instantiate(Rat{1, 2}) == cc(1, 2));
  REQUIRE_THROWS_AS(F.instantiate(Rat{0}), InvalidParameter);
  REQUIRE_THROWS_AS(F.instantiate(Rat{1}), InvalidParameter);
  REQUIRE_THROWS_AS(F.instantiate(Rat{2}), InvalidParameter);
}

TEST_CASE("family intersection closes the unattained supremum",
          "[valuation]") {
  // { Cut(r, Closed) : r in (0, r0) } meets in Cut(r0, Closed)
  ParamIdealFamily F{Rat{0}, Rat{1}, Rat{1}, Rat{0}, Bound::Closed};
  REQUIRE(intersect_family(F) == cc(1));
  REQUIRE(union_family(F) == oc(0));

  // the pointwise bound does not leak into the limit: open members, closed meet
  ParamIdealFamily G{Rat{0}, Rat{1}, Rat{1}, Rat{0}, Bound::Open};
  REQUIRE(intersect_family(G) == cc(1));
  REQUIRE(union_family(G) == oc(0));

  // decreasing sweep: sup at the left end
  ParamIdealFamily H{Rat{0}, Rat{1}, Rat{-1}, Rat{1}, Bound::Closed};
  REQUIRE(intersect_family(H) == cc(1));
  REQUIRE(union_family(H) == oc(0));

  // degenerate constant family returns its single member, bound intact
  ParamIdealFamily K{Rat{0}, Rat{1}, Rat{0}, Rat{1}, Bound::Closed};
  REQUIRE(intersect_family(K) == cc(1));
  REQUIRE(union_family(K) == cc(1));
  ParamIdealFamily K2{Rat{0}, Rat{1}, Rat{0}, Rat{1}, Bound::Open};
  REQUIRE(intersect_family(K2) == oc(1));
}

TEST_CASE("family limits are tight bounds", "[valuation]") {
  ParamIdealFamily F{Rat{0}, Rat{1}, Rat{1}, Rat{0}, Bound::Closed};
  CutIdeal lo = intersect_family(F), hi = union_family(F);
  std::vector<Rat> params{{1, 64}, {1, 7}, {1, 2}, {5, 7}, {63, 64}};
  for (const Rat& t : params) {
    CutIdeal member = F.instantiate(t);
    REQUIRE(contains(member, lo));
    REQUIRE(contains(hi, member));
  }
  // nothing fits strictly between the limits and the family: anything
  // strictly above the meet misses a member, exhibited by instantiating
  // past its cut point, and anything strictly below the join is missed by
  // a member instantiated before it
  std::vector<CutIdeal> candidates{cc(1),  oc(1),  cc(2),     oc(0),
                                   cc(0),  cc(1, 2), oc(1, 2), cc(63, 64)};
  for (const CutIdeal& K : candidates) {
    if (contains(K, lo) && !(K == lo)) {
      Rat t = (std::max(K.gamma, Rat{0}) + 1) / 2;
      REQUIRE(!contains(F.instantiate(t), K));
    }
    if (contains(hi, K) && !(K == hi)) {
      Rat t = std::min(K.gamma, Rat{1}) / 2;
      REQUIRE(!contains(K, F.instantiate(t)));
    }
  }
}

TEST_CASE("grid projection respects its exactness domain", "[valuation]") {
  using gridcheck::project;
  REQUIRE_THROWS_AS(project(desc(cc(1, 3)), 64, 16), InvalidParameter);
  REQUIRE_THROWS_AS(project(desc(cc(9)), 64, 16), InvalidParameter);
  REQUIRE_THROWS_AS(project(desc(cc(1)), 0, 16), InvalidParameter);
  REQUIRE_NOTHROW(project(desc(cc(8)), 64, 16));
  REQUIRE_NOTHROW(project(desc(CutIdeal::make_zero()), 64, 16));

  // the projection separates open from closed at the boundary
  gridcheck::GridSet c = project(desc(cc(1, 2)), 64, 16);
  gridcheck::GridSet o = project(desc(oc(1, 2)), 64, 16);
  REQUIRE(c != o);
  REQUIRE(gridcheck::grid_subset(o, c));
  REQUIRE_FALSE(gridcheck::grid_subset(c, o));
}

TEST_CASE("grid mismatch errors", "[valuation]") {
  gridcheck::GridSet a = gridcheck::project(desc(cc(1)), 8, 4);
  gridcheck::GridSet b = gridcheck::project(desc(cc(1)), 16, 4);
  REQUIRE_THROWS_AS(gridcheck::pointwise_meet(a, b), InvalidParameter);
  REQUIRE_THROWS_AS(gridcheck::pointwise_join(a, b), InvalidParameter);
  REQUIRE_THROWS_AS(gridcheck::grid_subset(a, b), InvalidParameter);
}

TEST_CASE("named example rows recomputed on the grid", "[valuation]") {
  using namespace gridcheck;
  auto same_product = [&](const CutIdeal& I, const CutIdeal& J) {
    return minkowski_product(desc(I), desc(J)) ==
           sample_values(desc(multiply(I, J)));
  };
  REQUIRE(same_product(cc(1), cc(2)));
  REQUIRE(same_product(oc(1), cc(2)));
  REQUIRE(same_product(oc(1), oc(2)));  // needs the half-step witnesses
  REQUIRE(same_product(cc(0), oc(0)));
  REQUIRE(same_product(CutIdeal::make_zero(), cc(2)));
  REQUIRE(pointwise_meet(project(desc(oc(1))), project(desc(cc(1)))) ==
          project(desc(intersect(oc(1), cc(1)))));
  REQUIRE(pointwise_join(project(desc(oc(1))), project(desc(cc(1)))) ==
          project(desc(sum(oc(1), cc(1)))));
  REQUIRE(grid_subset(project(desc(cc(1))), project(desc(cc(0)))));
  REQUIRE_FALSE(grid_subset(project(desc(cc(1, 2))), project(desc(oc(1, 2)))));
}

TEST_CASE("randomized oracle agreement", "[valuation]") {
  OracleAgreement res = sweep_cut_oracle(2000, 20260816);
  REQUIRE(res.pairs == 2000);
  REQUIRE(res.mismatches.empty());
  // same seed, same verdicts
  OracleAgreement res2 = sweep_cut_oracle(2000, 20260816);
  REQUIRE(res2.pairs == res.pairs);
  REQUIRE_THROWS_AS(sweep_cut_oracle(0, 1), InvalidParameter);
}

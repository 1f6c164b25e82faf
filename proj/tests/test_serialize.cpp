// JSON round trips for every model type, plus malformed-input rows. The
// parsers funnel through the module validators, so junk that is
// well-formed JSON but a bad model fails with the library's own errors.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "nicetop/serialize.hpp"

using namespace nicetop;

TEST_CASE("poset round trips", "[serialize]") {
  for (int n = 1; n <= 3; ++n)
    for (const FinitePoset& P : enumerate_posets(n))
      REQUIRE(poset_from_json(to_json(P)) == P);
}

TEST_CASE("family round trips", "[serialize]") {
  for (const NiceFamily& F : enumerate_nice_families(3, 6))
    REQUIRE(family_from_json(to_json(F)) == F);
}

TEST_CASE("topology round trips", "[serialize]") {
  for (int n = 1; n <= 3; ++n)
    for (const AlexTopology& T : enumerate_topologies(n, false))
      REQUIRE(topology_from_json(to_json(T)) == T);
}

TEST_CASE("cut round trips", "[serialize]") {
  std::vector<CutIdeal> pool{
      CutIdeal::make_zero(), ov(), maximal_ideal(),
      CutIdeal::make_cut(Rat{-7, 3}, Bound::Closed),
      CutIdeal::make_cut(Rat{22, 7}, Bound::Open)};
  for (const CutIdeal& I : pool) REQUIRE(cut_from_json(to_json(I)) == I);
  REQUIRE(to_json(CutIdeal::make_zero()) == Json{{"zero", true}});
  REQUIRE(to_json(ov()).at("gamma") == "0");
  REQUIRE(to_json(maximal_ideal()).at("bound") == "open");
}

TEST_CASE("pattern round trips", "[serialize]") {
  PatternRing P = PatternRing::filled(2, ov());
  P.entries[0][1] = CutIdeal::make_cut(Rat{1}, Bound::Closed);
  P.entries[1][0] = CutIdeal::make_cut(Rat{2}, Bound::Closed);
  REQUIRE(pattern_from_json(to_json(P)) == P);

  PatternRing Q = PatternRing::filled(3, CutIdeal::make_zero());
  Q.entries[1][1] = CutIdeal::make_cut(Rat{-1, 2}, Bound::Open);
  REQUIRE(pattern_from_json(to_json(Q)) == Q);
}

TEST_CASE("spectral model round trips", "[serialize]") {
  SpectralModel M = nested_chain_fixture(4, 3);
  SpectralModel M2 = spectral_from_json(to_json(M));
  REQUIRE(M2.base == M.base);
  REQUIRE(M2.primes == M.primes);
  REQUIRE(M2.cover == M.cover);
  REQUIRE(lo_from_cofinite(M2, 3).member == 0);  // oracle is functional
}

TEST_CASE("malformed posets", "[serialize]") {
  REQUIRE_THROWS_AS(poset_from_json(Json{{"n", 2}}), ParseError);
  REQUIRE_THROWS_AS(poset_from_json(Json::array()), ParseError);
  REQUIRE_THROWS_AS(poset_from_json(Json{{"n", 2}, {"leq", "x"}}),
                    ParseError);
  REQUIRE_THROWS_AS(
      poset_from_json(Json{{"n", 3}, {"leq", Json::array({Json::array()})}}),
      ParseError);
  // well-formed JSON, bad order: the order validator speaks
  Json not_reflexive{
      {"n", 2},
      {"leq", {{false, false}, {false, true}}}};
  REQUIRE_THROWS_AS(poset_from_json(not_reflexive), ReflexivityViolation);
  Json cyclic{{"n", 2}, {"leq", {{true, true}, {true, true}}}};
  REQUIRE_THROWS_AS(poset_from_json(cyclic), AntisymmetryViolation);
}

TEST_CASE("malformed families", "[serialize]") {
  REQUIRE_THROWS_AS(family_from_json(Json{{"ground", 2}}), ParseError);
  REQUIRE_THROWS_AS(
      family_from_json(Json{{"ground", 2}, {"members", "x"}}), ParseError);
  Json out_of_range{{"ground", 2}, {"members", {{0}, {5}}}};
  REQUIRE_THROWS_AS(family_from_json(out_of_range), ParseError);
  Json not_closed{{"ground", 2}, {"members", {{0}, {1}}}};
  REQUIRE_THROWS_AS(family_from_json(not_closed), NotIntersectionClosed);
}

TEST_CASE("malformed topologies", "[serialize]") {
  REQUIRE_THROWS_AS(topology_from_json(Json{{"n", 1}}), ParseError);
  REQUIRE_THROWS_AS(
      topology_from_json(Json{{"n", 0}, {"min_open", Json::array()}}),
      ParseError);
  Json short_rows{{"n", 2}, {"min_open", {{0}}}};
  REQUIRE_THROWS_AS(topology_from_json(short_rows), ParseError);
  Json stray_point{{"n", 2}, {"min_open", {{0}, {1, 5}}}};
  REQUIRE_THROWS_AS(topology_from_json(stray_point), ParseError);
  Json missing_self{{"n", 2}, {"min_open", {{0}, {0}}}};
  REQUIRE_THROWS_AS(topology_from_json(missing_self), ParseError);
}

TEST_CASE("malformed cuts", "[serialize]") {
  REQUIRE_THROWS_AS(cut_from_json(Json("x")), ParseError);
  REQUIRE_THROWS_AS(cut_from_json(Json{{"zero", false}}), ParseError);
  REQUIRE_THROWS_AS(cut_from_json(Json{{"gamma", "1/2"}}), ParseError);
  REQUIRE_THROWS_AS(
      cut_from_json(Json{{"gamma", 5}, {"bound", "closed"}}), ParseError);
  REQUIRE_THROWS_AS(
      cut_from_json(Json{{"gamma", "1/2"}, {"bound", "half"}}), ParseError);
  REQUIRE_THROWS_AS(
      cut_from_json(Json{{"gamma", "1/0"}, {"bound", "open"}}), ParseError);
  REQUIRE_THROWS_AS(
      cut_from_json(Json{{"gamma", "x"}, {"bound", "open"}}), ParseError);
}

TEST_CASE("malformed patterns", "[serialize]") {
  REQUIRE_THROWS_AS(pattern_from_json(Json{{"n", 2}}), ParseError);
  Json short_entries{{"n", 2}, {"entries", Json::array()}};
  REQUIRE_THROWS_AS(pattern_from_json(short_entries), ParseError);
  Json ragged = to_json(PatternRing::filled(2, ov()));
  ragged["entries"][1] = Json::array({to_json(ov())});
  REQUIRE_THROWS_AS(pattern_from_json(ragged), ParseError);
  Json bad_cell = to_json(PatternRing::filled(2, ov()));
  bad_cell["entries"][0][0] = "x";
  REQUIRE_THROWS_AS(pattern_from_json(bad_cell), ParseError);
}

TEST_CASE("malformed spectral models", "[serialize]") {
  Json base = to_json(nested_chain_fixture(3, 2));

  Json no_cover = base;
  no_cover.erase("cover");
  REQUIRE_THROWS_AS(spectral_from_json(no_cover), ParseError);

  Json cover_list = base;
  cover_list["cover"] = Json::array();
  REQUIRE_THROWS_AS(spectral_from_json(cover_list), ParseError);

  Json bad_key = base;
  bad_key["cover"]["wide"] = Json::array({0});
  REQUIRE_THROWS_AS(spectral_from_json(bad_key), ParseError);

  Json far_key = base;
  far_key["cover"]["9"] = Json::array({0});
  REQUIRE_THROWS_AS(spectral_from_json(far_key), ParseError);

  Json stray_prime = base;
  stray_prime["cover"]["0"] = Json::array({7});
  REQUIRE_THROWS_AS(spectral_from_json(stray_prime), ParseError);

  Json cover_shape = base;
  cover_shape["cover"]["0"] = "x";
  REQUIRE_THROWS_AS(spectral_from_json(cover_shape), ParseError);

  // antitonicity breaks only at the model validator
  Json skewed = base;
  skewed["cover"]["2"] = Json::array({0, 1});
  skewed["cover"]["0"] = Json::array();
  REQUIRE_THROWS_AS(spectral_from_json(skewed), InvalidParameter);
}

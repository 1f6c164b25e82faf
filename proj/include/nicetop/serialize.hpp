#pragma once
// JSON encodings of the model types, matching the formats the CLI reads and
// writes:
//   poset     {"n": int, "leq": [[bool]]}
//   family    {"ground": int, "members": [[int]]}
//   topology  {"n": int, "min_open": [[int]]}
//   cut       {"gamma": "p/q", "bound": "closed"|"open"} or {"zero": true}
//   pattern   {"n": int, "entries": [[cut]]}
//   spectral  family keys + {"primes": int, "cover": {"<index>": [int]}}
// Parsers validate through the module constructors, so malformed input
// fails with the same errors the library throws elsewhere.

#include <json.hpp>

#include "nicetop/alexandroff.hpp"
#include "nicetop/order_core.hpp"
#include "nicetop/pattern_rings.hpp"
#include "nicetop/spectra.hpp"
#include "nicetop/valuation.hpp"

namespace nicetop {

using Json = nlohmann::json;

inline Json to_json(const FinitePoset& P) {
  Json leq = Json::array();
  for (int x = 0; x < P.n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < P.n; ++y) row.push_back(P.leq(x, y));
    leq.push_back(std::move(row));
  }
  return Json{{"n", P.n}, {"leq", std::move(leq)}};
}

inline FinitePoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("leq"))
    throw ParseError("poset needs keys n and leq");
  int n = 0;
  std::vector<std::vector<bool>> rel;
  try {
    n = j.at("n").get<int>();
    rel = j.at("leq").get<std::vector<std::vector<bool>>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad poset: ") + e.what());
  }
  if (static_cast<int>(rel.size()) != n)
    throw ParseError("leq row count does not match n");
  return validate_poset(rel);
}

inline Json to_json(const NiceFamily& F) {
  Json members = Json::array();
  for (Mask m : F.members) members.push_back(bits_of(m));
  return Json{{"ground", F.ground}, {"members", std::move(members)}};
}

inline NiceFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("members"))
    throw ParseError("family needs keys ground and members");
  int ground = 0;
  std::vector<std::vector<int>> members;
  try {
    ground = j.at("ground").get<int>();
    members = j.at("members").get<std::vector<std::vector<int>>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad family: ") + e.what());
  }
  std::vector<Mask> ms;
  for (const auto& lst : members) {
    Mask m = 0;
    for (int x : lst) {
      if (x < 0 || x >= ground) throw ParseError("member element out of range");
      m |= bit(x);
    }
    ms.push_back(m);
  }
  return validate_family(ground, ms);
}

inline Json to_json(const AlexTopology& T) {
  Json mo = Json::array();
  for (Mask m : T.min_open) mo.push_back(bits_of(m));
  return Json{{"n", T.n}, {"min_open", std::move(mo)}};
}

inline AlexTopology topology_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("min_open"))
    throw ParseError("topology needs keys n and min_open");
  int n = 0;
  std::vector<std::vector<int>> mo;
  try {
    n = j.at("n").get<int>();
    mo = j.at("min_open").get<std::vector<std::vector<int>>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad topology: ") + e.what());
  }
  if (n < 1 || n > 20) throw ParseError("point count out of range");
  if (static_cast<int>(mo.size()) != n)
    throw ParseError("min_open row count does not match n");
  AlexTopology T;
  T.n = n;
  for (int x = 0; x < n; ++x) {
    Mask m = 0;
    for (int y : mo[static_cast<std::size_t>(x)]) {
      if (y < 0 || y >= n) throw ParseError("min_open point out of range");
      m |= bit(y);
    }
    if (!has(m, x)) throw ParseError("minimal open must contain its point");
    T.min_open.push_back(m);
  }
  return T;
}

inline Json to_json(const CutIdeal& I) {
  if (I.zero) return Json{{"zero", true}};
  return Json{{"gamma", show_rat(I.gamma)},
              {"bound", I.bound == Bound::Closed ? "closed" : "open"}};
}

inline CutIdeal cut_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cut must be an object");
  if (j.contains("zero")) {
    if (j.at("zero") != Json(true)) throw ParseError("zero must be true");
    return CutIdeal::make_zero();
  }
  if (!j.contains("gamma") || !j.contains("bound"))
    throw ParseError("cut needs keys gamma and bound");
  std::string g, b;
  try {
    g = j.at("gamma").get<std::string>();
    b = j.at("bound").get<std::string>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad cut: ") + e.what());
  }
  if (b != "closed" && b != "open")
    throw ParseError("bound must be \"closed\" or \"open\"");
  return CutIdeal::make_cut(parse_rat(g),
                            b == "closed" ? Bound::Closed : Bound::Open);
}

inline Json to_json(const PatternRing& P) {
  Json rows = Json::array();
  for (const auto& row : P.entries) {
    Json r = Json::array();
    for (const CutIdeal& I : row) r.push_back(to_json(I));
    rows.push_back(std::move(r));
  }
  return Json{{"n", P.n}, {"entries", std::move(rows)}};
}

inline PatternRing pattern_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("pattern needs keys n and entries");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad pattern: ") + e.what());
  }
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("entries row count does not match n");
  std::vector<std::vector<CutIdeal>> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("entries must be square");
    std::vector<CutIdeal> r;
    for (const Json& cell : row) r.push_back(cut_from_json(cell));
    entries.push_back(std::move(r));
  }
  return PatternRing::of(std::move(entries));
}

inline Json to_json(const SpectralModel& M) {
  Json j = to_json(M.base);
  j["primes"] = M.primes;
  Json cover = Json::object();
  for (std::size_t r = 0; r < M.cover.size(); ++r)
    cover[std::to_string(r)] = bits_of(M.cover[r]);
  j["cover"] = std::move(cover);
  return j;
}

inline SpectralModel spectral_from_json(const Json& j) {
  NiceFamily F = family_from_json(j);
  if (!j.contains("primes") || !j.contains("cover"))
    throw ParseError("spectral model needs keys primes and cover");
  int primes = 0;
  std::vector<Mask> cover(F.members.size(), 0);
  try {
    primes = j.at("primes").get<int>();
    if (!j.at("cover").is_object()) throw ParseError("cover must be an object");
    for (const auto& [key, val] : j.at("cover").items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        throw ParseError("cover key must be a member index");
      }
      if (idx >= cover.size()) throw ParseError("cover key out of range");
      Mask c = 0;
      for (int p : val.get<std::vector<int>>()) {
        if (p < 0 || p >= primes) throw ParseError("cover prime out of range");
        c |= bit(p);
      }
      cover[idx] = c;
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad spectral model: ") + e.what());
  }
  return make_spectral_model(std::move(F), primes, std::move(cover));
}

}  // namespace nicetop

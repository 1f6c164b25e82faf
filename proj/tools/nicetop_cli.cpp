// Command-line front end: verification sweeps, the worked examples as
// machine-checked certificates, reversal search, and spectral fixtures.
// Reports come out as text or versioned JSON ("schema": 1); exit codes are
// 0 success, 1 usage/config error, 2 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nicetop/nicetop.hpp"

namespace {

constexpr const char* kToolVersion = "nicetop 0.1.0";

struct OutputOptions {
  std::string format = "text";
  std::string path;  // empty = stdout
};

using nicetop::Json;

// Shared report skeleton; results and config are filled per subcommand.
Json report_skeleton(const std::string& subcommand) {
  Json j;
  j["schema"] = 1;
  j["tool"] = kToolVersion;
  j["config"] = Json{{"subcommand", subcommand}};
  j["results"] = Json::object();
  return j;
}

void write_out(const OutputOptions& out, const std::string& body) {
  if (out.path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw nicetop::InvalidParameter("cannot open output path " + out.path);
  f << body;
}

Json violations_json(const std::vector<nicetop::ImplicationViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs)
    arr.push_back(Json{{"model", v.model}, {"set", v.set}, {"rule", v.rule}});
  return arr;
}

Json totals_json(const nicetop::SweepTotals& t) {
  return Json{{"models", t.models},
              {"checked", t.checked},
              {"violations", violations_json(t.violations)}};
}

Json conditions_json(const nicetop::OpenConditions& c) {
  return Json{{"a", c.a}, {"b", c.b}, {"c", c.c},
              {"d", c.d}, {"e", c.e}, {"f", c.f}};
}

void print_violations(std::ostream& os, const Json& arr) {
  for (const Json& v : arr)
    os << "  violation: " << v.at("model").get<std::string>() << " | "
       << v.at("set").get<std::string>() << " | "
       << v.at("rule").get<std::string>() << "\n";
}

void finish(Json& report, const OutputOptions& out,
            std::chrono::steady_clock::time_point t0,
            const std::string& text_body) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  report["timing_ms"] = ms;
  if (out.format == "json")
    write_out(out, report.dump(2) + "\n");
  else
    write_out(out, text_body);
}

struct VerifyArgs {
  int max_n = 4;
  bool families = false;
  int ground = 3;
  int max_members = 5;
  int oracle_pairs = 1000;
  int grid_q = 64;
  int grid_b = 16;
  unsigned seed = 1;
  int threads = 1;
};

int run_verify(const VerifyArgs& a, const OutputOptions& out) {
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("verify");
  report["config"].update(Json{{"max_n", a.max_n},
                               {"families", a.families},
                               {"ground", a.ground},
                               {"max_members", a.max_members},
                               {"oracle_pairs", a.oracle_pairs},
                               {"grid_q", a.grid_q},
                               {"grid_B", a.grid_b},
                               {"seed", a.seed},
                               {"threads", a.threads}});

  nicetop::SweepTotals posets = nicetop::sweep_posets(a.max_n, a.threads);
  nicetop::SweepTotals topologies =
      nicetop::sweep_topologies(std::min(a.max_n, 4));
  report["results"]["posets"] = totals_json(posets);
  report["results"]["topologies"] = totals_json(topologies);

  long long total = static_cast<long long>(posets.violations.size()) +
                    static_cast<long long>(topologies.violations.size());

  std::optional<nicetop::SweepTotals> families;
  if (a.families) {
    families = nicetop::sweep_families(a.ground, a.max_members, a.threads);
    report["results"]["families"] = totals_json(*families);
    total += static_cast<long long>(families->violations.size());
  }

  std::optional<nicetop::OracleAgreement> oracle;
  if (a.oracle_pairs > 0) {
    oracle = nicetop::sweep_cut_oracle(a.oracle_pairs, a.seed, a.grid_q,
                                       a.grid_b);
    report["results"]["oracle"] =
        Json{{"pairs", oracle->pairs}, {"mismatches", oracle->mismatches}};
    total += static_cast<long long>(oracle->mismatches.size());
  }
  report["violations_total"] = total;

  std::ostringstream text;
  text << kToolVersion << " verify\n";
  auto line = [&](const char* label, const nicetop::SweepTotals& t) {
    text << label << ": " << t.models << " models, " << t.checked
         << " checks, " << t.violations.size() << " violations\n";
    print_violations(text, violations_json(t.violations));
  };
  line("posets", posets);
  line("topologies", topologies);
  if (families) line("families", *families);
  if (oracle) {
    text << "cut oracle: " << oracle->pairs << " pairs, "
         << oracle->mismatches.size() << " mismatches\n";
    for (const std::string& m : oracle->mismatches)
      text << "  mismatch: " << m << "\n";
  }
  text << (total == 0 ? "all checks passed\n"
                      : "violations found: " + std::to_string(total) + "\n");
  finish(report, out, t0, text.str());
  return total == 0 ? 0 : 2;
}

struct ExampleArgs {
  std::string which;
  std::string r0 = "1";
  std::string j1 = "2";
  std::string j1_bound = "closed";
  std::string j2 = "1";
  std::string j2_bound = "closed";
  int n = 2;
  int depth = 50;
};

nicetop::Bound parse_bound(const std::string& b) {
  if (b == "closed") return nicetop::Bound::Closed;
  if (b == "open") return nicetop::Bound::Open;
  throw nicetop::InvalidParameter("bound must be closed or open");
}

int run_example_shrinking(const ExampleArgs& a, const OutputOptions& out,
                          bool with_floor) {
  using namespace nicetop;
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("example");
  Rat r0 = parse_rat(a.r0);
  CutIdeal j1 = CutIdeal::make_cut(parse_rat(a.j1), parse_bound(a.j1_bound));
  report["config"].update(Json{{"which", with_floor ? "2.7p" : "2.7"},
                               {"r0", a.r0},
                               {"j1", to_json(j1)}});

  SymbolicOpenFamily U;
  if (with_floor) {
    CutIdeal j2 = CutIdeal::make_cut(parse_rat(a.j2), parse_bound(a.j2_bound));
    report["config"]["j2"] = to_json(j2);
    U = shrinking_chain_with_floor(r0, j1, j2);
  } else {
    U = shrinking_chain_family(r0, j1);
  }

  OpenConditions c = eval_open_conditions_symbolic(U);
  PatternRing inf = infimum_of_open(U);
  bool inf_member = member_of(U, inf);
  bool inf_nice = check_pattern(inf).all_ok();

  Json results;
  results["conditions"] = conditions_json(c);
  results["infimum"] = to_json(inf);
  results["infimum_is_member"] = inf_member;
  results["infimum_is_nice"] = inf_nice;

  bool holds = false;
  std::string claim;
  if (with_floor) {
    // the glued-in floor is the unique minimal member, yet its intersection
    // with a mid-sweep instance escapes the family
    PatternRing escape = intersect_rings(
        U.generators.at(0), instance_at_value(U.pieces.at(0), r0 / 2));
    bool escape_nice = check_pattern(escape).all_ok();
    bool escape_inside = member_of(U, escape);
    results["escape"] = Json{{"pattern", to_json(escape)},
                             {"is_nice", escape_nice},
                             {"is_member", escape_inside}};
    holds = c.f && !c.e && escape_nice && !escape_inside;
    claim = "(f) true, (e) false";
  } else {
    // the infimum closes the sweep exactly and is nice, but not a member
    PatternRing expected = PatternRing::filled(2, ov());
    expected.entries[0][1] = CutIdeal::make_cut(r0, Bound::Closed);
    expected.entries[1][0] = j1;
    results["infimum_matches_limit_ring"] = inf == expected;
    holds = c.e && !c.d && inf == expected && !inf_member && inf_nice;
    claim = "(e) true, (d) false";
  }
  results["claim"] = claim;
  results["holds"] = holds;
  report["results"] = results;

  std::ostringstream text;
  text << kToolVersion << " example " << (with_floor ? "2.7p" : "2.7") << "\n"
       << "conditions: a=" << c.a << " b=" << c.b << " c=" << c.c
       << " d=" << c.d << " e=" << c.e << " f=" << c.f << "\n"
       << "infimum member=" << inf_member << " nice=" << inf_nice << "\n"
       << "certificate " << claim << ": " << (holds ? "holds" : "FAILED")
       << "\n";
  finish(report, out, t0, text.str());
  return holds ? 0 : 2;
}

int run_example_chain(const ExampleArgs& a, const OutputOptions& out) {
  using namespace nicetop;
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("example");
  report["config"].update(Json{{"which", "2.13"}, {"n", a.n}, {"depth", a.depth}});
  if (a.depth > 62)
    throw InvalidParameter("chain depth above 62 leaves the mask range");

  std::vector<PatternRing> chain = ascending_nice_chain(a.n, a.depth);
  bool all_nice = true;
  for (const PatternRing& R : chain)
    all_nice = all_nice && check_pattern(R).all_ok();

  bool strict = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    strict = strict && contains(chain[k + 1], chain[k]) &&
             !contains(chain[k], chain[k + 1]);

  // Truncations: the closed union of the first K' closures is the lower set
  // of ring K', whose generic point is ring K' itself.
  FinitePoset order = inclusion_order(chain);
  PosetSpace sp{order};
  bool truncations_ok = true;
  for (int kp = 0; kp < order.n; ++kp) {
    Mask closed = closure_point(sp, kp);
    truncations_ok = truncations_ok && closed == full_mask(kp + 1) &&
                     generic_point(sp, closed) == std::optional<int>(kp);
  }

  // The full family's closed union has no generic member: its least upper
  // cut strictly contains every swept entry and no member reaches it.
  CutIdeal bound = ascending_chain_union_bound();
  bool bound_strict = true;
  for (int k = 1; k <= a.depth; ++k) {
    CutIdeal entry = CutIdeal::make_cut(Rat{1, k}, Bound::Closed);
    bound_strict = bound_strict && contains(bound, entry) &&
                   !contains(entry, bound);
  }

  bool holds = all_nice && strict && truncations_ok && bound_strict;
  report["results"] =
      Json{{"n", a.n},
           {"depth", a.depth},
           {"all_nice", all_nice},
           {"strict_inclusions", strict},
           {"truncation_generic_points", truncations_ok},
           {"limit_bound", to_json(bound)},
           {"bound_strictly_above_members", bound_strict},
           {"holds", holds}};

  std::ostringstream text;
  text << kToolVersion << " example 2.13\n"
       << "chain n=" << a.n << " depth=" << a.depth << "\n"
       << "all nice=" << all_nice << " strict=" << strict
       << " truncation generic points=" << truncations_ok
       << " limit bound strict=" << bound_strict << "\n"
       << "certificate: " << (holds ? "holds" : "FAILED") << "\n";
  finish(report, out, t0, text.str());
  return holds ? 0 : 2;
}

struct SearchArgs {
  std::string what = "reversals";
  int ground = 3;
  int max_members = 5;
};

int run_search(const SearchArgs& a, const OutputOptions& out) {
  using namespace nicetop;
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("search");
  report["config"].update(Json{{"what", a.what},
                               {"ground", a.ground},
                               {"max_members", a.max_members}});

  std::vector<ReversalCertificate> certs = search_reversals();
  CollapseReport collapse = finite_collapse_facts(a.ground, a.max_members);

  Json carr = Json::array();
  bool all_verified = true;
  for (const ReversalCertificate& c : certs) {
    carr.push_back(Json{{"implication", c.implication},
                        {"family", c.family},
                        {"flags", conditions_json(c.flags)},
                        {"verified", c.verified}});
    all_verified = all_verified && c.verified;
  }
  bool no_finite_reversal = !collapse.e_without_d && !collapse.f_without_e &&
                            !collapse.c_without_b && !collapse.f_without_a;
  report["results"] =
      Json{{"certificates", carr},
           {"collapse", Json{{"families", collapse.families},
                             {"opens_checked", collapse.opens_checked},
                             {"e_without_d", collapse.e_without_d},
                             {"f_without_e", collapse.f_without_e},
                             {"c_without_b", collapse.c_without_b},
                             {"f_without_a", collapse.f_without_a}}},
           {"holds", all_verified && no_finite_reversal}};

  std::ostringstream text;
  text << kToolVersion << " search " << a.what << "\n";
  for (const ReversalCertificate& c : certs)
    text << "certificate " << c.implication << " [" << c.family
         << "]: " << (c.verified ? "verified" : "FAILED") << "\n";
  text << "finite collapse: " << collapse.families << " families, "
       << collapse.opens_checked << " opens, reversals found: "
       << (no_finite_reversal ? "none" : "SOME") << "\n";
  finish(report, out, t0, text.str());
  return all_verified && no_finite_reversal ? 0 : 2;
}

struct SpectraArgs {
  std::string what;
  int primes = 4;
  int depth = 100;
  int growth = 2;
};

int run_spectra_demo(const SpectraArgs& a, const OutputOptions& out) {
  using namespace nicetop;
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("spectra");
  report["config"].update(Json{{"what", "demo"}, {"primes", a.primes}});

  SpectralModel M = nested_chain_fixture(a.primes, a.primes);
  report["results"]["fixture"] = to_json(M);

  bool all_ok = true;
  Json walks = Json::array();
  for (int r = 0; r < static_cast<int>(M.base.members.size()); ++r) {
    int missing = popcount(full_mask(M.primes) &
                           ~M.cover[static_cast<std::size_t>(r)]);
    LoResult res = lo_from_cofinite(M, r);
    bool ok = res.steps <= missing && satisfies_lo(M, res.member);
    all_ok = all_ok && ok;
    walks.push_back(Json{{"member", r},
                         {"missing", missing},
                         {"steps", res.steps},
                         {"reached", res.member},
                         {"ok", ok}});
  }
  report["results"]["walks"] = walks;

  FamilySpace S{M.base};
  long long closed_checked = 0;
  bool closed_ok = true;
  for (Mask C = 1; C <= all_points(S); ++C) {
    if (!is_closed_set(S, C)) continue;
    ++closed_checked;
    auto lo = closed_set_lo(M, C);
    closed_ok = closed_ok && lo && has(C, *lo) && satisfies_lo(M, *lo);
  }
  report["results"]["closed_sets_checked"] = closed_checked;
  report["results"]["closed_set_lo_ok"] = closed_ok;

  // Finite-scale half of the non-existence conditions, on a fixture with no
  // fully covering member.
  SpectralModel no_lo = make_spectral_model(
      NiceFamily{2, {bit(0), bit(0) | bit(1)}}, 2, {bit(0), 0});
  FinalConditionsReport fin = check_final_conditions(no_lo);
  report["results"]["final_conditions"] =
      Json{{"no_lo_member", fin.no_lo_member},
           {"no_maximal_cover", fin.no_maximal_cover},
           {"finite_artifact", fin.finite_artifact},
           {"note", fin.note}};

  bool holds = all_ok && closed_ok && fin.finite_artifact;
  report["results"]["holds"] = holds;

  std::ostringstream text;
  text << kToolVersion << " spectra demo\n"
       << "refinement walks: " << walks.size() << ", all within bound: "
       << (all_ok ? "yes" : "NO") << "\n"
       << "closed sets: " << closed_checked
       << ", lying-over member found in each: " << (closed_ok ? "yes" : "NO")
       << "\n"
       << "finite model note: " << fin.note << "\n"
       << (holds ? "all checks passed\n" : "checks FAILED\n");
  finish(report, out, t0, text.str());
  return holds ? 0 : 2;
}

int run_spectra_lazy(const SpectraArgs& a, const OutputOptions& out) {
  using namespace nicetop;
  auto t0 = std::chrono::steady_clock::now();
  Json report = report_skeleton("spectra");
  report["config"].update(
      Json{{"what", "lazy"}, {"depth", a.depth}, {"growth", a.growth}});

  LazyChainModel M = tail_chain_model(a.growth);
  LazyChainReport rep = check_lazy_chain(M, a.depth);
  bool holds = rep.members_strictly_descend && rep.covers_strictly_grow &&
               rep.chains_inside_every_tail && !rep.full_cover_reached;
  report["results"] =
      Json{{"depth", rep.depth},
           {"members_strictly_descend", rep.members_strictly_descend},
           {"covers_strictly_grow", rep.covers_strictly_grow},
           {"chains_inside_every_tail", rep.chains_inside_every_tail},
           {"full_cover_reached", rep.full_cover_reached},
           {"holds", holds}};

  std::ostringstream text;
  text << kToolVersion << " spectra lazy\n"
       << "depth " << rep.depth << ": descend="
       << rep.members_strictly_descend
       << " grow=" << rep.covers_strictly_grow
       << " tails=" << rep.chains_inside_every_tail
       << " full cover=" << rep.full_cover_reached << "\n"
       << (holds ? "strict growth verified\n" : "verification FAILED\n");
  finish(report, out, t0, text.str());
  return holds ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-topology verification toolkit"};
  app.require_subcommand(1);
  // global flags may appear after the subcommand; they fall through to here
  app.fallthrough();

  OutputOptions out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", out.path, "Write the report to a file");

  int threads_flag = 1;
  app.add_option("--threads", threads_flag, "Worker count (1-64)")
      ->check(CLI::Range(1, 64));

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--max-n", va.max_n, "Poset sweep size cap (1-6)")
      ->check(CLI::Range(1, 6));
  verify->add_flag("--families", va.families, "Also sweep member families");
  verify->add_option("--ground", va.ground, "Family ground-set size (1-4)")
      ->check(CLI::Range(1, 4));
  verify->add_option("--max-members", va.max_members, "Family member cap (1-6)")
      ->check(CLI::Range(1, 6));
  verify->add_option("--oracle-pairs", va.oracle_pairs,
                     "Random cut pairs for the grid oracle (0 = skip)")
      ->check(CLI::Range(0, 1000000));
  verify->add_option("--grid-q", va.grid_q, "Oracle grid denominator")
      ->check(CLI::Range(1, 1024));
  verify->add_option("--grid-B", va.grid_b, "Oracle grid window")
      ->check(CLI::Range(1, 1024));
  verify->add_option("--seed", va.seed, "Oracle RNG seed");

  ExampleArgs ea;
  CLI::App* example =
      app.add_subcommand("example", "Reproduce a worked example");
  example->add_option("which", ea.which, "One of: 2.7, 2.7p, 2.13")
      ->required()
      ->check(CLI::IsMember({"2.7", "2.7p", "2.13"}));
  example->add_option("--r0", ea.r0, "Interval bound (rational)");
  example->add_option("--j1", ea.j1, "Lower-left cut point (rational)");
  example->add_option("--j1-bound", ea.j1_bound, "Lower-left cut bound")
      ->check(CLI::IsMember({"closed", "open"}));
  example->add_option("--j2", ea.j2, "Floor's lower-left cut point");
  example->add_option("--j2-bound", ea.j2_bound, "Floor's cut bound")
      ->check(CLI::IsMember({"closed", "open"}));
  example->add_option("--n", ea.n, "Chain matrix size");
  example->add_option("--depth", ea.depth, "Chain length");

  SearchArgs sa;
  CLI::App* search =
      app.add_subcommand("search", "Reversal certificates and collapse facts");
  search->add_option("what", sa.what, "Search target")
      ->check(CLI::IsMember({"reversals"}));
  search->add_option("--ground", sa.ground, "Collapse sweep ground size");
  search->add_option("--max-members", sa.max_members,
                     "Collapse sweep member cap");

  SpectraArgs pa;
  CLI::App* spectra =
      app.add_subcommand("spectra", "Prime-cover fixtures and chain models");
  spectra->add_option("what", pa.what, "One of: demo, lazy")
      ->required()
      ->check(CLI::IsMember({"demo", "lazy"}));
  spectra->add_option("--primes", pa.primes, "Prime-universe size");
  spectra->add_option("--depth", pa.depth, "Lazy-chain verification depth");
  spectra->add_option("--growth", pa.growth, "Lazy-chain cover growth rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    va.threads = nicetop::thread_count_from_env(threads_flag);
    if (verify->parsed()) return run_verify(va, out);
    if (example->parsed()) {
      if (ea.which == "2.13") return run_example_chain(ea, out);
      return run_example_shrinking(ea, out, ea.which == "2.7p");
    }
    if (search->parsed()) return run_search(sa, out);
    if (spectra->parsed()) {
      if (pa.what == "demo") return run_spectra_demo(pa, out);
      return run_spectra_lazy(pa, out);
    }
  } catch (const nicetop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

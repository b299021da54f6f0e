#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "pnc/catalog.hpp"
#include "pnc/classfun.hpp"
#include "pnc/permstd.hpp"
#include "pnc/report.hpp"
#include "pnc/selftest.hpp"

namespace {

using namespace pnc;
using nlohmann::json;

struct GlobalOptions {
  bool as_json = false;
  std::size_t bound = kDefaultAnalysisBound;
  std::string cache_dir;
  std::uint64_t seed = kDefaultSeed;
  double budget_seconds = 300.0;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Character table for a spec, going through the persistent cache when a
/// cache directory is configured.
const CharacterTable& table_for(const std::string& spec, const Group& g, const GlobalOptions& go,
                                AnalysisRecord& rec) {
  auto t0 = std::chrono::steady_clock::now();
  if (!go.cache_dir.empty()) {
    if (auto cached = load_table_cache(g, spec, go.cache_dir)) {
      const CharacterTable& t = adopt_character_table(std::move(*cached));
      rec.table_source = "cache";
      rec.timings_ms["table"] = ms_since(t0);
      return t;
    }
  }
  const CharacterTable& t = character_table(g);
  rec.table_source = "computed";
  rec.timings_ms["table"] = ms_since(t0);
  if (!go.cache_dir.empty()) write_table_cache(t, spec, go.cache_dir);
  return t;
}

int run_table(const std::string& spec_text, const GlobalOptions& go) {
  auto t0 = std::chrono::steady_clock::now();
  Group g = make_group(spec_text).group;
  if (g.order() > go.bound) {
    std::cerr << "group order " << g.order() << " exceeds the analysis bound " << go.bound
              << " (raise with --bound)\n";
    return 2;
  }
  AnalysisRecord rec;
  rec.spec = spec_text;
  const CharacterTable& t = table_for(spec_text, g, go, rec);
  rec.timings_ms["total"] = ms_since(t0);
  if (go.as_json) {
    json j = table_to_json(spec_text, t);
    j["timings_ms"] = rec.timings_ms;
    j["table_source"] = rec.table_source;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_table_text(spec_text, t);
  }
  return 0;
}

int run_analyze(const std::string& spec_text, const GlobalOptions& go) {
  auto t0 = std::chrono::steady_clock::now();
  Group g = make_group(spec_text).group;
  EngineOptions opts;
  opts.bound = go.bound;
  opts.budget_seconds = go.budget_seconds;
  AnalysisRecord rec;
  rec.spec = spec_text;
  rec.table_source = "none";

  // seed the in-process memo from the persistent cache; the verdict then
  // reuses the stored table instead of running the table computation
  if (!go.cache_dir.empty() && g.order() <= go.bound && !g.is_abelian()) {
    if (auto cached = load_table_cache(g, spec_text, go.cache_dir)) {
      adopt_character_table(std::move(*cached));
      rec.table_source = "cache";
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.verdict = decide_pnc(g, opts);
  rec.timings_ms["decide"] = ms_since(t1);

  std::optional<std::uint64_t> digest;
  if (const CharacterTable* t = character_table_if_memoized(g)) {
    digest = table_digest(*t);
    if (rec.table_source == "none") rec.table_source = "computed";
    if (!go.cache_dir.empty() && rec.table_source == "computed")
      write_table_cache(*t, spec_text, go.cache_dir);
  }
  rec.table_digest = digest;
  rec.timings_ms["total"] = ms_since(t0);
  if (go.as_json) {
    json j = verdict_to_json(spec_text, rec.verdict, digest);
    j["timings_ms"] = rec.timings_ms;
    j["table_source"] = rec.table_source;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_verdict_text(spec_text, rec.verdict);
  }
  return 0;
}

int run_pair(const std::string& spec_text, const std::string& xs, const std::string& ys,
             bool use_std, const GlobalOptions& go) {
  GroupSpec spec = parse_spec(spec_text);
  Group g = make_group(spec).group;
  Perm x = Perm::parse_cycles(xs, g.degree());
  Perm y = Perm::parse_cycles(ys, g.degree());
  if (!g.contains(x) || !g.contains(y)) {
    std::cerr << "permutation outside the group\n";
    return 2;
  }
  json j;
  j["spec"] = spec_text;
  j["pair"] = {x.cycle_string(), y.cycle_string()};
  j["witnesses"] = json::array();
  j["obstructions"] = json::array();
  std::vector<std::string> notes;
  bool verdict;
  if (use_std) {
    if (spec.factors.size() != 1 || spec.factors[0].family != "S") {
      std::cerr << "--std requires a plain symmetric-group spec S(n)\n";
      return 2;
    }
    StdPairReport rep = std_pnc_pair(x, y, g.degree());
    bool chr = std_pnc_char_check(x, y, g.degree());
    if (rep.verdict != chr) {
      std::cerr << "internal defect: the two standard-representation routes disagree\n";
      return 1;
    }
    verdict = rep.verdict;
    notes.push_back(std::string("transitive: ") + (rep.transitive ? "yes" : "no"));
    notes.push_back("commutator subgroup order: " +
                    std::to_string(rep.commutator_subgroup_order));
    notes.push_back(std::string("stabilizer meets every commutator coset: ") +
                    (rep.coset_coverage ? "yes" : "no"));
    notes.push_back("cross-checked against the coset-sum criterion for fix(g)-1");
  } else {
    EngineOptions opts;
    opts.bound = go.bound;
    PairDecision dec = is_pnc_for_pair(g, x, y, opts);
    verdict = dec.pnc;
    if (dec.witness) {
      const CharacterTable& t = character_table(g);
      notes.push_back("witness irreducible #" + std::to_string(*dec.witness) + " of degree " +
                      std::to_string(t.degrees[static_cast<std::size_t>(*dec.witness)]));
      json w;
      w["subgroup"] = json{{"order", Group::generate({x, y}).order()},
                           {"generators", json::array({x.cycle_string(), y.cycle_string()})}};
      w["irreducibles"] = json::array({*dec.witness});
      j["witnesses"].push_back(w);
    } else {
      notes.push_back("no irreducible is PNC for the generated subgroup");
    }
  }
  j["status"] = verdict ? "PNC" : "NOT_PNC";
  j["notes"] = notes;
  if (go.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair " << x.cycle_string() << ", " << y.cycle_string() << " in " << spec_text
              << ": " << (verdict ? "noncommutes purely" : "does not noncommute purely") << "\n";
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
  }
  return 0;
}

int run_obstruct(const std::string& spec_text, const GlobalOptions& go) {
  MadeGroup made = make_group(spec_text);
  std::optional<std::pair<Perm, Perm>> seed;
  if (made.named.count("r") && made.named.count("f"))
    seed = std::make_pair(made.named.at("r"), made.named.at("f"));
  PncVerdict v;
  if (auto rep = d4_conjugacy_obstruction(made.group, seed)) {
    v.status = PncStatus::NotPnc;
    v.obstructions.push_back(std::move(*rep));
    v.notes.push_back("shortcut obstruction: order-8 dihedral subgroup with fused central "
                      "involution");
  } else {
    v.status = PncStatus::Undecided;
    v.notes.push_back("no shortcut obstruction fired; run 'analyze' for the full decision");
  }
  if (go.as_json)
    std::cout << verdict_to_json(spec_text, v).dump(2) << "\n";
  else
    std::cout << render_verdict_text(spec_text, v);
  return 0;
}

int run_survey_cmd(const GlobalOptions& go) {
  std::cout << run_survey(go.bound, go.as_json, go.budget_seconds);
  return 0;
}

int run_selftest(const GlobalOptions& go) {
  auto results = run_acceptance({}, go.seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << format_result_line(r) << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "selftest: all criteria passed" : "selftest: FAILURES present") << "\n";
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for purely noncommuting (PNC) finite permutation groups"};
  app.require_subcommand(1);

  GlobalOptions go;
  app.add_flag("--json", go.as_json, "emit JSON documents");
  app.add_option("--bound", go.bound, "full-analysis order bound (default 600)");
  app.add_option("--cache", go.cache_dir, "character table cache directory");
  app.add_option("--seed", go.seed, "seed for sampled checks (default 1729)");
  app.add_option("--budget-seconds", go.budget_seconds,
                 "wall-clock budget for one analysis (default 300)");

  std::string spec_text, perm_x, perm_y;
  bool use_std = false;

  auto* t = app.add_subcommand("table", "print the character table of a group spec");
  t->add_option("spec", spec_text, "group spec, e.g. \"S(4)\"")->required();

  auto* a = app.add_subcommand("analyze", "full PNC/SPNC analysis of a group spec");
  a->add_option("spec", spec_text, "group spec")->required();

  auto* p = app.add_subcommand("pair", "decide whether a pair noncommutes purely");
  p->add_option("spec", spec_text, "group spec")->required();
  p->add_option("x", perm_x, "first permutation, cycle notation")->required();
  p->add_option("y", perm_y, "second permutation, cycle notation")->required();
  p->add_flag("--std", use_std, "use the standard-representation test (requires S(n))");

  auto* o = app.add_subcommand("obstruct", "run only the shortcut obstructions");
  o->add_option("spec", spec_text, "group spec")->required();

  app.add_subcommand("survey", "analyze the whole built-in catalog");
  app.add_subcommand("selftest", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("table")) return run_table(spec_text, go);
    if (app.got_subcommand("analyze")) return run_analyze(spec_text, go);
    if (app.got_subcommand("pair")) return run_pair(spec_text, perm_x, perm_y, use_std, go);
    if (app.got_subcommand("obstruct")) return run_obstruct(spec_text, go);
    if (app.got_subcommand("survey")) return run_survey_cmd(go);
    if (app.got_subcommand("selftest")) return run_selftest(go);
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

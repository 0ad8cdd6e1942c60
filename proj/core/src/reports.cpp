#include "rsums/reports.hpp"

#include <stdexcept>

#include <json.hpp>

#include "rsums/errors.hpp"
#include "rsums/parse.hpp"

namespace rsums {

using nlohmann::json;

namespace {

json header(const char* kind) {
  return json{{"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("schema_version", 0) != kReportSchemaVersion ||
      j.value("kind", "") != kind)
    throw std::invalid_argument(std::string("expected a '") + kind +
                                "' document, schema version 1");
}

json parse_json(std::string_view text) {
  return json::parse(text.begin(), text.end());
}

std::vector<uint32_t> indices(const json& j) {
  return j.get<std::vector<uint32_t>>();
}

}  // namespace

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::AboveThreshold: return "above-threshold";
    case Regime::AtThreshold: return "at-threshold";
    case Regime::BelowThreshold: return "below-threshold";
  }
  return "?";
}

namespace {

Regime regime_from_name(const std::string& name) {
  if (name == "above-threshold") return Regime::AboveThreshold;
  if (name == "at-threshold") return Regime::AtThreshold;
  if (name == "below-threshold") return Regime::BelowThreshold;
  throw std::invalid_argument("unknown regime '" + name + "'");
}

}  // namespace

std::string serialize_triple(const TripleFile& triple) {
  json j = header("triple");
  j["group"] = triple.group;
  j["A"] = triple.a;
  j["B"] = triple.b;
  j["S"] = triple.s;
  return j.dump(2);
}

TripleFile parse_triple(std::string_view json_text) {
  json j = parse_json(json_text);
  expect_kind(j, "triple");
  return TripleFile{j.at("group").get<std::string>(), indices(j.at("A")),
                    indices(j.at("B")), indices(j.at("S"))};
}

TripleFile to_triple_file(const GSubset& a, const GSubset& b, const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (!a.group().has_coordinates())
    throw std::invalid_argument("only product groups serialize to files");
  return TripleFile{a.group().presentation(), a.elements(), b.elements(),
                    s.elements()};
}

CriticalTriple materialize(const TripleFile& triple) {
  Group g = parse_group(triple.group);
  return CriticalTriple{GSubset::from_indices(g, triple.a),
                        GSubset::from_indices(g, triple.b),
                        GSubset::from_indices(g, triple.s)};
}

std::string serialize_recipe(const Recipe& recipe) {
  json j = header("recipe");
  j["group"] = recipe.group;
  j["sigma"] = recipe.sigma;
  j["s"] = recipe.s;
  j["b_s"] = recipe.b_s;
  j["b"] = recipe.b;
  j["k"] = recipe.k;
  j["l"] = recipe.l;
  j["reps"] = recipe.reps;
  return j.dump(2);
}

Recipe parse_recipe(std::string_view json_text) {
  json j = parse_json(json_text);
  // A witness file is a superset of a recipe; accept it directly.
  if (j.is_object() && j.value("kind", "") == "critical_witness")
    return witness_recipe(parse_witness(json_text));
  expect_kind(j, "recipe");
  return Recipe{j.at("group").get<std::string>(), indices(j.at("sigma")),
                j.at("s").get<uint32_t>(),        j.at("b_s").get<uint32_t>(),
                j.at("b").get<uint32_t>(),        j.at("k").get<uint32_t>(),
                j.at("l").get<uint32_t>(),        indices(j.at("reps"))};
}

CriticalTriple build_from_recipe(const Recipe& recipe) {
  Group g = parse_group(recipe.group);
  auto sigma = Subgroup::from_carrier(GSubset::from_indices(g, recipe.sigma));
  if (!sigma) throw std::invalid_argument("recipe sigma is not a subgroup");
  CriticalPairParams params{0, recipe.b, recipe.k, recipe.l, recipe.reps};
  return lift_critical_triple(g, *sigma, recipe.s, recipe.b_s, params);
}

std::string serialize_bound_report(const BoundReport& r) {
  json j = header("bound_report");
  j["sizes"] = {{"G", r.group_order},
                {"A", r.size_a},
                {"B", r.size_b},
                {"S", r.size_s}};
  j["constants"] = {{"L_G", r.l_g}, {"L_S", r.l_s}};
  j["regime"] = regime_name(r.regime);
  j["achieved"] = r.achieved;
  j["bound"] = r.bound;
  j["tight"] = r.tight;
  j["violation"] = r.violation;
  return j.dump(2);
}

BoundReport parse_bound_report(std::string_view json_text) {
  json j = parse_json(json_text);
  expect_kind(j, "bound_report");
  BoundReport r;
  r.group_order = j.at("sizes").at("G").get<uint32_t>();
  r.size_a = j.at("sizes").at("A").get<uint32_t>();
  r.size_b = j.at("sizes").at("B").get<uint32_t>();
  r.size_s = j.at("sizes").at("S").get<uint32_t>();
  r.l_g = j.at("constants").at("L_G").get<uint32_t>();
  r.l_s = j.at("constants").at("L_S").get<uint32_t>();
  r.regime = regime_from_name(j.at("regime").get<std::string>());
  r.achieved = j.at("achieved").get<uint32_t>();
  r.bound = j.at("bound").get<int64_t>();
  r.tight = j.at("tight").get<bool>();
  r.violation = j.at("violation").get<bool>();
  return r;
}

std::string serialize_witness(const CriticalWitness& w) {
  const Group& g = w.sigma.group();
  if (!g.has_coordinates())
    throw std::invalid_argument("only product-group witnesses serialize");
  json j = header("critical_witness");
  j["group"] = g.presentation();
  j["anchor_z"] = w.anchor_z;
  j["s"] = w.s;
  j["b_s"] = w.b_s;
  j["aligned"] = w.aligned;
  j["sigma"] = w.sigma.carrier().elements();
  json classes = json::array();
  for (const GSubset& cls : w.s_classes) classes.push_back(cls.elements());
  j["s_classes"] = std::move(classes);
  j["quotient_order"] = w.quotient_order;
  j["b"] = w.b;
  j["d"] = w.d;
  j["k"] = w.k;
  j["l"] = w.l;
  j["m"] = w.m;
  j["reps"] = w.reps;
  j["y_valid"] = w.y_valid;
  j["y_translates"] = w.y_translates;
  if (w.exception_pair) {
    j["exception_pair"] = {{"z1", w.exception_pair->first},
                           {"z2", w.exception_pair->second}};
  } else {
    j["exception_pair"] = nullptr;
  }
  return j.dump(2);
}

CriticalWitness parse_witness(std::string_view json_text) {
  json j = parse_json(json_text);
  expect_kind(j, "critical_witness");
  Group g = parse_group(j.at("group").get<std::string>());
  auto sigma =
      Subgroup::from_carrier(GSubset::from_indices(g, indices(j.at("sigma"))));
  if (!sigma) throw std::invalid_argument("witness sigma is not a subgroup");
  std::vector<GSubset> classes;
  for (const json& cls : j.at("s_classes"))
    classes.push_back(GSubset::from_indices(g, indices(cls)));
  std::optional<std::pair<uint32_t, uint32_t>> pair;
  if (!j.at("exception_pair").is_null())
    pair = std::make_pair(j.at("exception_pair").at("z1").get<uint32_t>(),
                          j.at("exception_pair").at("z2").get<uint32_t>());
  return CriticalWitness{j.at("anchor_z").get<uint32_t>(),
                         j.at("s").get<uint32_t>(),
                         j.at("b_s").get<uint32_t>(),
                         j.at("aligned").get<bool>(),
                         std::move(*sigma),
                         std::move(classes),
                         j.at("quotient_order").get<uint32_t>(),
                         j.at("b").get<uint32_t>(),
                         j.at("d").get<uint32_t>(),
                         j.at("k").get<uint32_t>(),
                         j.at("l").get<uint32_t>(),
                         j.at("m").get<uint32_t>(),
                         indices(j.at("reps")),
                         j.at("y_valid").get<bool>(),
                         indices(j.at("y_translates")),
                         pair};
}

Recipe witness_recipe(const CriticalWitness& w) {
  const Group& g = w.sigma.group();
  if (!g.has_coordinates())
    throw std::invalid_argument("only product-group witnesses serialize");
  return Recipe{g.presentation(), w.sigma.carrier().elements(), w.s, w.b_s,
                w.b,              w.k,                          w.l, w.reps};
}

namespace {

json config_json(const SearchConfig& c) {
  // `jobs` is deliberately omitted: it distributes work without changing
  // the result, and reports must be byte-identical across job counts.
  json j;
  j["groups"] = c.groups;
  j["max_order"] = c.max_order;
  j["s_size_cap"] = c.s_size_cap;
  j["mode"] = c.mode == SearchConfig::Mode::Exhaustive ? "exhaustive" : "random";
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["at_threshold_only"] = c.at_threshold_only;
  j["triple_cap"] = c.triple_cap;
  j["time_budget_ms"] = c.time_budget_ms;
  return j;
}

SearchConfig config_from_json(const json& j) {
  SearchConfig c;
  c.groups = j.at("groups").get<std::vector<std::string>>();
  c.max_order = j.at("max_order").get<uint32_t>();
  c.s_size_cap = j.at("s_size_cap").get<uint32_t>();
  c.mode = j.at("mode").get<std::string>() == "exhaustive"
               ? SearchConfig::Mode::Exhaustive
               : SearchConfig::Mode::Random;
  c.samples = j.at("samples").get<uint64_t>();
  c.seed = j.at("seed").get<uint64_t>();
  c.at_threshold_only = j.at("at_threshold_only").get<bool>();
  c.triple_cap = j.at("triple_cap").get<uint64_t>();
  c.time_budget_ms = j.at("time_budget_ms").get<uint64_t>();
  return c;
}

}  // namespace

std::string serialize_survey(const SurveyReport& report) {
  json j = header("survey_report");
  j["config"] = config_json(report.config);
  json tallies = json::array();
  for (const GroupTally& t : report.tallies) {
    tallies.push_back({{"group", t.group},
                       {"checked", t.checked},
                       {"at_threshold", t.at_threshold},
                       {"above_threshold", t.above_threshold},
                       {"below_threshold", t.below_threshold},
                       {"infeasible", t.infeasible},
                       {"tight", t.tight},
                       {"violations", t.violations}});
  }
  j["tallies"] = std::move(tallies);
  json tights = json::array();
  for (const TightFingerprint& f : report.tights) {
    tights.push_back({{"group", f.group},
                      {"A", f.a},
                      {"B", f.b},
                      {"S", f.s},
                      {"witness",
                       {{"aligned", f.aligned},
                        {"sigma", f.sigma},
                        {"s", f.anchor_s},
                        {"b_s", f.anchor_bs},
                        {"b", f.partner_b},
                        {"d", f.d},
                        {"k", f.k},
                        {"l", f.l},
                        {"m", f.m},
                        {"reps", f.reps}}}});
  }
  j["tight_triples"] = std::move(tights);
  return j.dump(2);
}

SurveyReport parse_survey(std::string_view json_text) {
  json j = parse_json(json_text);
  expect_kind(j, "survey_report");
  SurveyReport report;
  report.config = config_from_json(j.at("config"));
  for (const json& t : j.at("tallies")) {
    GroupTally tally;
    tally.group = t.at("group").get<std::string>();
    tally.checked = t.at("checked").get<uint64_t>();
    tally.at_threshold = t.at("at_threshold").get<uint64_t>();
    tally.above_threshold = t.at("above_threshold").get<uint64_t>();
    tally.below_threshold = t.at("below_threshold").get<uint64_t>();
    tally.infeasible = t.at("infeasible").get<uint64_t>();
    tally.tight = t.at("tight").get<uint64_t>();
    tally.violations = t.at("violations").get<uint64_t>();
    report.tallies.push_back(std::move(tally));
  }
  for (const json& f : j.at("tight_triples")) {
    TightFingerprint fp;
    fp.group = f.at("group").get<std::string>();
    fp.a = indices(f.at("A"));
    fp.b = indices(f.at("B"));
    fp.s = indices(f.at("S"));
    const json& w = f.at("witness");
    fp.aligned = w.at("aligned").get<bool>();
    fp.sigma = indices(w.at("sigma"));
    fp.anchor_s = w.at("s").get<uint32_t>();
    fp.anchor_bs = w.at("b_s").get<uint32_t>();
    fp.partner_b = w.at("b").get<uint32_t>();
    fp.d = w.at("d").get<uint32_t>();
    fp.k = w.at("k").get<uint32_t>();
    fp.l = w.at("l").get<uint32_t>();
    fp.m = w.at("m").get<uint32_t>();
    fp.reps = indices(w.at("reps"));
    report.tights.push_back(std::move(fp));
  }
  return report;
}

}  // namespace rsums

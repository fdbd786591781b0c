#include "einkit/report.hpp"

#include <json.hpp>

#include <sstream>

namespace einkit {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "md" || s == "markdown") return Format::markdown;
  throw std::invalid_argument("unknown format: " + s);
}

std::vector<CaseReport> run_cases(const std::vector<const SubgroupSpec*>& rows, const SampleConfig& base, Backend b) {
  std::vector<CaseReport> out;
  SampleConfig last;
  std::vector<EinPoint> samples;
  bool have = false;
  for (const auto* s : rows) {
    auto cfg = sample_config_for(*s, base);
    if (!have || cfg.include_sl2_grid != last.include_sl2_grid) {
      samples = make_samples(cfg);
      last = cfg;
      have = true;
    }
    for (const auto& p : param_combos(*s)) out.push_back(analyze_case(*s, p, samples, b));
  }
  return out;
}

std::string point_text(const EinPoint& x) {
  std::string s = "[";
  for (int i = 0; i < 5; ++i) s += (i ? ":" : "") + to_string(x.rep()(i));
  return s + "]";
}

std::string sample_config_text(const SampleConfig& c) {
  std::ostringstream o;
  o << "grid radius " << to_string(c.grid_radius) << ", step " << to_string(c.grid_step) << ", " << c.random_count
    << " random points, seed " << c.rng_seed;
  if (c.include_lightcone) o << ", " << c.lightcone_count << " lightcone points";
  return o.str();
}

namespace {

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
}

json sig_json(const Signature& s) { return json::array({s.p, s.q, s.r}); }

json summary_json(const CaseReport& r) {
  json j;
  j["name"] = r.name;
  j["table"] = r.table;
  json p = json::object();
  for (const auto& [k, v] : r.params) p[k] = to_string(v);
  j["params"] = p;
  j["sample_size"] = r.orbit.sample_size;
  j["max_dim"] = r.orbit.max_dim;
  j["cohomogeneity_one"] = r.orbit.cohomogeneity_one;
  j["fixed_point_rp4"] = r.orbit.fixed_point_rp4;
  j["translation_signature"] = r.translation ? sig_json(*r.translation) : json(nullptr);
  j["predicate"] = r.predicate ? json(*r.predicate) : json(nullptr);
  j["character_counts"] = r.orbit.character_counts;
  json cl = json::array();
  for (const auto& c : r.claims) cl.push_back({{"claim", c.claim}, {"pass", c.pass}});
  j["claims"] = cl;
  j["discrepancies"] = r.discrepancies;
  j["ok"] = r.ok();
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string histogram_text(const std::map<std::string, int>& h) {
  std::string s;
  for (const auto& [k, v] : h) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

std::string md_cell(std::string s) {
  std::string o;
  for (char c : s) o += c == '|' ? std::string("\\|") : std::string(1, c);
  return o;
}

int passed(const CaseReport& r) {
  int n = 0;
  for (const auto& c : r.claims) n += c.pass;
  return n;
}

}  // namespace

std::string case_to_json(const CaseReport& r, bool with_points) {
  json j = summary_json(r);
  if (with_points) {
    json pts = json::array();
    for (const auto& t : r.orbit.points)
      pts.push_back({{"point", point_text(t.point)},
                     {"dim", t.dim},
                     {"signature", sig_json(t.signature)},
                     {"character", to_string(t.character)}});
    j["points"] = pts;
  }
  return j.dump(2) + "\n";
}

std::string points_to_csv(const CaseReport& r) {
  std::string s = "point,dim,neg,pos,iso,character\n";
  for (const auto& t : r.orbit.points)
    s += point_text(t.point) + "," + std::to_string(t.dim) + "," + std::to_string(t.signature.p) + "," +
         std::to_string(t.signature.q) + "," + std::to_string(t.signature.r) + "," + to_string(t.character) + "\n";
  return s;
}

std::string case_to_markdown(const CaseReport& r, const SubgroupSpec& s) {
  std::ostringstream o;
  o << "# " << r.name << "\n\n";
  if (!r.params.empty()) o << "Parameters: " << params_text(r.params) << "\n\n";
  o << "Generators: `";
  for (std::size_t i = 0; i < s.generators.size(); ++i) o << (i ? "`, `" : "") << s.generators[i];
  o << "`\n\n";
  if (!s.note.empty()) o << "Note: " << s.note << "\n\n";
  o << "| quantity | value |\n|---|---|\n";
  o << "| sampled points | " << r.orbit.sample_size << " |\n";
  o << "| max orbit dimension | " << r.orbit.max_dim << " |\n";
  o << "| cohomogeneity one | " << (r.orbit.cohomogeneity_one ? "yes" : "no") << " |\n";
  o << "| invariant line | " << r.orbit.fixed_point_rp4 << " |\n";
  if (r.translation) o << "| translation part | " << sig_text(*r.translation) << " |\n";
  if (r.predicate) o << "| closed-form predicate | " << (*r.predicate ? "yes" : "no") << " |\n";
  o << "\n| region | orbit classes |\n|---|---|\n";
  const std::vector<std::string> regions = s.model == Model::conf_minkowski || s.model == Model::linear_so13
                                               ? std::vector<std::string>{"patch", "lightcone", "vertex"}
                                               : std::vector<std::string>{"ads", "boundary"};
  for (const auto& region : regions) {
    std::map<std::string, int> h;
    for (const auto& t : r.orbit.points)
      if (in_region(t.point, region)) ++h[std::to_string(t.dim) + ":" + to_string(t.character)];
    if (!h.empty()) o << "| " << region << " | " << histogram_text(h) << " |\n";
  }
  o << "| all | " << histogram_text(r.orbit.character_counts) << " |\n";
  o << "\n| claim | result |\n|---|---|\n";
  for (const auto& c : r.claims) o << "| " << c.claim << " | " << (c.pass ? "PASS" : "FAIL") << " |\n";
  o << "\n" << (r.ok() ? "No discrepancies.\n" : "Discrepancies:\n");
  for (const auto& d : r.discrepancies) o << "- " << d << "\n";
  return o.str();
}

std::string cases_to_json(const std::vector<CaseReport>& rs, const SampleConfig& cfg) {
  json j;
  j["samples"] = sample_config_text(cfg);
  j["cases"] = json::array();
  int bad = 0;
  for (const auto& r : rs) {
    j["cases"].push_back(summary_json(r));
    bad += !r.ok();
  }
  j["failing_cases"] = bad;
  return j.dump(2) + "\n";
}

std::string cases_to_csv(const std::vector<CaseReport>& rs) {
  std::string s =
      "table,name,params,sample_size,max_dim,cohomogeneity_one,fixed_point_rp4,translation,predicate,"
      "claims_passed,claims_total,histogram,ok\n";
  for (const auto& r : rs) {
    s += csv_field(r.table) + "," + csv_field(r.name) + "," + csv_field(params_text(r.params)) + "," +
         std::to_string(r.orbit.sample_size) + "," + std::to_string(r.orbit.max_dim) + "," +
         (r.orbit.cohomogeneity_one ? "1" : "0") + "," + r.orbit.fixed_point_rp4 + "," +
         csv_field(r.translation ? sig_text(*r.translation) : "") + "," +
         (r.predicate ? (*r.predicate ? "1" : "0") : "") + "," + std::to_string(passed(r)) + "," +
         std::to_string(r.claims.size()) + "," + csv_field(histogram_text(r.orbit.character_counts)) + "," +
         (r.ok() ? "1" : "0") + "\n";
  }
  return s;
}

std::string cases_to_markdown(const std::vector<CaseReport>& rs, const SampleConfig& cfg) {
  std::ostringstream o;
  int bad = 0;
  for (const auto& r : rs) bad += !r.ok();
  o << "# Cohomogeneity-one subgroups of SO0(2,3): verification report\n\n";
  o << "Samples: " << sample_config_text(cfg) << ".\n\n";
  o << rs.size() << " cases, " << bad << " with discrepancies.\n";
  std::string table;
  for (const auto& r : rs) {
    if (r.table != table) {
      table = r.table;
      o << "\n## " << table << "\n\n";
      o << "| row | params | max dim | coh. one | invariant line | translation | claims | verdict |\n";
      o << "|---|---|---|---|---|---|---|---|\n";
    }
    o << "| " << md_cell(r.name) << " | " << md_cell(params_text(r.params)) << " | " << r.orbit.max_dim << " | "
      << (r.orbit.cohomogeneity_one ? "yes" : "no") << " | " << r.orbit.fixed_point_rp4 << " | "
      << (r.translation ? sig_text(*r.translation) : "-") << " | " << passed(r) << "/" << r.claims.size() << " | "
      << (r.ok() ? "ok" : "FAIL") << " |\n";
  }
  if (bad) {
    o << "\n## Discrepancies\n\n";
    for (const auto& r : rs)
      for (const auto& d : r.discrepancies) o << "- " << d << "\n";
  }
  return o.str();
}

}  // namespace einkit

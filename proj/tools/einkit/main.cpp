#include "einkit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace einkit;

namespace {

enum Exit { kOk = 0, kDiscrepancy = 1, kUnknown = 2, kBadParam = 3, kIo = 4 };

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string catalog_file;
  std::string filter;
  std::string name;
  std::vector<std::string> params;
  int samples = -1;
  std::optional<std::uint64_t> seed;
  std::string backend = "exact";
  std::string format = "md";
  std::string out;
  double eps = 0;
  bool points = false;
};

std::vector<SubgroupSpec> load_catalog(const Options& o) {
  if (o.catalog_file.empty()) return catalog_entries();
  std::ifstream in(o.catalog_file);
  if (!in) throw Failure{kIo, "cannot read " + o.catalog_file};
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return catalog_from_json(ss.str());
  } catch (const std::exception& e) {
    throw Failure{kIo, o.catalog_file + ": " + e.what()};
  }
}

SampleConfig sample_config(const Options& o) {
  SampleConfig c;
  if (o.seed) {
    c.rng_seed = *o.seed;
  } else if (const char* env = std::getenv("EINKIT_SEED")) {
    try {
      c.rng_seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{kBadParam, "EINKIT_SEED is not an unsigned integer"};
    }
  }
  if (o.samples >= 0) {
    if (o.samples == 0) throw Failure{kBadParam, "sample size must be positive"};
    // the 9x9x9 grid first, random points for the rest
    const int grid = 729;
    if (o.samples >= grid) {
      c.random_count = o.samples - grid;
    } else {
      c.grid_radius = 0;
      c.random_count = o.samples - 1;
    }
  }
  return c;
}

Backend backend(const Options& o) {
  if (o.eps > 0) set_float_eps(o.eps);
  if (o.backend == "exact") return Backend::exact;
  if (o.backend == "float") return Backend::floating;
  throw Failure{kBadParam, "backend must be exact or float"};
}

ParamValues parse_overrides(const std::vector<std::string>& kv) {
  ParamValues p;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Failure{kBadParam, "expected NAME=VALUE, got " + s};
    try {
      p[s.substr(0, eq)] = parse_rat(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw Failure{kBadParam, "not a rational number: " + s.substr(eq + 1)};
    }
  }
  return p;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{kIo, "cannot write " + o.out};
  f << text;
  if (!f.flush()) throw Failure{kIo, "cannot write " + o.out};
}

std::vector<const SubgroupSpec*> select(const Options& o, const std::vector<SubgroupSpec>& cat) {
  auto rows = filter_entries(o.filter, cat);
  if (rows.empty()) throw Failure{kUnknown, "no catalog entry matches '" + o.filter + "'"};
  return rows;
}

int cmd_list(const Options& o) {
  auto cat = load_catalog(o);
  auto rows = filter_entries(o.filter, cat);
  Format f = parse_format(o.format);
  if (f == Format::json) {
    std::vector<SubgroupSpec> sel;
    for (const auto* s : rows) sel.push_back(*s);
    emit(o, catalog_to_json(sel));
    return kOk;
  }
  auto sig = [](const SubgroupSpec& s) {
    if (!s.expected.translation) return std::string("-");
    const auto& t = *s.expected.translation;
    return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
  };
  std::ostringstream out;
  if (f == Format::csv) {
    out << "table,name,dim,translation,cohomogeneity_one,fixed_point_rp4,params\n";
    for (const auto* s : rows) {
      std::string ps;
      for (const auto& r : s->params) ps += (ps.empty() ? "" : "; ") + r.text();
      out << s->table << ",\"" << s->name << "\"," << s->expected.dim << ",\"" << sig(*s) << "\","
          << s->expected.cohomogeneity_one << "," << s->expected.fixed_point_rp4 << ",\"" << ps << "\"\n";
    }
  } else {
    out << "| table | row | dim | translation | coh. one | invariant line | parameters |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto* s : rows) {
      std::string ps;
      for (const auto& r : s->params) ps += (ps.empty() ? "" : "; ") + r.text();
      out << "| " << s->table << " | " << s->name << " | " << s->expected.dim << " | " << sig(*s) << " | "
          << (s->expected.cohomogeneity_one ? "yes" : "no") << " | " << s->expected.fixed_point_rp4 << " | " << ps
          << " |\n";
    }
    out << "\n" << rows.size() << " entries\n";
  }
  emit(o, out.str());
  return kOk;
}

int cmd_export(const Options& o) {
  emit(o, catalog_to_json(catalog_entries()));
  return kOk;
}

int cmd_analyze(const Options& o) {
  auto cat = load_catalog(o);
  const auto* s = lookup(o.name, cat);
  if (!s) throw Failure{kUnknown, "unknown catalog entry: " + o.name};
  ParamValues p;
  try {
    p = resolve_params(*s, parse_overrides(o.params));
  } catch (const ParamError& e) {
    throw Failure{kBadParam, e.what()};
  }
  auto cfg = sample_config_for(*s, sample_config(o));
  Backend b = backend(o);
  Format f = parse_format(o.format);
  auto r = analyze_case(*s, p, make_samples(cfg), b);
  if (f == Format::json)
    emit(o, case_to_json(r, o.points));
  else if (f == Format::csv)
    emit(o, points_to_csv(r));
  else
    emit(o, case_to_markdown(r, *s));
  return r.ok() ? kOk : kDiscrepancy;
}

std::vector<CaseReport> run(const Options& o, SampleConfig& cfg) {
  auto cat = load_catalog(o);
  auto rows = select(o, cat);
  cfg = sample_config(o);
  Backend b = backend(o);
  return run_cases(rows, cfg, b);
}

std::string render(const Options& o, const std::vector<CaseReport>& rs, const SampleConfig& cfg) {
  switch (parse_format(o.format)) {
    case Format::json: return cases_to_json(rs, cfg);
    case Format::csv: return cases_to_csv(rs);
    case Format::markdown: break;
  }
  return cases_to_markdown(rs, cfg);
}

int cmd_verify_all(const Options& o) {
  SampleConfig cfg;
  parse_format(o.format);
  auto rs = run(o, cfg);
  int bad = 0, claims = 0;
  for (const auto& r : rs) {
    bad += static_cast<int>(r.discrepancies.size());
    claims += static_cast<int>(r.claims.size());
  }
  if (!o.out.empty() || o.format != "md") emit(o, render(o, rs, cfg));
  // the claim log always goes to stdout unless it is the report destination
  if (!o.out.empty() || o.format != "md") {
    for (const auto& r : rs)
      for (const auto& d : r.discrepancies) std::cerr << "DISCREPANCY " << d << "\n";
  } else {
    for (const auto& r : rs) {
      std::string tag = r.table + " | " + r.name + (r.params.empty() ? "" : " [" + params_text(r.params) + "]");
      for (const auto& c : r.claims) std::cout << (c.pass ? "ok   " : "FAIL ") << tag << " | " << c.claim << "\n";
      for (const auto& d : r.discrepancies) std::cout << "DISCREPANCY " << d << "\n";
    }
  }
  std::cerr << rs.size() << " cases, " << claims << " claims, " << bad << " discrepancies\n";
  return bad ? kDiscrepancy : kOk;
}

int cmd_report(const Options& o) {
  SampleConfig cfg;
  parse_format(o.format);
  auto rs = run(o, cfg);
  emit(o, render(o, rs, cfg));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"einkit: orbits of subgroups of SO0(2,3) on the Einstein universe"};
  app.require_subcommand(1);
  Options o;

  auto add_run_options = [&](CLI::App* c) {
    c->add_option("--catalog", o.catalog_file, "catalog JSON file instead of the built-in table");
    c->add_option("--samples", o.samples, "patch sample size (grid first, then random points)");
    c->add_option("--seed", o.seed, "random seed (default: EINKIT_SEED or 0)");
    c->add_option("--backend", o.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    c->add_option("--eps", o.eps, "zero tolerance of the float backend");
    c->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    c->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* catalog = app.add_subcommand("catalog", "catalog access");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  list->add_option("--filter", o.filter, "glob over row or table names");
  list->add_option("--catalog", o.catalog_file, "catalog JSON file");
  list->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
  list->add_option("--out", o.out, "output file");
  auto* exp = catalog->add_subcommand("export", "write the built-in catalog as JSON");
  exp->add_option("--out", o.out, "output file");

  auto* analyze = app.add_subcommand("analyze", "analyze one catalog entry");
  analyze->add_option("name", o.name, "catalog row name")->required();
  analyze->add_option("--param", o.params, "parameter override NAME=VALUE");
  analyze->add_flag("--points", o.points, "include every sampled point in JSON output");
  add_run_options(analyze);

  auto* verify = app.add_subcommand("verify-all", "check every expected outcome");
  verify->add_option("--filter", o.filter, "glob over row or table names");
  add_run_options(verify);

  auto* report = app.add_subcommand("report", "write a report over the catalog");
  report->add_option("--filter", o.filter, "glob over row or table names");
  add_run_options(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadParam;
  }

  try {
    if (*list) return cmd_list(o);
    if (*exp) return cmd_export(o);
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify_all(o);
    if (*report) return cmd_report(o);
  } catch (const Failure& f) {
    std::cerr << "einkit: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "einkit: " << e.what() << "\n";
    return kBadParam;
  }
  return kOk;
}

#pragma once

#include "einkit/orbits.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace einkit {

enum class Model { conf_minkowski, so23_direct, sl2_pair, linear_so13 };
std::string to_string(Model m);
Model parse_model(const std::string& s);

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// admissible values of a row parameter, e.g. a in R*, a in [-1,1], lam in R+*
struct ParamRange {
  std::string name;
  std::optional<Rat> lo, hi;
  bool lo_open = true;
  bool hi_open = true;
  std::vector<Rat> excluded;
  std::vector<Rat> samples;
  bool contains(const Rat& x) const;
  std::string text() const;
};

using ParamValues = std::map<std::string, Rat>;

struct ExpectedOutcome {
  int dim = 0;
  bool cohomogeneity_one = true;
  std::string fixed_point_rp4 = "none";
  std::optional<Signature> translation;  // conf_minkowski rows only
  std::vector<std::string> claims;
};

struct SubgroupSpec {
  std::string name;
  std::string table;   // Table1..Table8, Proper, AdS, dS, Kernel
  Model model = Model::conf_minkowski;
  std::string family;  // minkowski, ads, ds: which invariant line the fixed-point theorem predicts
  std::vector<std::string> generators;
  std::vector<ParamRange> params;
  ExpectedOutcome expected;
  bool special = false;
  std::string note;
  std::optional<M5> conjugator;  // set by conjugate_spec
};

const std::vector<SubgroupSpec>& catalog_entries();
const SubgroupSpec* lookup(const std::string& name, const std::vector<SubgroupSpec>& cat = catalog_entries());
// glob over "name" (and over "table" alone); sorted by (table, name)
std::vector<const SubgroupSpec*> filter_entries(const std::string& glob,
                                                const std::vector<SubgroupSpec>& cat = catalog_entries());

// cartesian product of the default samples; a single empty map for unparametrized rows
std::vector<ParamValues> param_combos(const SubgroupSpec& s);
// fills missing parameters from the first sample; throws ParamError on unknown or out-of-range values
ParamValues resolve_params(const SubgroupSpec& s, const ParamValues& overrides);

// generator expressions: "a+YH", "1+YH+e1", "YP+e1-e2", "pair(lam*YE,YH)", "S(3,4)"
ConfAlgElement parse_conf(const std::string& expr, const ParamValues& p = {});
M2 parse_sl2(const std::string& expr, const ParamValues& p = {});
Sl2Pair parse_pair(const std::string& expr, const ParamValues& p = {});
M5 parse_skew(const std::string& expr, Model m);

std::vector<ConfAlgElement> conf_generators(const SubgroupSpec& s, const ParamValues& p);
std::vector<Sl2Pair> pair_generators(const SubgroupSpec& s, const ParamValues& p);
std::vector<M5> instantiate(const SubgroupSpec& s, const ParamValues& p, const MinkowskiChart& c = default_chart());

SubgroupSpec conjugate_spec(const SubgroupSpec& s, const M5& g);

// export/import of the catalog document
std::string catalog_to_json(const std::vector<SubgroupSpec>& cat, int indent = 2);
std::vector<SubgroupSpec> catalog_from_json(const std::string& text);

// verification of one (row, parameter) case against its expected outcome
struct ClaimResult {
  std::string claim;
  bool pass = false;
};
struct CaseReport {
  std::string name;
  std::string table;
  ParamValues params;
  OrbitReport orbit;
  std::optional<Signature> translation;
  std::optional<bool> predicate;  // closed-form cohomogeneity test, conf rows
  std::vector<ClaimResult> claims;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

CaseReport analyze_case(const SubgroupSpec& s, const ParamValues& p, const std::vector<EinPoint>& samples,
                        Backend b = Backend::exact);
// sample set used for a row: chart grid and lightcone, plus SL(2) points for AdS rows
SampleConfig sample_config_for(const SubgroupSpec& s, SampleConfig base);
std::string params_text(const ParamValues& p);

}  // namespace einkit

#include "einkit/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <fnmatch.h>

namespace einkit {

using json = nlohmann::ordered_json;

std::string to_string(Model m) {
  switch (m) {
    case Model::conf_minkowski: return "conf_minkowski";
    case Model::so23_direct: return "so23_direct";
    case Model::sl2_pair: return "sl2_pair";
    case Model::linear_so13: return "linear_so13";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  for (Model m : {Model::conf_minkowski, Model::so23_direct, Model::sl2_pair, Model::linear_so13})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown model: " + s);
}

bool ParamRange::contains(const Rat& x) const {
  if (lo && (lo_open ? x <= *lo : x < *lo)) return false;
  if (hi && (hi_open ? x >= *hi : x > *hi)) return false;
  return std::find(excluded.begin(), excluded.end(), x) == excluded.end();
}

std::string ParamRange::text() const {
  std::string s = name + " in ";
  s += lo ? (lo_open ? "(" : "[") + to_string(*lo) : std::string("(-inf");
  s += ",";
  s += hi ? to_string(*hi) + (hi_open ? ")" : "]") : std::string("inf)");
  if (!excluded.empty()) {
    s += " \\ {";
    for (std::size_t i = 0; i < excluded.size(); ++i) s += (i ? "," : "") + to_string(excluded[i]);
    s += "}";
  }
  return s;
}

std::string params_text(const ParamValues& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
  return s;
}

// ---------------------------------------------------------------------------
// generator expressions

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// signed top-level terms of a sum
std::vector<std::pair<int, std::string>> split_terms(const std::string& expr) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string t = strip(cur);
    if (!t.empty()) out.emplace_back(sign, t);
    cur.clear();
  };
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    // an exponent sign belongs to its number
    bool exponent = i > 0 && (expr[i - 1] == 'e' || expr[i - 1] == 'E') && i > 1 && std::isdigit(static_cast<unsigned char>(expr[i - 2]));
    if (depth == 0 && (c == '+' || c == '-') && !exponent) {
      if (!strip(cur).empty()) flush();
      else if (!cur.empty() || !out.empty() || i > 0) cur.clear();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + expr);
  return out;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

bool is_number(const std::string& f) {
  return !f.empty() && (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '.');
}

// coefficient times at most one basis symbol
std::pair<Rat, std::string> parse_term(const std::string& term, const ParamValues& p) {
  Rat coef = 1;
  std::string sym;
  for (const auto& f : split_top(term, '*')) {
    if (f.empty()) throw std::invalid_argument("empty factor in: " + term);
    if (is_number(f)) {
      coef *= parse_rat(f);
    } else if (auto it = p.find(f); it != p.end()) {
      coef *= it->second;
    } else {
      if (!sym.empty()) throw std::invalid_argument("product of basis symbols: " + term);
      sym = f;
    }
  }
  return {coef, sym};
}

}  // namespace

ConfAlgElement parse_conf(const std::string& expr, const ParamValues& p) {
  ConfAlgElement x;
  for (const auto& [sign, term] : split_terms(expr)) {
    auto [c, sym] = parse_term(term, p);
    c *= sign;
    if (sym.empty())
      x.lambda += c;
    else if (sym == "YE")
      x.X(0) += c;
    else if (sym == "YH")
      x.X(1) += c;
    else if (sym == "YP")
      x.X(2) += c;
    else if (sym == "e1" || sym == "e2" || sym == "e3")
      x.v(sym[1] - '1') += c;
    else
      throw std::invalid_argument("unknown symbol '" + sym + "' in: " + expr);
  }
  return x;
}

M2 parse_sl2(const std::string& expr, const ParamValues& p) {
  M2 m = M2::Zero();
  for (const auto& [sign, term] : split_terms(expr)) {
    auto [c, sym] = parse_term(term, p);
    c *= sign;
    if (sym.empty()) {
      if (c != 0) throw std::invalid_argument("scalar term outside sl2: " + expr);
    } else if (sym == "YE") {
      m += c * sl2::E();
    } else if (sym == "YH") {
      m += c * sl2::H();
    } else if (sym == "YP") {
      m += c * sl2::P();
    } else {
      throw std::invalid_argument("unknown symbol '" + sym + "' in: " + expr);
    }
  }
  return m;
}

Sl2Pair parse_pair(const std::string& expr, const ParamValues& p) {
  std::string s = strip(expr);
  if (s.rfind("pair(", 0) != 0 || s.back() != ')') throw std::invalid_argument("expected pair(X,Y): " + expr);
  auto parts = split_top(s.substr(5, s.size() - 6), ',');
  if (parts.size() != 2) throw std::invalid_argument("expected pair(X,Y): " + expr);
  return {parse_sl2(parts[0], p), parse_sl2(parts[1], p)};
}

M5 parse_skew(const std::string& expr, Model m) {
  std::string s = strip(expr);
  if (s.rfind("S(", 0) != 0 || s.back() != ')') throw std::invalid_argument("expected S(i,j): " + expr);
  auto parts = split_top(s.substr(2, s.size() - 3), ',');
  if (parts.size() != 2) throw std::invalid_argument("expected S(i,j): " + expr);
  int i = std::stoi(parts[0]), j = std::stoi(parts[1]);
  // linear_so13 indexes R^{1,3} = span(e2..e5)
  int shift = m == Model::linear_so13 ? 1 : 0, top = m == Model::linear_so13 ? 4 : 5;
  if (i < 1 || j < 1 || i > top || j > top || i == j) throw std::invalid_argument("bad index pair: " + expr);
  i += shift - 1;
  j += shift - 1;
  M5 out = M5::Zero();
  out(i, j) = Q5()(j, j);
  out(j, i) = -Q5()(i, i);
  return out;
}

std::vector<ConfAlgElement> conf_generators(const SubgroupSpec& s, const ParamValues& p) {
  if (s.model != Model::conf_minkowski) throw std::invalid_argument(s.name + ": not a conformal-algebra row");
  std::vector<ConfAlgElement> out;
  for (const auto& g : s.generators) out.push_back(parse_conf(g, p));
  return out;
}

std::vector<Sl2Pair> pair_generators(const SubgroupSpec& s, const ParamValues& p) {
  if (s.model != Model::sl2_pair) throw std::invalid_argument(s.name + ": not an sl2-pair row");
  std::vector<Sl2Pair> out;
  for (const auto& g : s.generators) out.push_back(parse_pair(g, p));
  return out;
}

std::vector<M5> instantiate(const SubgroupSpec& s, const ParamValues& p, const MinkowskiChart& c) {
  std::vector<M5> out;
  switch (s.model) {
    case Model::conf_minkowski:
      for (const auto& g : conf_generators(s, p)) out.push_back(conf_to_so23(g, c));
      break;
    case Model::sl2_pair:
      for (const auto& g : pair_generators(s, p)) out.push_back(sl2_pair_to_so23(g.X, g.Y));
      break;
    case Model::so23_direct:
    case Model::linear_so13:
      for (const auto& g : s.generators) out.push_back(parse_skew(g, s.model));
      break;
  }
  if (s.conjugator) {
    auto inv = linalg::inverse(MatQ(*s.conjugator));
    for (auto& m : out) m = M5(*s.conjugator * m * *inv);
  }
  return out;
}

SubgroupSpec conjugate_spec(const SubgroupSpec& s, const M5& g) {
  if (M5(g.transpose() * Q5() * g) != Q5()) throw std::invalid_argument("conjugate_spec: not a Q5-isometry");
  SubgroupSpec out = s;
  out.conjugator = s.conjugator ? M5(g * *s.conjugator) : g;
  return out;
}

// ---------------------------------------------------------------------------
// the table

namespace {

const char* kLcNone = "none lightcone 2 any";
const char* kLcAll = "all lightcone 2 degenerate";
const char* kLcSome = "exists lightcone 2 degenerate";
const char* kOpenAll = "all patch 3 open";
const char* kOpenSome = "exists patch 3 open";
const char* kNo3 = "none patch 3 any";

std::vector<std::string> only(const std::string& ch) {
  std::vector<std::string> out{"exists patch 2 " + ch};
  for (const char* o : {"spacelike", "lorentzian", "degenerate"})
    if (ch != o) out.push_back(std::string("none patch 2 ") + o);
  return out;
}

const std::vector<std::string> kAllThree = {"exists patch 2 spacelike", "exists patch 2 lorentzian",
                                            "exists patch 2 degenerate"};

std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ParamRange nonzero(std::vector<Rat> extra_excluded = {}) {
  ParamRange r;
  r.name = "a";
  r.excluded = {Rat(0)};
  r.excluded.insert(r.excluded.end(), extra_excluded.begin(), extra_excluded.end());
  r.samples = {Rat(-2), Rat(-1, 2), Rat(1, 2), Rat(2)};
  return r;
}

ParamRange closed_unit() {
  ParamRange r;
  r.name = "a";
  r.lo = Rat(-1);
  r.hi = Rat(1);
  r.lo_open = r.hi_open = false;
  r.samples = {Rat(-1, 2), Rat(1, 2)};
  return r;
}

ParamRange positive_lambda() {
  ParamRange r;
  r.name = "lam";
  r.lo = Rat(0);
  r.samples = {Rat(1), Rat(2)};
  return r;
}

struct Builder {
  std::vector<SubgroupSpec> rows;

  SubgroupSpec& add(std::string table, std::string name, Model model, std::string family,
                    std::vector<std::string> gens, std::vector<std::string> claims) {
    SubgroupSpec s;
    s.table = table;
    s.name = std::move(name);
    s.model = model;
    s.family = std::move(family);
    s.generators = std::move(gens);
    s.expected.dim = static_cast<int>(s.generators.size());
    s.expected.claims = std::move(claims);
    s.expected.fixed_point_rp4 = s.family == "minkowski" ? "lightlike" : s.family == "ads" ? "spacelike" : "timelike";
    rows.push_back(std::move(s));
    return rows.back();
  }

  // a row of Tables 1-8: name without the table prefix, translation part appended to the generators
  SubgroupSpec& conf(int table, const std::string& name, std::vector<std::string> gens,
                     const std::vector<std::string>& trans, std::vector<std::string> claims) {
    static const Signature heading[] = {{1, 2, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1},
                                        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    gens.insert(gens.end(), trans.begin(), trans.end());
    std::string t = "Table" + std::to_string(table);
    auto& s = add(t, t + ":" + name, Model::conf_minkowski, "minkowski", std::move(gens), std::move(claims));
    s.expected.translation = heading[table - 1];
    return s;
  }
};

std::vector<SubgroupSpec> build_catalog() {
  Builder b;
  const std::vector<std::string> R12 = {"e1", "e2", "e3"}, L2 = {"e1", "e2"}, S2 = {"e2", "e3"},
                                 Pi = {"e1+e2", "e3"}, T1 = {"e1"}, S1 = {"e3"}, L1 = {"e1+e2"}, none;
  const std::vector<std::string> parab = {kLcSome, "exists lightcone 1 lightlike"};

  // full translation part
  b.conf(1, "R+*⋉R12", {"1"}, R12, {kOpenAll, kLcNone, "none any 2 any"}).expected.cohomogeneity_one = false;
  b.conf(1, "(R+*×SO0(1,2))⋉R12", {"1", "YE", "YH", "YP"}, R12, {kOpenAll, kLcAll});
  b.conf(1, "SO0(1,2)⋉R12", {"YE", "YH", "YP"}, R12, {kOpenAll, kLcAll});
  b.conf(1, "exp(R(a+YE))⋉R12", {"a+YE"}, R12, {kOpenAll, kLcAll}).params = {nonzero()};
  b.conf(1, "R12", {}, R12, {kOpenAll, "all lightcone 1 lightlike", "none any 2 any"}).expected.cohomogeneity_one = false;
  b.conf(1, "(R+*×Aff)⋉R12", {"1", "YH", "YP"}, R12, cat({{kOpenAll}, parab}));
  b.conf(1, "Aff⋉R12", {"YH", "YP"}, R12, cat({{kOpenAll}, parab}));
  b.conf(1, "exp(R(a+YP))⋉R12", {"a+YP"}, R12, cat({{kOpenAll}, parab})).params = {nonzero()};
  b.conf(1, "YH⋉R12", {"YH"}, R12, cat({{kOpenAll}, parab}));
  b.conf(1, "(R+×YH)⋉R12", {"1", "YH"}, R12, cat({{kOpenAll}, parab})).note = "R+ read as R+*";
  b.conf(1, "YP⋉R12", {"YP"}, R12, cat({{kOpenAll}, parab}));
  b.conf(1, "exp(R(a+YH)+RYP)⋉R12", {"a+YH", "YP"}, R12, cat({{kOpenAll}, parab})).params = {nonzero()};
  b.conf(1, "YE⋉R12", {"YE"}, R12, {kOpenAll, kLcAll});
  b.conf(1, "(R+×YP)⋉R12", {"1", "YP"}, R12, cat({{kOpenAll}, parab})).note = "R+ read as R+*";
  b.conf(1, "(R+×YE)⋉R12", {"1", "YE"}, R12, {kOpenAll, kLcAll}).note = "R+ read as R+*";
  b.conf(1, "exp(R(a+YH))⋉R12", {"a+YH"}, R12, cat({{kOpenAll}, parab})).params = {nonzero()};

  // Lorentzian plane
  b.conf(2, "(R+*×YH)⋉(Re1⊕Re2)", {"1", "YH"}, L2, cat({only("lorentzian"), {kOpenSome, kLcSome}}));
  b.conf(2, "YH⋉(Re1⊕Re2)", {"YH"}, L2, {"all patch 2 lorentzian", kLcSome});
  b.conf(2, "exp(R(a+YH))⋉(Re1⊕Re2)", {"a+YH"}, L2, cat({only("lorentzian"), {kOpenSome, kLcSome}})).params = {nonzero()};
  b.conf(2, "exp(R(YH+e3))⋉(Re1⊕Re2)", {"YH+e3"}, L2, {kOpenAll, kLcSome});
  b.conf(2, "R+*⋉(Re1⊕Re2)", {"1"}, L2, cat({only("lorentzian"), {kOpenSome, kLcNone}}));
  b.conf(2, "Re1⊕Re2", {}, L2, {"all patch 2 lorentzian", kLcNone});

  // spacelike plane
  b.conf(3, "(R+*×YE)⋉(Re2⊕Re3)", {"1", "YE"}, S2, cat({only("spacelike"), {kOpenSome, kLcAll}}));
  b.conf(3, "YE⋉(Re2⊕Re3)", {"YE"}, S2, {"all patch 2 spacelike", kLcAll});
  b.conf(3, "exp(R(a+YE))⋉(Re2⊕Re3)", {"a+YE"}, S2, cat({only("spacelike"), {kOpenSome, kLcAll}})).params = {nonzero()};
  b.conf(3, "exp(R(YE+e1))⋉(Re2⊕Re3)", {"YE+e1"}, S2, {kOpenAll, kLcAll}).note =
      "elliptic linear part: the vertex-less lightcone is a single orbit";
  b.conf(3, "R+*⋉(Re2⊕Re3)", {"1"}, S2, cat({only("spacelike"), {kOpenSome, kLcNone}}));
  b.conf(3, "Re2⊕Re3", {}, S2, {"all patch 2 spacelike", kLcNone});

  // degenerate plane
  const auto deg = only("degenerate");
  b.conf(4, "Aff⋉Pi_phi", {"YH", "YP"}, Pi, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(4, "exp(R(a+YH)+RYP)⋉Pi_phi", {"a+YH", "YP"}, Pi, cat({deg, {kOpenSome, kLcSome}})).params = {nonzero({Rat(1)})};
  b.conf(4, "(R+*×Aff)⋉Pi_phi", {"1", "YH", "YP"}, Pi, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(4, "exp(R(a+YP))⋉Pi_phi", {"a+YP"}, Pi, cat({deg, {kOpenSome, kLcSome}})).params = {nonzero()};
  b.conf(4, "YP⋉Pi_phi", {"YP"}, Pi, {"all patch 2 degenerate", kLcSome});
  b.conf(4, "exp(R(a+YH))⋉Pi_phi", {"a+YH"}, Pi, cat({deg, {kOpenSome, kLcSome}})).params = {nonzero({Rat(1)})};
  b.conf(4, "(R+*×YP)⋉Pi_phi", {"1", "YP"}, Pi, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(4, "exp(R(1+YH+e1)+RYP)⋉Pi_phi", {"1+YH+e1", "YP"}, Pi, {kOpenAll, kLcSome});
  b.conf(4, "YH⋉Pi_phi", {"YH"}, Pi, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(4, "exp(R(YP+e1))⋉Pi_phi", {"YP+e1"}, Pi, {kOpenAll, kLcSome});
  b.conf(4, "(R+*×YH)⋉Pi_phi", {"1", "YH"}, Pi, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(4, "exp(R(1+YH+e1))⋉Pi_phi", {"1+YH+e1"}, Pi, {kOpenAll, kLcSome});
  b.conf(4, "Pi_phi", {}, Pi, {"all patch 2 degenerate", kLcNone});
  b.conf(4, "exp(R(2+YH)+R(YP+e1))⋉Pi_phi", {"2+YH", "YP+e1"}, Pi, {kOpenAll, kLcSome});
  b.conf(4, "R+*⋉Pi_phi", {"1"}, Pi, cat({deg, {kOpenSome, kLcNone}}));

  // timelike line
  const auto lor = only("lorentzian");
  b.conf(5, "R+*⋉Re1", {"1"}, T1, cat({lor, {kNo3, "all lightcone 1 lightlike"}}));
  b.conf(5, "(R+*×YE)⋉Re1", {"1", "YE"}, T1, {kOpenSome, "none patch 2 any", "exists patch 1 timelike", kLcAll});
  b.conf(5, "YE×Re1", {"YE"}, T1, cat({lor, {kNo3, kLcAll}}));
  b.conf(5, "exp(R(a+YE))⋉Re1", {"a+YE"}, T1, cat({lor, {kNo3, kLcAll}})).params = {nonzero()};

  // spacelike line
  b.conf(6, "R+*⋉Re3", {"1"}, S1, cat({kAllThree, {kNo3, kLcNone}}));
  b.conf(6, "(R+*×YH)⋉Re3", {"1", "YH"}, S1, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(6, "YH×Re3", {"YH"}, S1, cat({kAllThree, {kNo3, kLcSome}}));
  b.conf(6, "exp(R(a+YH))⋉Re3", {"a+YH"}, S1, cat({kAllThree, {kNo3, kLcSome}})).params = {nonzero({Rat(-1), Rat(1)})};
  b.conf(6, "exp(R(1+YH+e1))⋉Re3", {"1+YH+e1"}, S1, cat({kAllThree, {"all patch 2 any", kLcSome}}));
  b.conf(6, "exp(R(-1+YH+e1))⋉Re3", {"-1+YH+e1"}, S1, cat({kAllThree, {"all patch 2 any", kLcSome}}));

  // lightlike line
  const std::vector<std::string> lor_deg = {"exists patch 2 lorentzian", "exists patch 2 degenerate",
                                            "none patch 2 spacelike"};
  b.conf(7, "(R+*×Aff)⋉L", {"1", "YH", "YP"}, L1, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(7, "exp(R(a+YH)+RYP)⋉L", {"a+YH", "YP"}, L1, cat({deg, {kOpenSome, kLcSome}})).params = {nonzero({Rat(1)})};
  b.conf(7, "YH⋉L", {"YH"}, L1, cat({lor, {kNo3, kLcSome}}));
  b.conf(7, "exp(R(a+YP))⋉L", {"a+YP"}, L1, cat({lor_deg, {kNo3, kLcSome}})).params = {nonzero()};
  b.conf(7, "Aff⋉L", {"YH", "YP"}, L1, {"none patch 2 any", kOpenSome, kLcSome});
  b.conf(7, "exp(R(YH+e3)+RYP)⋉L", {"YH+e3", "YP"}, L1, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(7, "(R+*×YP)⋉L", {"1", "YP"}, L1, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(7, "exp(R(YP+e1))⋉L", {"YP+e1"}, L1, {"all patch 2 lorentzian", kLcSome});
  b.conf(7, "YP×L", {"YP"}, L1, cat({deg, {kNo3, kLcSome}}));
  b.conf(7, "exp(R(2+YH)+R(YP+e1))⋉L", {"2+YH", "YP+e1"}, L1, cat({lor, {kOpenSome, kLcSome}}));
  b.conf(7, "(R+*×YH)⋉L", {"1", "YH"}, L1, cat({lor_deg, {kOpenSome, kLcSome}}));
  b.conf(7, "exp(R(1+YH+e1))⋉L", {"1+YH+e1"}, L1, {"all patch 2 lorentzian", kLcSome});
  b.conf(7, "exp(R(a+YH))⋉L", {"a+YH"}, L1, cat({lor_deg, {kNo3, kLcSome}})).params = {nonzero({Rat(1)})};
  b.conf(7, "exp(R(YH+e3))⋉L", {"YH+e3"}, L1, cat({lor_deg, {"all patch 2 any", kLcSome}}));

  // trivial translation part
  b.conf(8, "SO0(1,2)", {"YE", "YH", "YP"}, none, cat({kAllThree, {kNo3, kLcSome}}));
  b.conf(8, "R+*×SO0(1,2)", {"1", "YE", "YH", "YP"}, none, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(8, "Aff", {"YH", "YP"}, none, cat({kAllThree, {kNo3, kLcSome}}));
  b.conf(8, "R+*×Aff", {"1", "YH", "YP"}, none, cat({deg, {kOpenSome, kLcSome}}));
  b.conf(8, "R+*×YE", {"1", "YE"}, none, cat({kAllThree, {kNo3, kLcSome}}));
  b.conf(8, "exp(R(a+YH)+RYP)", {"a+YH", "YP"}, none, cat({kAllThree, {kNo3, kLcSome}})).params = {closed_unit()};
  b.conf(8, "R+*×YP", {"1", "YP"}, none, cat({kAllThree, {kNo3, kLcSome}}));
  {
    auto& s = b.conf(8, "exp(R(2+YH)+R(YP+e1-e2))", {"2+YH", "YP+e1-e2"}, none,
                     cat({kAllThree, {kNo3, "exists patch 1 lightlike", "none patch 0 any", kLcSome}}));
    s.special = true;
    s.note = "irreducible Aff: 1-dimensional lightlike orbit that is not a photon";
  }
  b.conf(8, "R+*×YH", {"1", "YH"}, none, cat({kAllThree, {kNo3, kLcSome}}));
  {
    auto& s = b.conf(8, "exp(R(-1+YH+e1+e2)+RYP)", {"-1+YH+e1+e2", "YP"}, none,
                     cat({kAllThree, {kNo3, "none patch 0 any", kLcSome}}));
    s.special = true;
    s.note = "fixes no point of the Minkowski patch";
  }

  // compact groups
  b.add("Proper", "SO(3)", Model::so23_direct, "ds", {"S(3,4)", "S(3,5)", "S(4,5)"}, {"all any 2 spacelike"});
  b.add("Proper", "SO(2)×SO(2)", Model::so23_direct, "ads", {"S(1,2)", "S(4,5)"},
        {"exists any 1 timelike", "exists any 2 lorentzian", "none any 2 spacelike", "none any 2 degenerate",
         "none any 3 any"});

  // de Sitter component
  b.add("dS", "SO0(1,3)", Model::linear_so13, "ds", {"S(1,2)", "S(1,3)", "S(1,4)", "S(2,3)", "S(2,4)", "S(3,4)"},
        {"exists any 3 open", "exists any 2 spacelike", "none any 2 lorentzian", "none any 2 degenerate"});

  // anti de Sitter component
  const std::vector<std::string> ads_bd_photon = {"exists boundary 2 lorentzian", "exists boundary 1 lightlike"};
  b.add("AdS", "AdS:YE×YP", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(0,YP)"},
        cat({{"all ads 2 lorentzian"}, ads_bd_photon}));
  b.add("AdS", "AdS:YE×YH", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(0,YH)"},
        cat({{"all ads 2 lorentzian"}, ads_bd_photon}));
  b.add("AdS", "AdS:YE×YE", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(0,YE)"},
        {"exists ads 1 timelike", "exists any 2 lorentzian", "none any 2 spacelike", "none any 2 degenerate"})
      .note = "compact: conjugate to SO(2)×SO(2)";
  b.add("AdS", "AdS:G_lam", Model::sl2_pair, "ads", {"pair(lam*YE,YH)", "pair(0,YP)"},
        {"all ads 2 lorentzian", "exists boundary 2 lorentzian"})
      .params = {positive_lambda()};
  b.add("AdS", "AdS:YE×Aff", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(0,YH)", "pair(0,YP)"},
        cat({{"all ads 3 open"}, ads_bd_photon}));
  b.add("AdS", "AdS:YE×SL2", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(0,YE)", "pair(0,YH)", "pair(0,YP)"},
        {"all ads 3 open", "all boundary 2 lorentzian"});
  b.add("AdS", "AdS:graph(phi)", Model::sl2_pair, "ads", {"pair(YE,-YE)", "pair(YH,YH)", "pair(YP,-YP)"},
        {"exists any 2 lorentzian", "none any 2 spacelike", "none any 2 degenerate", "none ads 0 any"})
      .note = "phi = conjugation by diag(1,-1), an outer automorphism";
  b.add("AdS", "AdS:SL2×YH", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(YH,0)", "pair(YP,0)", "pair(0,YH)"},
        cat({{"all ads 3 open"}, ads_bd_photon}));
  b.add("AdS", "AdS:SL2×YP", Model::sl2_pair, "ads", {"pair(YE,0)", "pair(YH,0)", "pair(YP,0)", "pair(0,YP)"},
        cat({{"all ads 3 open"}, ads_bd_photon}));
  b.add("AdS", "AdS:SL2×Aff", Model::sl2_pair, "ads",
        {"pair(YE,0)", "pair(YH,0)", "pair(YP,0)", "pair(0,YH)", "pair(0,YP)"}, cat({{"all ads 3 open"}, ads_bd_photon}));
  b.add("AdS", "AdS:SL2×SL2", Model::sl2_pair, "ads",
        {"pair(YE,0)", "pair(YH,0)", "pair(YP,0)", "pair(0,YE)", "pair(0,YH)", "pair(0,YP)"},
        {"all ads 3 open", "all boundary 2 lorentzian"});
  b.add("AdS", "AdS:SO0(2,1)", Model::so23_direct, "ads", {"S(1,2)", "S(1,3)", "S(2,3)"},
        {"exists any 2 lorentzian", "exists any 1 timelike", "none any 2 spacelike", "none any 2 degenerate"})
      .note = "acts trivially on the positive plane span(e4,e5)";

  // photon stabilizer kernel
  {
    auto& k = b.add("Kernel", "K", Model::conf_minkowski, "minkowski", {"1+YH", "YP", "e1+e2", "e3"},
                    {"all patch 2 degenerate", "exists lightcone 0 point", kLcSome});
    k.expected.translation = Signature{0, 1, 1};
  }
  return b.rows;
}

}  // namespace

const std::vector<SubgroupSpec>& catalog_entries() {
  static const std::vector<SubgroupSpec> rows = build_catalog();
  return rows;
}

const SubgroupSpec* lookup(const std::string& name, const std::vector<SubgroupSpec>& cat) {
  for (const auto& s : cat)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<const SubgroupSpec*> filter_entries(const std::string& glob, const std::vector<SubgroupSpec>& cat) {
  std::vector<const SubgroupSpec*> out;
  for (const auto& s : cat)
    if (glob.empty() || s.name == glob || fnmatch(glob.c_str(), s.name.c_str(), 0) == 0 ||
        fnmatch(glob.c_str(), s.table.c_str(), 0) == 0)
      out.push_back(&s);
  std::stable_sort(out.begin(), out.end(), [](const SubgroupSpec* a, const SubgroupSpec* b) {
    return std::tie(a->table, a->name) < std::tie(b->table, b->name);
  });
  return out;
}

std::vector<ParamValues> param_combos(const SubgroupSpec& s) {
  std::vector<ParamValues> out{{}};
  for (const auto& r : s.params) {
    std::vector<ParamValues> next;
    for (const auto& base : out)
      for (const auto& v : r.samples) {
        auto m = base;
        m[r.name] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

ParamValues resolve_params(const SubgroupSpec& s, const ParamValues& overrides) {
  ParamValues out;
  for (const auto& [k, v] : overrides) {
    auto it = std::find_if(s.params.begin(), s.params.end(), [&](const ParamRange& r) { return r.name == k; });
    if (it == s.params.end()) throw ParamError(s.name + " has no parameter '" + k + "'");
    if (!it->contains(v)) throw ParamError(k + "=" + to_string(v) + " outside " + it->text());
    out[k] = v;
  }
  for (const auto& r : s.params)
    if (!out.count(r.name)) out[r.name] = r.samples.at(0);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json range_to_json(const ParamRange& r) {
  json j;
  j["name"] = r.name;
  j["lo"] = r.lo ? json(to_string(*r.lo)) : json(nullptr);
  j["hi"] = r.hi ? json(to_string(*r.hi)) : json(nullptr);
  j["lo_open"] = r.lo_open;
  j["hi_open"] = r.hi_open;
  j["excluded"] = json::array();
  for (const auto& x : r.excluded) j["excluded"].push_back(to_string(x));
  j["samples"] = json::array();
  for (const auto& x : r.samples) j["samples"].push_back(to_string(x));
  return j;
}

ParamRange range_from_json(const json& j) {
  ParamRange r;
  r.name = j.at("name").get<std::string>();
  if (!j.at("lo").is_null()) r.lo = parse_rat(j.at("lo").get<std::string>());
  if (!j.at("hi").is_null()) r.hi = parse_rat(j.at("hi").get<std::string>());
  r.lo_open = j.at("lo_open").get<bool>();
  r.hi_open = j.at("hi_open").get<bool>();
  for (const auto& x : j.at("excluded")) r.excluded.push_back(parse_rat(x.get<std::string>()));
  for (const auto& x : j.at("samples")) r.samples.push_back(parse_rat(x.get<std::string>()));
  return r;
}

}  // namespace

std::string catalog_to_json(const std::vector<SubgroupSpec>& cat, int indent) {
  json rows = json::array();
  for (const auto& s : cat) {
    json j;
    j["name"] = s.name;
    j["table"] = s.table;
    j["model"] = to_string(s.model);
    j["family"] = s.family;
    j["generators"] = s.generators;
    j["params"] = json::array();
    for (const auto& r : s.params) j["params"].push_back(range_to_json(r));
    json e;
    e["dim"] = s.expected.dim;
    e["cohomogeneity_one"] = s.expected.cohomogeneity_one;
    e["fixed_point_rp4"] = s.expected.fixed_point_rp4;
    if (s.expected.translation) {
      const auto& t = *s.expected.translation;
      e["translation_signature"] = {t.p, t.q, t.r};
    } else {
      e["translation_signature"] = nullptr;
    }
    e["orbit_summary"] = s.expected.claims;
    j["expected"] = e;
    j["special"] = s.special;
    j["note"] = s.note;
    rows.push_back(j);
  }
  json doc;
  doc["format"] = "einkit-catalog";
  doc["version"] = 1;
  doc["entries"] = rows;
  return doc.dump(indent) + "\n";
}

std::vector<SubgroupSpec> catalog_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("catalog json: ") + e.what());
  }
  std::vector<SubgroupSpec> out;
  try {
    for (const auto& j : doc.at("entries")) {
      SubgroupSpec s;
      s.name = j.at("name").get<std::string>();
      s.table = j.at("table").get<std::string>();
      s.model = parse_model(j.at("model").get<std::string>());
      s.family = j.value("family", std::string("minkowski"));
      s.generators = j.at("generators").get<std::vector<std::string>>();
      for (const auto& r : j.at("params")) s.params.push_back(range_from_json(r));
      const auto& e = j.at("expected");
      s.expected.dim = e.at("dim").get<int>();
      s.expected.cohomogeneity_one = e.at("cohomogeneity_one").get<bool>();
      s.expected.fixed_point_rp4 = e.at("fixed_point_rp4").get<std::string>();
      if (e.contains("translation_signature") && !e["translation_signature"].is_null()) {
        auto t = e["translation_signature"].get<std::vector<int>>();
        if (t.size() != 3) throw std::invalid_argument("catalog json: bad translation signature in " + s.name);
        s.expected.translation = Signature{t[0], t[1], t[2]};
      }
      s.expected.claims = e.at("orbit_summary").get<std::vector<std::string>>();
      s.special = j.value("special", false);
      s.note = j.value("note", std::string());
      out.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("catalog json: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// verification

SampleConfig sample_config_for(const SubgroupSpec& s, SampleConfig base) {
  if (s.model != Model::conf_minkowski) base.include_sl2_grid = true;
  return base;
}

namespace {

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
}

int algebra_dim(const std::vector<M5>& gens) {
  if (gens.empty()) return 0;
  MatQ m(25, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(5 * i + j, static_cast<Eigen::Index>(k)) = gens[k](i, j);
  return linalg::rank(m);
}

}  // namespace

CaseReport analyze_case(const SubgroupSpec& s, const ParamValues& p, const std::vector<EinPoint>& samples, Backend b) {
  CaseReport r;
  r.name = s.name;
  r.table = s.table;
  r.params = p;
  auto gens = instantiate(s, p);
  auto bad = [&](const std::string& what) { r.discrepancies.push_back(s.name + (p.empty() ? "" : " [" + params_text(p) + "]") + ": " + what); };

  if (s.conjugator) {
    // evaluate at the moved points, report against the original ones so regions keep their meaning
    std::vector<EinPoint> moved;
    moved.reserve(samples.size());
    for (const auto& x : samples) moved.emplace_back(V5(*s.conjugator * x.rep()));
    r.orbit = scan(gens, moved, b);
    for (std::size_t i = 0; i < samples.size(); ++i) r.orbit.points[i].point = samples[i];
  } else {
    r.orbit = scan(gens, samples, b);
  }
  r.orbit.spec_name = s.name;

  int dim = algebra_dim(gens);
  if (dim != s.expected.dim)
    bad("algebra dimension " + std::to_string(dim) + ", expected " + std::to_string(s.expected.dim));
  if (r.orbit.cohomogeneity_one != s.expected.cohomogeneity_one)
    bad(std::string("cohomogeneity one: scan says ") + (r.orbit.cohomogeneity_one ? "yes" : "no"));
  if (r.orbit.fixed_point_rp4 != s.expected.fixed_point_rp4)
    bad("invariant line character " + r.orbit.fixed_point_rp4 + ", expected " + s.expected.fixed_point_rp4);

  if (s.model == Model::conf_minkowski) {
    auto cg = conf_generators(s, p);
    auto T = translation_part(cg);
    r.translation = T.dim() == 0 ? Signature{} : signature(T);
    if (s.expected.translation && !(*r.translation == *s.expected.translation))
      bad("translation part " + sig_text(*r.translation) + ", expected " + sig_text(*s.expected.translation));
    r.predicate = thm302_predicate(cg);
    if (*r.predicate != s.expected.cohomogeneity_one) bad("closed-form cohomogeneity predicate disagrees with the row");
    if (*r.predicate != r.orbit.cohomogeneity_one) bad("closed-form cohomogeneity predicate disagrees with the scan");
  }

  for (const auto& text : s.expected.claims) {
    ClaimResult c{text, evaluate_claim(Claim::parse(text), r.orbit.points)};
    if (!c.pass) bad("claim failed: " + text);
    r.claims.push_back(c);
  }
  return r;
}

}  // namespace einkit

#pragma once

#include "einkit/liecore.hpp"

#include <map>
#include <string>
#include <vector>

namespace einkit {

enum class OrbitCharacter { point, spacelike, timelike, lightlike, lorentzian, degenerate, open };
std::string to_string(OrbitCharacter c);
OrbitCharacter parse_character(const std::string& s);
OrbitCharacter character_of(const Signature& s);

struct TangentReport {
  EinPoint point;
  int dim = 0;
  Signature signature;
  OrbitCharacter character = OrbitCharacter::point;
};

struct Sl2Pair {
  M2 X;
  M2 Y;
};

TangentReport tangent_at(const std::vector<M5>& gens, const EinPoint& x, Backend b = Backend::exact);
TangentReport chart_tangent_at(const std::vector<ConfAlgElement>& gens, const V3& x, Backend b = Backend::exact,
                               const MinkowskiChart& c = default_chart());
TangentReport ads_tangent_at(const std::vector<Sl2Pair>& gens, const M2& P, Backend b = Backend::exact);

// sample regions relative to the default chart and the AdS identification:
// any, patch, lightcone, vertex, ads, boundary
bool in_region(const EinPoint& x, const std::string& region, const MinkowskiChart& c = default_chart());

struct SampleConfig {
  Rat grid_radius = 2;
  Rat grid_step = Rat(1, 2);
  int random_count = 271;
  std::uint64_t rng_seed = 0;
  bool include_lightcone = true;
  int lightcone_count = 100;
  bool include_sl2_grid = false;
};

std::vector<EinPoint> make_samples(const SampleConfig& cfg, const MinkowskiChart& c = default_chart());
// random rational chart points in the cube of radius max_num/max_den, portable across standard libraries
std::vector<V3> random_chart_points(std::uint64_t seed, int count, int max_num = 40, int max_den = 8);

// quantified statement about sampled orbits: "exists lightcone 2 degenerate"
struct Claim {
  enum class Quant { exists, all, none } quant = Quant::exists;
  std::string region = "any";
  int dim = 2;
  std::string character = "any";
  std::string text() const;
  static Claim parse(const std::string& s);
};

struct OrbitReport {
  std::string spec_name;
  int sample_size = 0;
  int max_dim = 0;
  std::map<std::string, int> character_counts;  // "dim:character" -> count
  bool cohomogeneity_one = false;
  std::string fixed_point_rp4 = "none";
  std::vector<std::string> discrepancies;
  std::vector<TangentReport> points;
};

OrbitReport scan(const std::vector<M5>& gens, const std::vector<EinPoint>& samples, Backend b = Backend::exact);
OrbitReport scan(const std::vector<M5>& gens, const SampleConfig& cfg, Backend b = Backend::exact);
bool evaluate_claim(const Claim& claim, const std::vector<TangentReport>& pts);

// translation part and the projections onto the linear, linear-isometry and homothety factors
bool is_subalgebra(const std::vector<ConfAlgElement>& gens);
SubspaceQ translation_part(const std::vector<ConfAlgElement>& gens);
int proj_linear_dim(const std::vector<ConfAlgElement>& gens);
int proj_linear_isometry_dim(const std::vector<ConfAlgElement>& gens);
int proj_homothety_dim(const std::vector<ConfAlgElement>& gens);
bool thm302_predicate(const std::vector<ConfAlgElement>& gens);

// subspaces on which every generator acts by a scalar
std::vector<SubspaceQ> common_eigenspaces(const std::vector<M5>& gens);
struct InvariantLine {
  SubspaceQ line;
  Causal character;
  bool from_family = false;  // part of a common eigenspace of dimension > 1
};
std::vector<InvariantLine> invariant_lines(const std::vector<M5>& gens);
std::vector<SubspaceQ> invariant_planes(const std::vector<M5>& gens);
// totally isotropic subspaces all of whose lines are fixed points
std::vector<SubspaceQ> fixed_point_subspaces(const std::vector<M5>& gens);
std::vector<EinPoint> fixed_points_in_ein(const std::vector<M5>& gens);
// "none", "lightlike", "spacelike" or "timelike": strongest invariant-line character found
std::string fixed_point_rp4(const std::vector<InvariantLine>& lines);

// the special orbit of the irreducible Aff action, parametrized by tau = e^t
V3 aff_irreducible_orbit(const V3& q, const Rat& tau, const Rat& s);
TangentReport aff_irreducible_tangent(const V3& q);
Rat aff_form(const V3& a, const V3& b);

// Cayley transform of a Q5-skew matrix: a rational point of SO(2,3)
M5 cayley(const M5& skew);
M5 random_isometry(std::uint64_t seed);

}  // namespace einkit

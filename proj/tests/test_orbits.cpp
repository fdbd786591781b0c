#include "doctest.h"
#include "einkit/orbits.hpp"

#include <random>

using namespace einkit;

namespace {

ConfAlgElement C(Rat l, V3 X, V3 v) { return {std::move(l), std::move(X), std::move(v)}; }
const V3 kE(1, 0, 0), kH(0, 1, 0), kP(0, 0, 1), k0(0, 0, 0);
V3 ev(int i) { return V3(V3::Unit(i)); }

std::vector<M5> inst(const std::vector<ConfAlgElement>& g) {
  std::vector<M5> out;
  for (const auto& x : g) out.push_back(conf_to_so23(x));
  return out;
}

// Q5-skew generator of the (i,j) coordinate plane
M5 S(int i, int j) {
  M5 m = M5::Zero();
  m(i, j) = Q5()(j, j);
  m(j, i) = -Q5()(i, i);
  return m;
}

std::vector<M5> pairs(const std::vector<Sl2Pair>& g) {
  std::vector<M5> out;
  for (const auto& p : g) out.push_back(sl2_pair_to_so23(p.X, p.Y));
  return out;
}

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
  return Rat(num(rng)) / Rat(den(rng));
}

V3 rand3(std::mt19937_64& rng) { return V3(small_rat(rng), small_rat(rng), small_rat(rng)); }

const std::vector<ConfAlgElement> kK = {C(1, kH, k0), C(0, kP, k0), C(0, k0, V3(1, 1, 0)), C(0, k0, ev(2))};
const std::vector<M5> kSO3 = {S(2, 3), S(2, 4), S(3, 4)};
const std::vector<M5> kSO2SO2 = {S(0, 1), S(3, 4)};

SampleConfig small_cfg() {
  SampleConfig c;
  c.grid_radius = 1;
  c.grid_step = Rat(1, 2);
  c.random_count = 40;
  c.lightcone_count = 40;
  return c;
}

}  // namespace

TEST_CASE("orbit characters") {
  CHECK(character_of({0, 0, 0}) == OrbitCharacter::point);
  CHECK(character_of({0, 1, 0}) == OrbitCharacter::spacelike);
  CHECK(character_of({1, 0, 0}) == OrbitCharacter::timelike);
  CHECK(character_of({0, 0, 1}) == OrbitCharacter::lightlike);
  CHECK(character_of({1, 1, 0}) == OrbitCharacter::lorentzian);
  CHECK(character_of({0, 1, 1}) == OrbitCharacter::degenerate);
  CHECK(character_of({1, 2, 0}) == OrbitCharacter::open);
}

TEST_CASE("tangent spaces of SO(3), K and the trivial group") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    auto x = chart_embed(default_chart(), rand3(rng));
    auto t = tangent_at(kSO3, x);
    CHECK(t.dim == 2);
    CHECK(t.character == OrbitCharacter::spacelike);
    CHECK(tangent_at({}, x).dim == 0);
  }
  auto K = inst(kK);
  auto ph = kernel_photon();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      V5 v = Rat(a) * ph.basis.col(0) + Rat(b) * ph.basis.col(1);
      CHECK(tangent_at(K, EinPoint(v)).dim == 0);
    }
}

TEST_CASE("quotient signature does not depend on the complement") {
  std::mt19937_64 rng(2);
  auto gens = inst({C(1, kH, ev(0)), C(0, kP, k0)});
  for (int i = 0; i < 20; ++i) {
    V5 x = chart_rep(default_chart(), rand3(rng));
    MatQ a(5, 2), b(5, 2);
    for (int j = 0; j < 2; ++j) {
      a.col(j) = gens[j] * x;
      b.col(j) = gens[j] * x + small_rat(rng) * x;
    }
    CHECK(inner<Rat>(V5(a.col(0)), x, R23) == 0);
    auto ta = linalg::inertia(MatQ(linalg::column_basis(a).transpose() * R23.gram<Rat>() * linalg::column_basis(a)));
    auto tb = linalg::inertia(MatQ(linalg::column_basis(b).transpose() * R23.gram<Rat>() * linalg::column_basis(b)));
    if (linalg::rank(a) == linalg::rank(b)) CHECK(ta == tb);
    CHECK(tangent_at(gens, EinPoint(x)).signature == tangent_at(gens, EinPoint(x), Backend::floating).signature);
  }
}

TEST_CASE("chart tangent formulas") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    V3 q = rand3(rng);
    const Rat &x = q(0), &y = q(1), &z = q(2);
    auto contains = [&](const std::vector<ConfAlgElement>& g, const V3& v) {
      MatQ m(3, static_cast<Eigen::Index>(g.size()));
      for (std::size_t k = 0; k < g.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = g[k].field(q);
      return linalg::in_span(m, VecQ(v));
    };
    CHECK(contains({C(0, kH, ev(2))}, V3(y, x, 1)));
    CHECK(contains({C(0, kE, ev(0))}, V3(1, z, -y)));
    CHECK(contains({C(1, kH, ev(0))}, V3(x + y + 1, x + y, z)));
    CHECK(contains({C(0, kP, k0)}, V3(z, z, x - y)));
    auto t1 = chart_tangent_at({C(0, kH, ev(2))}, q);
    CHECK(t1.dim == 1);
    // agreement with the ambient computation
    auto g = std::vector<ConfAlgElement>{C(1, kH, ev(0)), C(0, kP, k0)};
    auto a = chart_tangent_at(g, q), b = tangent_at(inst(g), chart_embed(default_chart(), q));
    CHECK(a.dim == b.dim);
    CHECK(a.signature == b.signature);
  }
}

TEST_CASE("AdS tangent vectors of G_lambda and Y_E x Y_P") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    Rat a = small_rat(rng), b = small_rat(rng);
    if (a == 0) a = 1;
    Rat c = small_rat(rng);
    M2 P;
    P << a, b, c, (1 + b * c) / a;
    for (Rat lam : {Rat(1), Rat(2), Rat(1, 3)}) {
      std::vector<Sl2Pair> g = {{lam * sl2::E(), sl2::H()}, {M2::Zero(), sl2::P()}};
      auto t = ads_tangent_at(g, P);
      CHECK(t.dim == 2);
      CHECK(t.character == OrbitCharacter::lorentzian);
      MatQ span(4, 2);
      for (int k = 0; k < 2; ++k) span.col(k) = ads_coords(M2(g[k].X * P - P * g[k].Y));
      M2 vP;
      vP << 0, -P(0, 0), 0, -P(1, 0);
      CHECK(linalg::in_span(span, VecQ(ads_coords(vP))));
      M2 vlam = lam * sl2::E() * P - P * sl2::H();
      CHECK(linalg::in_span(span, VecQ(ads_coords(vlam))));
    }
    std::vector<Sl2Pair> yeyp = {{sl2::E(), M2::Zero()}, {M2::Zero(), sl2::P()}};
    MatQ span(4, 2);
    for (int k = 0; k < 2; ++k) span.col(k) = ads_coords(M2(yeyp[k].X * P - P * yeyp[k].Y));
    M2 w;
    w << P(1, 0), P(1, 1), -P(0, 0), -P(0, 1);
    CHECK(linalg::in_span(span, VecQ(ads_coords(w))));
    CHECK(tangent_at(pairs(yeyp), ads_point_embed(P)).signature == ads_tangent_at(yeyp, P).signature);
  }
}

TEST_CASE("scan of pure translations and of SO(2)xSO(2)") {
  auto cfg = small_cfg();
  auto r12 = scan(inst({C(0, k0, ev(0)), C(0, k0, ev(1)), C(0, k0, ev(2))}), cfg);
  CHECK(r12.max_dim == 3);
  CHECK_FALSE(r12.cohomogeneity_one);
  for (const auto& t : r12.points)
    if (in_region(t.point, "lightcone")) CHECK(t.dim <= 1);
  auto so22 = scan(kSO2SO2, cfg);
  int ones = 0;
  for (const auto& t : so22.points) {
    if (t.dim == 1) {
      ++ones;
      CHECK(t.character == OrbitCharacter::timelike);
      CHECK(t.point.rep()(3) == 0);
      CHECK(t.point.rep()(4) == 0);
    } else {
      CHECK(t.dim == 2);
      CHECK(t.character == OrbitCharacter::lorentzian);
    }
  }
  CHECK(ones > 0);
  CHECK_THROWS_AS(scan(kSO3, std::vector<EinPoint>{}), std::invalid_argument);
  auto triv = scan({}, cfg);
  CHECK(triv.max_dim == 0);
}

TEST_CASE("claims") {
  auto c = Claim::parse("exists lightcone 2 degenerate");
  CHECK(c.quant == Claim::Quant::exists);
  CHECK(c.text() == "exists lightcone 2 degenerate");
  CHECK_THROWS_AS(Claim::parse("some lightcone 2 degenerate"), std::invalid_argument);
  CHECK_THROWS_AS(Claim::parse("all nowhere 2 any"), std::invalid_argument);
  auto r = scan(kSO3, small_cfg());
  CHECK(evaluate_claim(Claim::parse("all any 2 spacelike"), r.points));
  CHECK_FALSE(evaluate_claim(Claim::parse("exists any 2 lorentzian"), r.points));
  CHECK(evaluate_claim(Claim::parse("none any 3 any"), r.points));
}

TEST_CASE("translation part and projections") {
  std::vector<ConfAlgElement> affpi = {C(0, kH, k0), C(0, kP, k0), C(0, k0, V3(1, 1, 0)), C(0, k0, ev(2))};
  auto T = translation_part(affpi);
  CHECK(T.dim() == 2);
  CHECK(signature(T) == Signature{0, 1, 1});
  CHECK(thm302_predicate(affpi));
  std::vector<ConfAlgElement> so12 = {C(0, kE, k0), C(0, kH, k0), C(0, kP, k0)};
  CHECK(translation_part(so12).dim() == 0);
  std::vector<ConfAlgElement> r12 = {C(0, k0, ev(0)), C(0, k0, ev(1)), C(0, k0, ev(2))};
  CHECK(translation_part(r12).dim() == 3);
  CHECK_FALSE(thm302_predicate(r12));
  auto hr12 = r12;
  hr12.push_back(C(1, k0, k0));
  CHECK_FALSE(thm302_predicate(hr12));
  CHECK(proj_homothety_dim(hr12) == 1);
  CHECK(proj_linear_isometry_dim(hr12) == 0);
  CHECK(proj_linear_dim(affpi) == 2);
  // exp(R(YH+e3)) with Lorentzian translations: e3 alone is not in T
  std::vector<ConfAlgElement> t2 = {C(0, kH, ev(2)), C(0, k0, ev(0)), C(0, k0, ev(1))};
  CHECK(signature(translation_part(t2)) == Signature{1, 1, 0});
  CHECK_THROWS_AS(translation_part({C(0, kE, k0), C(0, kH, k0)}), std::invalid_argument);
}

TEST_CASE("invariant lines and fixed points") {
  auto so3 = invariant_lines(kSO3);
  REQUIRE_FALSE(so3.empty());
  CHECK(fixed_point_rp4(so3) == "timelike");
  CHECK(fixed_points_in_ein(kSO3).empty());
  auto so22 = invariant_lines(kSO2SO2);
  REQUIRE(so22.size() == 1);
  CHECK(so22[0].character == Causal::spacelike);
  const auto& c = default_chart();
  for (const auto& g : {std::vector<ConfAlgElement>{C(0, kH, k0), C(0, kP, k0), C(0, k0, V3(1, 1, 0)), C(0, k0, ev(2))}, kK,
                        std::vector<ConfAlgElement>{C(0, kE, k0), C(0, kH, k0), C(0, kP, k0)}}) {
    auto m = inst(g);
    auto lines = invariant_lines(m);
    CHECK(fixed_point_rp4(lines) == "lightlike");
    bool has_p = false;
    for (const auto& s : fixed_point_subspaces(m)) has_p = has_p || s.contains(VecQ(c.p));
    CHECK(has_p);
  }
  std::vector<M5> so13;
  for (int j = 2; j < 5; ++j) so13.push_back(S(1, j));
  so13.push_back(S(2, 3));
  so13.push_back(S(2, 4));
  so13.push_back(S(3, 4));
  CHECK(fixed_points_in_ein(so13).empty());
  CHECK(fixed_point_rp4(invariant_lines(so13)) == "timelike");
  auto yeyh = pairs({{sl2::E(), M2::Zero()}, {M2::Zero(), sl2::H()}});
  CHECK(fixed_points_in_ein(yeyh).empty());
  CHECK(fixed_point_rp4(invariant_lines(yeyh)) == "spacelike");
}

TEST_CASE("invariant planes") {
  auto K = inst(kK);
  bool photon = false;
  for (const auto& s : invariant_planes(K)) photon = photon || (is_totally_isotropic(s) && s.same_as(kernel_photon()));
  CHECK(photon);
  std::vector<Sl2Pair> sl2aff = {{sl2::E(), M2::Zero()}, {sl2::H(), M2::Zero()}, {sl2::P(), M2::Zero()},
                                 {M2::Zero(), sl2::H()}, {M2::Zero(), sl2::P()}};
  bool iso = false;
  for (const auto& s : invariant_planes(pairs(sl2aff))) iso = iso || (s.dim() == 2 && signature(s) == Signature{0, 0, 2});
  CHECK(iso);
  auto planes = invariant_planes(kSO3);
  REQUIRE(planes.size() == 1);
  CHECK(planes[0].same_as(SubspaceQ(R23, columns(unit(5, 0), unit(5, 1)))));
}

TEST_CASE("special Aff orbit") {
  auto t = aff_irreducible_tangent(V3::Zero());
  CHECK(t.dim == 1);
  CHECK(t.character == OrbitCharacter::lightlike);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    V3 q = rand3(rng);
    CHECK(aff_irreducible_orbit(q, 1, 0) == q);
    Rat t1 = Rat(1 + i % 4) / Rat(1 + i % 3), t2 = Rat(2 + i % 5) / Rat(3), s1 = small_rat(rng), s2 = small_rat(rng);
    V3 two = aff_irreducible_orbit(aff_irreducible_orbit(q, t1, s1), t2, s2);
    V3 one = aff_irreducible_orbit(q, t1 * t2, t2 * s1 + s2 / t1);
    CHECK(two == one);
  }
}

TEST_CASE("Cayley isometries") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    M5 g = random_isometry(s);
    CHECK(M5(g.transpose() * Q5() * g) == Q5());
  }
  CHECK_THROWS_AS(cayley(M5::Identity()), std::invalid_argument);
}

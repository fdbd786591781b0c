#include "doctest.h"
#include "einkit/einstein.hpp"

#include <random>

using namespace einkit;

namespace {

V5 v5(long a, long b, long c, long d, long e) { return (V5() << a, b, c, d, e).finished(); }

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
  return Rat(num(rng)) / Rat(den(rng));
}

M2 random_sl2(std::mt19937_64& rng) {
  // products of dyadic elementary matrices stay in SL(2, Z[1/2])
  std::uniform_int_distribution<int> k(-4, 4);
  M2 a = M2::Identity();
  for (int i = 0; i < 4; ++i) {
    M2 u = M2::Identity(), l = M2::Identity();
    u(0, 1) = Rat(k(rng)) / 2;
    l(1, 0) = Rat(k(rng)) / 2;
    a = a * u * l;
  }
  return a;
}

}  // namespace

TEST_CASE("EinPoint validation and projective equality") {
  CHECK_THROWS_AS(EinPoint(v5(1, 0, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(EinPoint(V5::Zero()), std::invalid_argument);
  CHECK(EinPoint(v5(1, 0, 1, 0, 0)) == EinPoint(v5(-3, 0, -3, 0, 0)));
  CHECK_FALSE(EinPoint(v5(1, 0, 1, 0, 0)) == EinPoint(v5(1, 0, -1, 0, 0)));
}

TEST_CASE("double cover coordinates") {
  auto [a, b] = double_cover_coords(EinPoint(v5(1, 0, 1, 0, 0)));
  CHECK(a[0] == doctest::Approx(1));
  CHECK(a[1] == doctest::Approx(0));
  CHECK(b[0] == doctest::Approx(1));
  auto [c, d] = double_cover_coords(EinPoint(v5(2, 0, 0, 2, 0)));
  CHECK(c[0] == doctest::Approx(1));
  CHECK(d[1] == doctest::Approx(1));
  // the two blocks of a null vector have equal norm
  V5 v = v5(3, 4, 0, 3, 4);
  CHECK(v(0) * v(0) + v(1) * v(1) == v(2) * v(2) + v(3) * v(3) + v(4) * v(4));
}

TEST_CASE("default chart") {
  const auto& c = default_chart();
  CHECK(inner<Rat>(c.p, c.q, R23) == -1);
  CHECK(chart_embed(c, V3::Zero()) == EinPoint(c.q));
  CHECK(chart_project(c, EinPoint(c.q)) == V3::Zero());
  CHECK_THROWS_AS(chart_project(c, EinPoint(c.p)), OnLightconeError);
}

TEST_CASE("chart embedding is null, off the vertex lightcone, and inverts projection") {
  std::mt19937_64 rng(11);
  const auto& c = default_chart();
  EinPoint vertex(c.p);
  for (int i = 0; i < 200; ++i) {
    V3 x(small_rat(rng), small_rat(rng), small_rat(rng));
    V5 r = chart_rep(c, x);
    CHECK(inner<Rat>(r, r, R23) == 0);
    CHECK(inner<Rat>(r, c.p, R23) == -1);
    EinPoint e = chart_embed(c, x);
    CHECK_FALSE(on_lightcone(vertex, e));
    CHECK(chart_project(c, e) == x);
    CHECK(chart_embed(c, chart_project(c, e)) == e);
  }
}

TEST_CASE("lightcone relation") {
  const auto& c = default_chart();
  EinPoint p(c.p);
  CHECK(on_lightcone(p, p));
  EinPoint a(v5(1, 0, 1, 0, 0)), b(v5(0, 1, 0, 1, 0));
  CHECK(on_lightcone(a, b));
  CHECK(on_lightcone(b, a));
  EinPoint d(v5(1, 0, 0, 0, 1));
  CHECK(on_lightcone(a, d) == on_lightcone(d, a));
}

TEST_CASE("limit points") {
  const auto& c = default_chart();
  V3 n(1, 1, 0);
  EinPoint l = limit_point(c, V3::Zero(), n);
  CHECK(l == EinPoint(c.lift(n)));
  CHECK(on_lightcone(EinPoint(c.p), l));
  CHECK_FALSE(l == EinPoint(c.p));
  V3 base(1, 2, 3);
  CHECK(limit_point(c, base, n) == limit_point(c, V3(base + Rat(5, 2) * n), n));
  // bases differing by a vector orthogonal to n: limits on one photon with p
  V3 w(0, 0, 1);
  EinPoint l1 = limit_point(c, base, n), l2 = limit_point(c, V3(base + w), n);
  SubspaceQ ph(R23, columns(l1.rep(), l2.rep(), c.p));
  CHECK(linalg::rank(ph.basis) == 2);
  CHECK(is_totally_isotropic(SubspaceQ::span(R23, ph.basis)));
  CHECK_THROWS_AS(limit_point(c, base, V3(1, 0, 0)), std::invalid_argument);
  // the limit agrees with the leading term of chart_rep along the line
  V3 far = base + Rat(1000000) * n;
  V5 r = chart_rep(c, far) / Rat(1000000);
  V5 lim = c.lift(n) + inner12(base, n) * c.p;
  CHECK((r - lim).cwiseAbs().maxCoeff() < Rat(1, 1000));
}

TEST_CASE("hypersurfaces") {
  EinPoint x(v5(1, 0, 1, 0, 0));
  CHECK(hypersurface_membership(HypersurfaceDescriptor::einstein(v5(0, 0, 0, 0, 1)), x));
  CHECK_FALSE(hypersurface_membership(HypersurfaceDescriptor::spacelike(v5(1, 0, 0, 0, 0)), x));
  auto tc = HypersurfaceDescriptor::timelike_circle(SubspaceQ(R23, columns(unit(5, 0), unit(5, 1), unit(5, 2))));
  CHECK(hypersurface_membership(tc, x));
  CHECK_FALSE(hypersurface_membership(tc, EinPoint(v5(1, 0, 0, 1, 0))));
  CHECK_THROWS_AS(HypersurfaceDescriptor::einstein(v5(1, 0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("AdS form and embedding") {
  M2 P;
  P << 0, 1, 0, 0;
  CHECK(ads_form(M2::Identity(), M2::Identity()) == -1);
  CHECK(ads_form(P, P) == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    M2 U, V;
    U << small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng);
    V << small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng);
    CHECK(ads_form(U, U) == -U.determinant());
    CHECK(2 * ads_form(U, V) == -(M2(U + V).determinant() - U.determinant() - V.determinant()));
    // the coordinate identification is an isometry onto the e1..e4 block
    auto cu = ads_coords(U), cv = ads_coords(V);
    Rat ip = -cu(0) * cv(0) - cu(1) * cv(1) + cu(2) * cv(2) + cu(3) * cv(3);
    CHECK(ip == ads_form(U, V));
    CHECK(ads_matrix(cu) == U);
  }
  // matrix units: a (2,2) Gram basis
  MatQ g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      M2 a = M2::Zero(), b = M2::Zero();
      a(i / 2, i % 2) = 1;
      b(j / 2, j % 2) = 1;
      g(i, j) = ads_form(a, b);
    }
  CHECK(linalg::inertia(g) == Signature{2, 2, 0});
  M2 R;
  R << 2, 1, 3, 2;
  EinPoint e = ads_point_embed(R);
  CHECK(e.rep()(4) != 0);
  CHECK_THROWS_AS(ads_point_embed(M2::Zero()), std::invalid_argument);
}

TEST_CASE("sl2 pairs act through the AdS identification") {
  std::mt19937_64 rng(5);
  M2 X, Y;
  X << 1, 2, 3, -1;
  Y << 0, 1, -1, 0;
  M5 m = sl2_pair_to_so23(X, Y);
  M5 q5 = M5::Zero();
  q5.diagonal() << -1, -1, 1, 1, 1;
  CHECK(M5(m.transpose() * q5 + q5 * m).isZero());
  for (int i = 0; i < 10; ++i) {
    M2 P = random_sl2(rng);
    V5 v;
    v << ads_coords(P), 1;
    CHECK(EinPoint(v) == ads_point_embed(P));
    V5 img = m * v;
    CHECK(img.head<4>() == ads_coords(M2(X * P - P * Y)));
    CHECK(img(4) == 0);
  }
}

TEST_CASE("Ein^{1,1} coordinates") {
  M2 X;
  X << 1, 0, 0, 0;
  auto [k, im] = ein11_coords(X);
  CHECK(k == V2(0, 1));
  CHECK(im == V2(1, 0));
  CHECK(ein11_coords(M2(2 * X)) == ein11_coords(X));
  CHECK_THROWS_AS(ein11_coords(M2::Identity()), std::invalid_argument);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    M2 A = random_sl2(rng), B = random_sl2(rng);
    M2 S;
    Rat a = small_rat(rng), b = small_rat(rng), c = small_rat(rng);
    if (a == 0 && b == 0) a = 1;
    // rank one: column (a,b) times row (c,1)
    S << a * c, a, b * c, b;
    M2 Binv = *linalg::inverse(MatQ(B));
    auto [k0, i0] = ein11_coords(S);
    auto [k1, i1] = ein11_coords(M2(A * S * Binv));
    auto proj_eq = [](const V2& u, const V2& w) { return u(0) * w(1) - u(1) * w(0) == 0; };
    CHECK(proj_eq(k1, V2(B * k0)));
    CHECK(proj_eq(i1, V2(A * i0)));
  }
}

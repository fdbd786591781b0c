#include "doctest.h"
#include "einkit/liecore.hpp"

#include <random>

using namespace einkit;

namespace {

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rat(num(rng)) / Rat(den(rng));
}

ConfAlgElement random_conf(std::mt19937_64& rng) {
  ConfAlgElement x;
  x.lambda = small_rat(rng);
  for (int i = 0; i < 3; ++i) x.X(i) = small_rat(rng), x.v(i) = small_rat(rng);
  return x;
}

// rational point of SO0(1,2) as a product of exact exponentials
M3 random_so12_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-3, 3);
  M3 a = M3::Identity();
  for (int i = 0; i < 3; ++i) {
    a = a * M3(*exp_exact(MatQ(so12::P()), ExpParam::time(Rat(k(rng)) / 2)));
    a = a * M3(*exp_exact(MatQ(so12::H()), ExpParam::rate(Rat(k(rng) + 4) / 2 + 1)));
    a = a * M3(*exp_exact(MatQ(so12::E()), ExpParam::angle(Rat(3, 5), Rat(k(rng) < 0 ? -4 : 4, 5))));
  }
  return a;
}

ConfAlgElement elem(Rat l, V3 X, V3 v) { return {std::move(l), std::move(X), std::move(v)}; }

}  // namespace

TEST_CASE("so(1,2) bracket table") {
  CHECK(bracket_so12(so12::E(), so12::H()) == M3(so12::E() - so12::P()));
  CHECK(bracket_so12(so12::E(), so12::P()) == so12::H());
  CHECK(bracket_so12(so12::H(), so12::P()) == so12::P());
  CHECK(bracket_so12(so12::H(), so12::H()).isZero());
  for (const M3* m : {&so12::E(), &so12::H(), &so12::P()}) CHECK(so12::is_element(*m));
}

TEST_CASE("sl(2,R) bracket table") {
  CHECK(bracket_sl2(sl2::E(), sl2::H()) == M2(2 * sl2::E() - 4 * sl2::P()));
  CHECK(bracket_sl2(sl2::E(), sl2::P()) == sl2::H());
  CHECK(bracket_sl2(sl2::H(), sl2::P()) == M2(2 * sl2::P()));
  CHECK(bracket_sl2(sl2::E(), sl2::E()).isZero());
}

TEST_CASE("coordinate decompositions invert") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    V3 c(small_rat(rng), small_rat(rng), small_rat(rng));
    CHECK(so12::coords(so12::from_coords(c)) == c);
    CHECK(sl2::coords(sl2::from_coords(c)) == c);
  }
}

TEST_CASE("conformal bracket rule") {
  auto YH = elem(0, V3(0, 1, 0), V3::Zero());
  auto YP = elem(0, V3(0, 0, 1), V3::Zero());
  CHECK(bracket_conf(YH, YP) == YP);
  auto one = elem(1, V3::Zero(), V3::Zero());
  auto w = elem(0, V3::Zero(), V3(2, -1, 3));
  CHECK(bracket_conf(one, w) == w);
  auto b = conf_basis();
  REQUIRE(b.size() == 7);
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        auto j = bracket_conf(x, bracket_conf(y, z)) + bracket_conf(y, bracket_conf(z, x)) + bracket_conf(z, bracket_conf(x, y));
        CHECK(j.is_zero());
      }
}

TEST_CASE("adjoint action") {
  std::mt19937_64 rng(2);
  ConfGroupElement id;
  auto x = random_conf(rng);
  CHECK(adjoint_conf(id, x) == x);
  for (int i = 0; i < 30; ++i) {
    ConfGroupElement g{Rat(1 + i % 3) / 2, random_so12_group(rng), V3(small_rat(rng), small_rat(rng), small_rat(rng))};
    g.validate();
    auto a = random_conf(rng), b = random_conf(rng);
    CHECK(adjoint_conf(g, bracket_conf(a, b)) == bracket_conf(adjoint_conf(g, a), adjoint_conf(g, b)));
    // agrees with conjugation of the so(2,3) images
    M5 G = conf_group_to_so23(g);
    M5 Ginv = M5(*linalg::inverse(MatQ(G)));
    CHECK(conf_to_so23(adjoint_conf(g, a)) == M5(G * conf_to_so23(a) * Ginv));
  }
}

TEST_CASE("printed translation normalizing a+YP+w") {
  for (long ai : {-2, -1, 1, 3})
    for (long w1 : {-1, 0, 2})
      for (long w3 : {1, -3}) {
        Rat a(ai);
        V3 w(Rat(w1), Rat(5, 2), Rat(w3));
        V3 x(((a * a + 1) * w(0) - a * w(2) - w(1)) / (a * a * a), ((a * a - 1) * w(1) - a * w(2) + w(0)) / (a * a * a),
             (a * w(2) - w(0) + w(1)) / (a * a));
        ConfGroupElement g{1, M3::Identity(), x};
        CHECK(adjoint_conf(g, elem(a, V3(0, 0, 1), w)) == elem(a, V3(0, 0, 1), V3::Zero()));
        CHECK(adjoint_conf(g, elem(0, V3::Zero(), V3(1, 1, 0))) == elem(0, V3::Zero(), V3(1, 1, 0)));
      }
  V3 w(3, 1, 2);
  ConfGroupElement g{1, M3::Identity(), V3(0, -w(2), w(1))};
  CHECK(adjoint_conf(g, elem(0, V3(0, 0, 1), w)) == elem(0, V3(0, 0, 1), V3(w(0) - w(1), 0, 0)));
}

TEST_CASE("conf_to_so23 is an injective Lie morphism into so(2,3)") {
  auto b = conf_basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    M5 m = conf_to_so23(b[i]);
    CHECK(is_so23(m));
    // fixes the vertex direction
    V5 mp = m * default_chart().p;
    CHECK(linalg::rank(MatQ(columns(mp, default_chart().p))) == 1);
    CHECK(so23_to_conf(m) == b[i]);
    for (const auto& y : b) {
      M5 n = conf_to_so23(y);
      CHECK(conf_to_so23(bracket_conf(b[i], y)) == M5(m * n - n * m));
    }
  }
  // so23_to_conf is a left inverse, hence the map is injective
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    auto x = random_conf(rng);
    CHECK(so23_to_conf(conf_to_so23(x)) == x);
    CHECK(conf_to_so23(x).isZero() == x.is_zero());
  }
}

TEST_CASE("conf_to_so23 reproduces the conformal vector field (finite differences)") {
  const auto& c = default_chart();
  std::mt19937_64 rng(4);
  std::vector<ConfAlgElement> xs = {elem(0, V3::Zero(), V3(0, 0, 1)), elem(1, V3::Zero(), V3::Zero())};
  for (int i = 0; i < 5; ++i) xs.push_back(random_conf(rng));
  const double h = 1e-6;
  for (const auto& x : xs) {
    MatD m = to_double(conf_to_so23(x));
    MatD ep = exp_matrix(m, h), em = exp_matrix(m, -h);
    for (int k = 0; k < 5; ++k) {
      V3 y(small_rat(rng) / 3, small_rat(rng) / 3, small_rat(rng) / 3);
      VecD r = to_double(chart_rep(c, y));
      auto proj = [&](const VecD& v) {
        VecD pd = to_double(c.p);
        double s = -1.0 / inner(v, pd, R23);
        VecD w = v * s;
        return Eigen::Vector3d(-inner(w, VecD(to_double(c.frame.col(0))), R23), inner(w, VecD(to_double(c.frame.col(1))), R23),
                               inner(w, VecD(to_double(c.frame.col(2))), R23));
      };
      Eigen::Vector3d d = (proj(VecD(ep * r)) - proj(VecD(em * r))) / (2 * h);
      auto want = to_double(x.field(y));
      for (int j = 0; j < 3; ++j) CHECK(std::abs(d(j) - want(j)) < 1e-8);
    }
  }
}

TEST_CASE("pure homothety fixes [p] and [q]") {
  const auto& c = default_chart();
  M5 m = conf_to_so23(elem(1, V3::Zero(), V3::Zero()));
  CHECK(V5(m * c.p) == c.p);
  CHECK(V5(m * c.q) == V5(-c.q));
  for (int i = 0; i < 3; ++i) CHECK(V5(m * c.frame.col(i)).isZero());
}

TEST_CASE("exact exponentials") {
  MatQ P(so12::P());
  CHECK(MatQ(P * P * P).isZero());
  auto e = *exp_exact(P, ExpParam::time(2));
  CHECK(e == MatQ(MatQ::Identity(3, 3) + 2 * P + 2 * P * P));
  CHECK(*exp_exact(MatQ(so12::H()), ExpParam::time(0)) == MatQ::Identity(3, 3));
  auto h = *exp_exact(MatQ(so12::H()), ExpParam::rate(3));
  auto ev = linalg::rational_eigenvalues(h);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == Rat(1, 3));
  CHECK(ev[1] == 1);
  CHECK(ev[2] == 3);
  // irrational eigen-data is refused
  M3 irr = so12::H() + so12::P() * 0;
  irr(0, 1) = 2;
  irr(1, 0) = 1;
  CHECK_FALSE(exp_exact(MatQ(irr), ExpParam::rate(2)).has_value());
  CHECK_FALSE(exp_exact(MatQ(so12::H()), ExpParam::time(1)).has_value());
  // elliptic closed form matches the float exponential
  double th = std::atan2(4.0, 3.0);
  auto r = *exp_exact(MatQ(so12::E()), ExpParam::angle(Rat(3, 5), Rat(4, 5)));
  MatD f = exp_matrix(to_double(MatQ(so12::E())), th);
  CHECK((to_double(r) - f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("so(1,2) element classes") {
  for (auto [c, s] : std::vector<std::pair<Rat, Rat>>{{Rat(3, 5), Rat(4, 5)}, {Rat(-7, 25), Rat(24, 25)}, {Rat(0), Rat(1)}}) {
    MatQ a = *exp_exact(MatQ(so12::E()), ExpParam::angle(c, s));
    CHECK(classify_so12(a) == ElementClass::elliptic);
  }
  for (long t : {1, 2, -3}) CHECK(classify_so12(*exp_exact(MatQ(so12::P()), ExpParam::time(t))) == ElementClass::parabolic);
  for (long tau : {2, 5}) CHECK(classify_so12(*exp_exact(MatQ(so12::H()), ExpParam::rate(tau))) == ElementClass::hyperbolic);
  CHECK(classify_so12(MatQ(MatQ::Identity(3, 3))) == ElementClass::identity);
  // constant along one-parameter subgroups, float backend
  MatD E = to_double(MatQ(so12::E())), H = to_double(MatQ(so12::H())), P2 = to_double(MatQ(so12::P()));
  for (double t = 0.1; t < 3.1; t += 0.3) CHECK(classify_so12(exp_matrix(E, t)) == ElementClass::elliptic);
  for (double t = 0.1; t < 5; t += 0.7) {
    CHECK(classify_so12(exp_matrix(P2, t)) == ElementClass::parabolic);
    CHECK(classify_so12(exp_matrix(H, t)) == ElementClass::hyperbolic);
  }
  MatQ bad = MatQ::Identity(3, 3);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(classify_so12(bad), std::invalid_argument);
}

TEST_CASE("sl(2,R) element classes") {
  MatD rot(2, 2);
  double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  rot << c, -s, s, c;
  CHECK(classify_sl2(rot) == ElementClass::elliptic);
  MatQ par(2, 2);
  par << 1, 1, 0, 1;
  CHECK(classify_sl2(par) == ElementClass::parabolic);
  MatQ hyp(2, 2);
  hyp << 2, 0, 0, Rat(1, 2);
  CHECK(classify_sl2(hyp) == ElementClass::hyperbolic);
  CHECK(classify_sl2(MatQ(-MatQ::Identity(2, 2))) == ElementClass::identity);
  MatQ bad(2, 2);
  bad << 2, 0, 0, 2;
  CHECK_THROWS_AS(classify_sl2(bad), std::invalid_argument);
}

TEST_CASE("kernel elements") {
  CHECK(classify_kernel({2, 0, 0, 0, 1}) == KernelClass::H_transformation);
  CHECK(classify_kernel({1, 0, 0, 1, 1}) == KernelClass::lightlike);
  CHECK(classify_kernel({1, 0, 1, 0, 1}) == KernelClass::spacelike);
  CHECK(classify_kernel({1, 1, 0, 0, 1}) == KernelClass::parabolic);
  CHECK(classify_kernel({1, 0, 0, 0, 1}) == KernelClass::identity);
  CHECK(classify_kernel({1, 0, 2, -1, 1}) == KernelClass::spacelike);
  // the isometry used to model the kernel
  for (const M2* a : {&sl2::E(), &sl2::H(), &sl2::P()})
    for (const M2* b : {&sl2::E(), &sl2::H(), &sl2::P()}) {
      M2 s = *a + *b;
      CHECK(q12(sl2_to_mink(s)) == -s.determinant());
    }
  // the photon is fixed pointwise
  const auto& c = default_chart();
  auto ph = kernel_photon(c);
  CHECK(is_totally_isotropic(ph));
  for (KernelElement k : {KernelElement{2, 1, 1, 1, 1}, KernelElement{Rat(2, 3), -1, 2, 0, -1}}) {
    M5 G = kernel_matrix(k, c);
    CHECK(M5(G.transpose() * Q5() * G) == Q5());
    for (int j = 0; j < 2; ++j) {
      V5 v = ph.basis.col(j);
      V5 gv = G * v;
      CHECK(linalg::rank(MatQ(columns(v, gv))) == 1);
    }
    CHECK(V5(G * (ph.basis.col(0) + ph.basis.col(1))) == V5(k.exp_t * k.exp_t * (ph.basis.col(0) + ph.basis.col(1))));
  }
}

TEST_CASE("fixed set classification agrees with the parameter rules on simple cases") {
  const auto& c = default_chart();
  auto ph = kernel_photon(c);
  auto cls = [&](KernelElement k) { return classify_by_fixed_set(kernel_matrix(k, c), ph, c.p); };
  CHECK(cls({1, 0, 0, 1, 1}) == KernelClass::lightlike);
  CHECK(cls({1, 0, 1, 0, 1}) == KernelClass::spacelike);
  CHECK(cls({1, 2, 0, 0, 1}) == KernelClass::parabolic);
  CHECK(cls({3, 0, 0, 0, 1}) == KernelClass::H_transformation);
  CHECK(cls({1, 0, 0, 0, 1}) == KernelClass::identity);
}

TEST_CASE("distinguished point of the mixed kernel case") {
  const auto& c = default_chart();
  auto ph = kernel_photon(c);
  // a pure spacelike kernel element is spacelike from the chart base point itself
  auto x = kernel_spacelike_point({1, 0, 1, 0, 1}, c);
  REQUIRE(x);
  CHECK(*x == EinPoint(c.p));
  for (KernelElement k : {KernelElement{1, 0, 2, -1, 1}, KernelElement{1, 0, 1, 1, 1}, KernelElement{1, 0, Rat(1, 2), 3, -1}}) {
    auto x0 = kernel_spacelike_point(k, c);
    REQUIRE(x0);
    CHECK(ph.contains(VecQ(x0->rep())));
    CHECK(classify_by_fixed_set(kernel_matrix(k, c), ph, x0->rep()) == KernelClass::spacelike);
  }
  CHECK_FALSE(kernel_spacelike_point({1, 0, 0, 1, 1}, c));
  CHECK_FALSE(kernel_spacelike_point({2, 0, 1, 0, 1}, c));
  CHECK_FALSE(kernel_spacelike_point({1, 1, 1, 0, 1}, c));
}

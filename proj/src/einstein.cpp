#include "einkit/einstein.hpp"

#include <cmath>

namespace einkit {

namespace {

V5 normalize(V5 v) {
  for (int i = 0; i < 5; ++i)
    if (v(i) != 0) {
      Rat f = v(i);
      v /= f;
      break;
    }
  return v;
}

V2 normalize2(V2 v) {
  if (v(0) != 0) return V2(1, v(1) / v(0));
  return V2(0, 1);
}

}  // namespace

EinPoint::EinPoint(const V5& v) {
  if (v.isZero()) throw std::invalid_argument("EinPoint: zero vector");
  if (inner<Rat>(v, v, R23) != 0) throw std::invalid_argument("EinPoint: vector is not null");
  rep_ = normalize(v);
}

EinPoint EinPoint::from(const VecQ& v) {
  if (v.size() != 5) throw std::invalid_argument("EinPoint: need 5 coordinates");
  return EinPoint(V5(v));
}

bool EinPoint::operator<(const EinPoint& o) const {
  for (int i = 0; i < 5; ++i)
    if (rep_(i) != o.rep_(i)) return rep_(i) < o.rep_(i);
  return false;
}

Photon::Photon(SubspaceQ s) : plane(std::move(s)) {
  if (plane.dim() != 2 || !is_totally_isotropic(plane)) throw std::invalid_argument("Photon: need a totally isotropic 2-plane");
}

void MinkowskiChart::validate() const {
  if (inner<Rat>(p, p, R23) != 0 || inner<Rat>(q, q, R23) != 0) throw std::invalid_argument("chart: p, q must be null");
  if (inner<Rat>(p, q, R23) != -1) throw std::invalid_argument("chart: <p,q> must be -1");
  for (int i = 0; i < 3; ++i) {
    V5 f = frame.col(i);
    if (inner<Rat>(p, f, R23) != 0 || inner<Rat>(q, f, R23) != 0) throw std::invalid_argument("chart: frame not orthogonal to p, q");
    for (int j = 0; j < 3; ++j) {
      V5 g = frame.col(j);
      Rat want = i != j ? 0 : (i == 0 ? -1 : 1);
      if (inner<Rat>(f, g, R23) != want) throw std::invalid_argument("chart: frame Gram must be diag(-1,1,1)");
    }
  }
}

M5 MinkowskiChart::basis() const {
  M5 b;
  b.col(0) = p;
  b.col(1) = q;
  b.rightCols(3) = frame;
  return b;
}

const MinkowskiChart& default_chart() {
  static const MinkowskiChart c = [] {
    MinkowskiChart ch;
    ch.p << 1, 0, 0, 1, 0;
    ch.q << Rat(1, 2), 0, 0, Rat(-1, 2), 0;
    ch.frame.setZero();
    ch.frame(1, 0) = 1;
    ch.frame(2, 1) = 1;
    ch.frame(4, 2) = 1;
    ch.validate();
    return ch;
  }();
  return c;
}

std::pair<std::array<double, 2>, std::array<double, 3>> double_cover_coords(const EinPoint& x) {
  auto v = to_double(x.rep());
  double a = std::hypot(v(0), v(1));
  double b = std::sqrt(v(2) * v(2) + v(3) * v(3) + v(4) * v(4));
  // sign rule: first nonzero coordinate positive (already true for the representative)
  return {{v(0) / a, v(1) / a}, {v(2) / b, v(3) / b, v(4) / b}};
}

bool on_lightcone(const EinPoint& vertex, const EinPoint& x) { return inner<Rat>(vertex.rep(), x.rep(), R23) == 0; }

Rat q12(const V3& x) { return -x(0) * x(0) + x(1) * x(1) + x(2) * x(2); }
Rat inner12(const V3& a, const V3& b) { return -a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

V5 chart_rep(const MinkowskiChart& c, const V3& x) { return c.q + c.lift(x) + (q12(x) / 2) * c.p; }

EinPoint chart_embed(const MinkowskiChart& c, const V3& x) { return EinPoint(chart_rep(c, x)); }

V3 chart_project(const MinkowskiChart& c, const V5& rep) {
  Rat s = inner<Rat>(rep, c.p, R23);
  if (s == 0) throw OnLightconeError("chart_project: point lies on the lightcone of the vertex");
  V5 r = rep * (Rat(-1) / s);
  V3 x;
  for (int i = 0; i < 3; ++i) {
    V5 f = c.frame.col(i);
    x(i) = inner<Rat>(r, f, R23) * Rat(i == 0 ? -1 : 1);
  }
  return x;
}

V3 chart_project(const MinkowskiChart& c, const EinPoint& e) { return chart_project(c, e.rep()); }

EinPoint limit_point(const MinkowskiChart& c, const V3& base, const V3& dir) {
  if (dir.isZero() || q12(dir) != 0) throw std::invalid_argument("limit_point: direction must be lightlike");
  return EinPoint(V5(c.lift(dir) + inner12(base, dir) * c.p));
}

HypersurfaceDescriptor HypersurfaceDescriptor::einstein(const V5& v) {
  if (inner<Rat>(v, v, R23) <= 0) throw std::invalid_argument("Einstein hypersphere needs a spacelike vector");
  return {HyperKind::einstein_hypersphere, v, std::nullopt, std::nullopt};
}
HypersurfaceDescriptor HypersurfaceDescriptor::spacelike(const V5& v) {
  if (inner<Rat>(v, v, R23) >= 0) throw std::invalid_argument("spacelike hypersphere needs a timelike vector");
  return {HyperKind::spacelike_hypersphere, v, std::nullopt, std::nullopt};
}
HypersurfaceDescriptor HypersurfaceDescriptor::timelike_circle(const SubspaceQ& s) {
  if (!(signature(s) == Signature{2, 1, 0})) throw std::invalid_argument("timelike circle needs a (2,1) subspace");
  return {HyperKind::timelike_circle, std::nullopt, s, std::nullopt};
}
HypersurfaceDescriptor HypersurfaceDescriptor::ideal_circle(const SubspaceQ& s) {
  if (!(signature(s) == Signature{1, 2, 0})) throw std::invalid_argument("ideal circle needs a (1,2) subspace");
  return {HyperKind::ideal_circle, std::nullopt, s, std::nullopt};
}
HypersurfaceDescriptor HypersurfaceDescriptor::lightcone(const EinPoint& v) {
  return {HyperKind::lightcone, std::nullopt, std::nullopt, v};
}

bool hypersurface_membership(const HypersurfaceDescriptor& h, const EinPoint& x) {
  switch (h.kind) {
    case HyperKind::einstein_hypersphere:
    case HyperKind::spacelike_hypersphere: return inner<Rat>(*h.vector, x.rep(), R23) == 0;
    case HyperKind::timelike_circle:
    case HyperKind::ideal_circle: return h.subspace->contains(VecQ(x.rep()));
    case HyperKind::lightcone: return on_lightcone(*h.vertex, x);
  }
  return false;
}

Eigen::Matrix<Rat, 4, 1> ads_coords(const M2& P) {
  Eigen::Matrix<Rat, 4, 1> c;
  c << (P(0, 0) + P(1, 1)) / 2, (P(0, 1) - P(1, 0)) / 2, (P(0, 0) - P(1, 1)) / 2, (P(0, 1) + P(1, 0)) / 2;
  return c;
}

M2 ads_matrix(const Eigen::Matrix<Rat, 4, 1>& c) {
  M2 P;
  P << c(0) + c(2), c(1) + c(3), c(3) - c(1), c(0) - c(2);
  return P;
}

Rat ads_form(const M2& U, const M2& V) { return -(U.trace() * V.trace() - (U * V).trace()) / 2; }

EinPoint ads_point_embed(const M2& P) {
  if (P.determinant() != 1) throw std::invalid_argument("ads_point_embed: det must be 1");
  V5 v;
  v.head<4>() = ads_coords(P);
  v(4) = 1;
  return EinPoint(v);
}

M5 sl2_pair_to_so23(const M2& X, const M2& Y) {
  M5 m = M5::Zero();
  for (int j = 0; j < 4; ++j) {
    Eigen::Matrix<Rat, 4, 1> e = Eigen::Matrix<Rat, 4, 1>::Zero();
    e(j) = 1;
    M2 B = ads_matrix(e);
    m.block<4, 1>(0, j) = ads_coords(M2(X * B - B * Y));
  }
  return m;
}

std::pair<V2, V2> ein11_coords(const M2& X) {
  if (X.isZero() || X.determinant() != 0) throw std::invalid_argument("ein11_coords: need a nonzero singular matrix");
  V2 ker = (X(0, 0) != 0 || X(0, 1) != 0) ? V2(-X(0, 1), X(0, 0)) : V2(-X(1, 1), X(1, 0));
  V2 im = X.col(0).isZero() ? V2(X.col(1)) : V2(X.col(0));
  return {normalize2(ker), normalize2(im)};
}

}  // namespace einkit

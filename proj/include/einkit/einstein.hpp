#pragma once

#include "einkit/qspace.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

namespace einkit {

using V2 = Eigen::Matrix<Rat, 2, 1>;

struct OnLightconeError : std::domain_error {
  using std::domain_error::domain_error;
};

// A point of Ein^{1,2}: a null line of R^{2,3}. The stored representative is
// scaled so that its first nonzero coordinate is 1, which makes equality exact.
class EinPoint {
 public:
  EinPoint() = default;
  explicit EinPoint(const V5& v);
  static EinPoint from(const VecQ& v);

  const V5& rep() const { return rep_; }
  bool operator==(const EinPoint& o) const { return rep_ == o.rep_; }
  bool operator<(const EinPoint& o) const;

 private:
  V5 rep_ = V5::Zero();
};

struct Photon {
  SubspaceQ plane;
  explicit Photon(SubspaceQ s);
  bool contains(const EinPoint& x) const { return plane.contains(VecQ(x.rep())); }
};

struct MinkowskiChart {
  V5 p;
  V5 q;
  Eigen::Matrix<Rat, 5, 3> frame;
  void validate() const;
  // columns p, q, f1, f2, f3
  M5 basis() const;
  V5 lift(const V3& x) const { return frame * x; }
};

const MinkowskiChart& default_chart();

std::pair<std::array<double, 2>, std::array<double, 3>> double_cover_coords(const EinPoint& x);
bool on_lightcone(const EinPoint& vertex, const EinPoint& x);

Rat q12(const V3& x);
Rat inner12(const V3& a, const V3& b);
V5 chart_rep(const MinkowskiChart& c, const V3& x);
EinPoint chart_embed(const MinkowskiChart& c, const V3& x);
V3 chart_project(const MinkowskiChart& c, const EinPoint& e);
V3 chart_project(const MinkowskiChart& c, const V5& rep);
EinPoint limit_point(const MinkowskiChart& c, const V3& base, const V3& dir);

enum class HyperKind { einstein_hypersphere, spacelike_hypersphere, timelike_circle, ideal_circle, lightcone };

struct HypersurfaceDescriptor {
  HyperKind kind;
  std::optional<V5> vector;            // hyperspheres
  std::optional<SubspaceQ> subspace;   // circles
  std::optional<EinPoint> vertex;      // lightcone

  static HypersurfaceDescriptor einstein(const V5& spacelike);
  static HypersurfaceDescriptor spacelike(const V5& timelike);
  static HypersurfaceDescriptor timelike_circle(const SubspaceQ& s21);
  static HypersurfaceDescriptor ideal_circle(const SubspaceQ& s12);
  static HypersurfaceDescriptor lightcone(const EinPoint& v);
};

bool hypersurface_membership(const HypersurfaceDescriptor& h, const EinPoint& x);

// AdS model: (M(2,R), -det) on e1..e4 via P = s*Id + k*E + h*H + m*[[0,1],[1,0]],
// with e5 the extra spacelike direction.
Eigen::Matrix<Rat, 4, 1> ads_coords(const M2& P);
M2 ads_matrix(const Eigen::Matrix<Rat, 4, 1>& c);
Rat ads_form(const M2& U, const M2& V);
EinPoint ads_point_embed(const M2& P);
// so(2,3) image of the vector field P -> X P - P Y
M5 sl2_pair_to_so23(const M2& X, const M2& Y);

std::pair<V2, V2> ein11_coords(const M2& X);

}  // namespace einkit

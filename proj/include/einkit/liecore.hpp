#pragma once

#include "einkit/einstein.hpp"

#include <optional>
#include <string>
#include <vector>

namespace einkit {

namespace so12 {
const M3& E();
const M3& H();
const M3& P();
const M3& Q();
M3 bracket(const M3& X, const M3& Y);
bool is_element(const M3& X);
// coefficients on (E, H, P)
V3 coords(const M3& X);
M3 from_coords(const V3& c);
}  // namespace so12

namespace sl2 {
const M2& E();
const M2& H();
const M2& P();
M2 bracket(const M2& X, const M2& Y);
V3 coords(const M2& X);
M2 from_coords(const V3& c);
}  // namespace sl2

inline M3 bracket_so12(const M3& X, const M3& Y) { return so12::bracket(X, Y); }
inline M2 bracket_sl2(const M2& X, const M2& Y) { return sl2::bracket(X, Y); }

// lambda + X + v in (R + so(1,2)) + R^{1,2}; X stored by its (E,H,P) coefficients
struct ConfAlgElement {
  Rat lambda = 0;
  V3 X = V3::Zero();
  V3 v = V3::Zero();

  M3 Xmat() const { return so12::from_coords(X); }
  Eigen::Matrix<Rat, 7, 1> flat() const;
  static ConfAlgElement from_flat(const Eigen::Matrix<Rat, 7, 1>& f);
  bool is_zero() const { return lambda == 0 && X.isZero() && v.isZero(); }
  bool operator==(const ConfAlgElement& o) const { return lambda == o.lambda && X == o.X && v == o.v; }
  ConfAlgElement operator+(const ConfAlgElement& o) const { return {lambda + o.lambda, X + o.X, v + o.v}; }
  ConfAlgElement operator-(const ConfAlgElement& o) const { return {lambda - o.lambda, X - o.X, v - o.v}; }
  ConfAlgElement operator*(const Rat& c) const { return {lambda * c, X * c, v * c}; }
  // the conformal vector field at a chart point
  V3 field(const V3& x) const { return lambda * x + Xmat() * x + v; }
};

// the 7-element spanning set: 1, YE, YH, YP, e1, e2, e3
std::vector<ConfAlgElement> conf_basis();

ConfAlgElement bracket_conf(const ConfAlgElement& a, const ConfAlgElement& b);

struct ConfGroupElement {
  Rat r = 1;
  M3 A = M3::Identity();
  V3 v = V3::Zero();
  void validate() const;
  V3 apply(const V3& x) const { return r * (A * x) + v; }
};

ConfAlgElement adjoint_conf(const ConfGroupElement& g, const ConfAlgElement& x);

M5 conf_to_so23(const ConfAlgElement& x, const MinkowskiChart& c = default_chart());
M5 conf_group_to_so23(const ConfGroupElement& g, const MinkowskiChart& c = default_chart());
// inverse of conf_to_so23 on its image
std::optional<ConfAlgElement> so23_to_conf(const M5& m, const MinkowskiChart& c = default_chart());

bool is_so23(const M5& m);
const M5& Q5();

// exp(tX) parameters that keep the result rational
struct ExpParam {
  enum class Kind { time, rate, angle } kind = Kind::time;
  Rat t = 0;    // time: nilpotent X, or t = 0
  Rat tau = 1;  // rate: tau = e^t, X diagonalizable with integer eigenvalues
  Rat c = 1;    // angle: (cos wt, sin wt) with X^3 = -w^2 X, w rational
  Rat s = 0;
  static ExpParam time(Rat t) { return {Kind::time, std::move(t), 1, 1, 0}; }
  static ExpParam rate(Rat tau) { return {Kind::rate, 0, std::move(tau), 1, 0}; }
  static ExpParam angle(Rat c, Rat s) { return {Kind::angle, 0, 1, std::move(c), std::move(s)}; }
};

// nullopt when X does not admit the requested closed form
std::optional<MatQ> exp_exact(const MatQ& X, const ExpParam& p);
MatD exp_matrix(const MatD& X, double t);

enum class ElementClass { identity, elliptic, parabolic, hyperbolic };
std::string to_string(ElementClass c);

template <class T>
ElementClass classify_so12(const Mat<T>& A);
template <class T>
ElementClass classify_sl2(const Mat<T>& A);

// Photon-stabilizer kernel element. Parametrized by exp_t = e^t > 0 so that the
// group matrix stays rational.
struct KernelElement {
  Rat exp_t = 1;
  Rat s = 0;
  Rat u = 0;
  Rat v = 0;
  int eps = 1;
  M2 A() const;
  M2 V() const;
};

enum class KernelClass { identity, lightlike, spacelike, parabolic, H_transformation };
std::string to_string(KernelClass c);

// isometry (sl2, -det) -> R^{1,2} used to model the kernel
V3 sl2_to_mink(const M2& X);
M2 mink_to_sl2(const V3& x);
ConfGroupElement kernel_conf_element(const KernelElement& k);
M5 kernel_matrix(const KernelElement& k, const MinkowskiChart& c = default_chart());
// the photon fixed pointwise by the kernel
SubspaceQ kernel_photon(const MinkowskiChart& c = default_chart());

// Null pieces of the fixed set of a group matrix in Ein^{1,2}
struct FixedPiece {
  enum class Kind { linear, conic } kind = Kind::linear;
  SubspaceQ space;  // linear: every line is fixed; conic: the eigenspace containing it
};
// null set of W as linear pieces, or a conic when it is not a finite union of subspaces
std::vector<FixedPiece> null_pieces(const SubspaceQ& W);
std::vector<FixedPiece> fixed_pieces(const M5& G);
KernelClass classify_by_fixed_set(const M5& G, const SubspaceQ& photon, const V5& vertex);

KernelClass classify_kernel(const KernelElement& k);
// For t = s = 0 and u != 0: the unique point x0 of the kernel photon from which k is a
// spacelike transformation (its fixed set is two photons meeting at x0).
std::optional<EinPoint> kernel_spacelike_point(const KernelElement& k, const MinkowskiChart& c = default_chart());

}  // namespace einkit

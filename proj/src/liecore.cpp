#include "einkit/liecore.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace einkit {

namespace so12 {

const M3& E() {
  static const M3 m = (M3() << 0, 0, 0, 0, 0, 1, 0, -1, 0).finished();
  return m;
}
const M3& H() {
  static const M3 m = (M3() << 0, 1, 0, 1, 0, 0, 0, 0, 0).finished();
  return m;
}
const M3& P() {
  static const M3 m = (M3() << 0, 0, 1, 0, 0, 1, 1, -1, 0).finished();
  return m;
}
const M3& Q() {
  static const M3 m = (M3() << -1, 0, 0, 0, 1, 0, 0, 0, 1).finished();
  return m;
}

M3 bracket(const M3& X, const M3& Y) { return X * Y - Y * X; }

bool is_element(const M3& X) { return M3(X.transpose() * Q() + Q() * X).isZero(); }

V3 coords(const M3& X) {
  if (!is_element(X)) throw std::invalid_argument("so12::coords: not in so(1,2)");
  return V3(X(1, 2) - X(0, 2), X(0, 1), X(0, 2));
}

M3 from_coords(const V3& c) { return c(0) * E() + c(1) * H() + c(2) * P(); }

}  // namespace so12

namespace sl2 {

const M2& E() {
  static const M2 m = (M2() << 0, 1, -1, 0).finished();
  return m;
}
const M2& H() {
  static const M2 m = (M2() << 1, 0, 0, -1).finished();
  return m;
}
const M2& P() {
  static const M2 m = (M2() << 0, 1, 0, 0).finished();
  return m;
}

M2 bracket(const M2& X, const M2& Y) { return X * Y - Y * X; }

V3 coords(const M2& X) {
  if (X.trace() != 0) throw std::invalid_argument("sl2::coords: trace must vanish");
  return V3(-X(1, 0), X(0, 0), X(0, 1) + X(1, 0));
}

M2 from_coords(const V3& c) { return c(0) * E() + c(1) * H() + c(2) * P(); }

}  // namespace sl2

Eigen::Matrix<Rat, 7, 1> ConfAlgElement::flat() const {
  Eigen::Matrix<Rat, 7, 1> f;
  f << lambda, X, v;
  return f;
}

ConfAlgElement ConfAlgElement::from_flat(const Eigen::Matrix<Rat, 7, 1>& f) {
  return {f(0), f.segment<3>(1), f.segment<3>(4)};
}

std::vector<ConfAlgElement> conf_basis() {
  std::vector<ConfAlgElement> b;
  for (int i = 0; i < 7; ++i) {
    Eigen::Matrix<Rat, 7, 1> f = Eigen::Matrix<Rat, 7, 1>::Zero();
    f(i) = 1;
    b.push_back(ConfAlgElement::from_flat(f));
  }
  return b;
}

ConfAlgElement bracket_conf(const ConfAlgElement& a, const ConfAlgElement& b) {
  M3 V = a.Xmat(), W = b.Xmat();
  ConfAlgElement r;
  r.lambda = 0;
  r.X = so12::coords(so12::bracket(V, W));
  r.v = V * b.v + a.lambda * b.v - W * a.v - b.lambda * a.v;
  return r;
}

void ConfGroupElement::validate() const {
  if (r <= 0) throw std::invalid_argument("ConfGroupElement: r must be positive");
  if (!M3(A.transpose() * so12::Q() * A - so12::Q()).isZero() || A.determinant() != 1 || A(0, 0) < 1)
    throw std::invalid_argument("ConfGroupElement: A must lie in SO0(1,2)");
}

ConfAlgElement adjoint_conf(const ConfGroupElement& g, const ConfAlgElement& x) {
  M3 Ainv = *linalg::inverse(MatQ(g.A));
  M3 AWA = g.A * x.Xmat() * Ainv;
  ConfAlgElement out;
  out.lambda = x.lambda;
  out.X = so12::coords(AWA);
  out.v = g.r * (g.A * x.v) - x.lambda * g.v - AWA * g.v;
  return out;
}

const M5& Q5() {
  static const M5 q = [] {
    M5 m = M5::Zero();
    m.diagonal() << -1, -1, 1, 1, 1;
    return m;
  }();
  return q;
}

bool is_so23(const M5& m) { return M5(m.transpose() * Q5() + Q5() * m).isZero(); }

namespace {

struct ChartBasis {
  M5 B;
  M5 Binv;
};

ChartBasis chart_basis(const MinkowskiChart& c) {
  ChartBasis cb;
  cb.B = c.basis();
  cb.Binv = *linalg::inverse(MatQ(cb.B));
  return cb;
}

const ChartBasis& cached_basis(const MinkowskiChart& c) {
  static const ChartBasis def = chart_basis(default_chart());
  if (&c == &default_chart()) return def;
  thread_local ChartBasis tmp;
  tmp = chart_basis(c);
  return tmp;
}

// index 0 = p, 1 = q, 2..4 = frame
M5 conf_block(const ConfAlgElement& x) {
  M5 m = M5::Zero();
  m(0, 0) = x.lambda;
  m(1, 1) = -x.lambda;
  m.block<3, 3>(2, 2) = x.Xmat();
  for (int i = 0; i < 3; ++i) {
    m(2 + i, 1) = x.v(i);
    m(0, 2 + i) = so12::Q()(i, i) * x.v(i);
  }
  return m;
}

M5 conf_group_block(const ConfGroupElement& g) {
  M5 lin = M5::Identity();
  lin.block<3, 3>(2, 2) = g.A;
  M5 hom = M5::Identity();
  hom(0, 0) = g.r;
  hom(1, 1) = Rat(1) / g.r;
  M5 tr = M5::Identity();
  for (int i = 0; i < 3; ++i) {
    tr(2 + i, 1) = g.v(i);
    tr(0, 2 + i) = so12::Q()(i, i) * g.v(i);
  }
  tr(0, 1) = q12(g.v) / 2;
  return tr * hom * lin;
}

}  // namespace

M5 conf_to_so23(const ConfAlgElement& x, const MinkowskiChart& c) {
  const auto& cb = cached_basis(c);
  return cb.B * conf_block(x) * cb.Binv;
}

M5 conf_group_to_so23(const ConfGroupElement& g, const MinkowskiChart& c) {
  const auto& cb = cached_basis(c);
  return cb.B * conf_group_block(g) * cb.Binv;
}

std::optional<ConfAlgElement> so23_to_conf(const M5& m, const MinkowskiChart& c) {
  const auto& cb = cached_basis(c);
  M5 b = cb.Binv * m * cb.B;
  ConfAlgElement x;
  x.lambda = b(0, 0);
  M3 X = b.block<3, 3>(2, 2);
  if (!so12::is_element(X)) return std::nullopt;
  x.X = so12::coords(X);
  x.v = b.block<3, 1>(2, 1);
  if (conf_block(x) != b) return std::nullopt;
  return x;
}

namespace {

MatQ mat_pow(const MatQ& x, int k) {
  MatQ r = MatQ::Identity(x.rows(), x.cols());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

Rat rat_pow(const Rat& x, long k) {
  Rat r = 1;
  Rat b = k >= 0 ? x : Rat(1) / x;
  for (long i = 0; i < std::labs(k); ++i) r *= b;
  return r;
}

}  // namespace

std::optional<MatQ> exp_exact(const MatQ& X, const ExpParam& p) {
  const Eigen::Index n = X.rows();
  const MatQ id = MatQ::Identity(n, n);
  switch (p.kind) {
    case ExpParam::Kind::time: {
      if (p.t == 0) return id;
      if (!mat_pow(X, static_cast<int>(n)).isZero()) return std::nullopt;
      MatQ acc = id, term = id;
      for (int k = 1; k < n; ++k) {
        term = term * X * (p.t / Rat(k));
        acc += term;
      }
      return acc;
    }
    case ExpParam::Kind::rate: {
      if (p.tau <= 0) return std::nullopt;
      auto eig = linalg::rational_eigenvalues(X);
      // require a squarefree split minimal polynomial with integer roots
      int total = 0;
      for (const auto& mu : eig) {
        if (denominator(mu) != 1) return std::nullopt;
        total += static_cast<int>(linalg::nullspace(MatQ(X - mu * id)).cols());
      }
      if (total != n) return std::nullopt;
      MatQ acc = MatQ::Zero(n, n);
      for (const auto& mu : eig) {
        MatQ proj = id;
        for (const auto& nu : eig)
          if (nu != mu) proj = proj * (X - nu * id) / (mu - nu);
        acc += rat_pow(p.tau, numerator(mu).convert_to<long>()) * proj;
      }
      return acc;
    }
    case ExpParam::Kind::angle: {
      if (p.c * p.c + p.s * p.s != 1) return std::nullopt;
      MatQ x3 = mat_pow(X, 3);
      Rat w2 = 0;
      bool found = false;
      for (Eigen::Index i = 0; i < n && !found; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (X(i, j) != 0) {
            w2 = -x3(i, j) / X(i, j);
            found = true;
            break;
          }
      if (!found) return id;
      if (w2 <= 0 || !MatQ(x3 + w2 * X).isZero()) return std::nullopt;
      auto w = linalg::rational_sqrt(w2);
      if (!w) return std::nullopt;
      return MatQ(id + (p.s / *w) * X + ((1 - p.c) / w2) * X * X);
    }
  }
  return std::nullopt;
}

MatD exp_matrix(const MatD& X, double t) {
  Eigen::MatrixXd m = Eigen::MatrixXd(X) * t;
  Eigen::MatrixXd e = m.exp();
  return MatD(e);
}

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::identity: return "identity";
    case ElementClass::elliptic: return "elliptic";
    case ElementClass::parabolic: return "parabolic";
    case ElementClass::hyperbolic: return "hyperbolic";
  }
  return "?";
}

template <class T>
ElementClass classify_so12(const Mat<T>& A) {
  if (A.rows() != 3 || A.cols() != 3) throw std::invalid_argument("classify_so12: need 3x3");
  Mat<T> q = Mat<T>::Zero(3, 3);
  q.diagonal() << T(-1), T(1), T(1);
  Mat<T> d = A.transpose() * q * A - q;
  const double scale = std::max(1.0, linalg::scale_of(A));
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (!Num<T>::zero(d(i, j), scale * scale)) throw std::invalid_argument("classify_so12: not an isometry");
  if (Num<T>::sign(T(A.determinant() - T(1)), scale * scale * scale) != 0 || Num<T>::sign(T(A(0, 0) - T(1)), scale) < 0)
    throw std::invalid_argument("classify_so12: not in the identity component");
  int s = Num<T>::sign(T(A.trace() - T(3)), scale);
  if (s < 0) return ElementClass::elliptic;
  if (s > 0) return ElementClass::hyperbolic;
  Mat<T> id = Mat<T>::Identity(3, 3);
  Mat<T> diff = A - id;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (!Num<T>::zero(diff(i, j), scale)) return ElementClass::parabolic;
  return ElementClass::identity;
}

template <class T>
ElementClass classify_sl2(const Mat<T>& A) {
  if (A.rows() != 2 || A.cols() != 2) throw std::invalid_argument("classify_sl2: need 2x2");
  const double scale = std::max(1.0, linalg::scale_of(A));
  if (!Num<T>::zero(T(A.determinant() - T(1)), scale * scale)) throw std::invalid_argument("classify_sl2: det must be 1");
  T tr = A.trace();
  if (Num<T>::zero(T(A(0, 1)), scale) && Num<T>::zero(T(A(1, 0)), scale) && Num<T>::zero(T(A(0, 0) - A(1, 1)), scale))
    return ElementClass::identity;
  T a = tr < T(0) ? T(-tr) : tr;
  int s = Num<T>::sign(T(a - T(2)), scale);
  if (s < 0) return ElementClass::elliptic;
  if (s > 0) return ElementClass::hyperbolic;
  return ElementClass::parabolic;
}

template ElementClass classify_so12<Rat>(const Mat<Rat>&);
template ElementClass classify_so12<double>(const Mat<double>&);
template ElementClass classify_sl2<Rat>(const Mat<Rat>&);
template ElementClass classify_sl2<double>(const Mat<double>&);

std::string to_string(KernelClass c) {
  switch (c) {
    case KernelClass::identity: return "identity";
    case KernelClass::lightlike: return "lightlike";
    case KernelClass::spacelike: return "spacelike";
    case KernelClass::parabolic: return "parabolic";
    case KernelClass::H_transformation: return "H_transformation";
  }
  return "?";
}

M2 KernelElement::A() const {
  if (exp_t <= 0) throw std::invalid_argument("KernelElement: exp_t must be positive");
  M2 a;
  a << Rat(eps) * exp_t, s, 0, Rat(eps) / exp_t;
  return a;
}

M2 KernelElement::V() const {
  M2 m;
  m << u, v, 0, -u;
  return m;
}

namespace {
const M3& phi_matrix() {
  // columns: images of sl2 E, H, P
  static const M3 m = (M3() << Rat(5, 4), 0, 1, Rat(3, 4), 0, 1, 0, 1, 0).finished();
  return m;
}
}  // namespace

V3 sl2_to_mink(const M2& X) { return phi_matrix() * sl2::coords(X); }

M2 mink_to_sl2(const V3& x) {
  static const M3 inv = *linalg::inverse(MatQ(phi_matrix()));
  return sl2::from_coords(V3(inv * x));
}

ConfGroupElement kernel_conf_element(const KernelElement& k) {
  M2 A = k.A();
  M2 Ainv = *linalg::inverse(MatQ(A));
  ConfGroupElement g;
  g.r = k.exp_t * k.exp_t;
  for (int j = 0; j < 3; ++j) {
    V3 e = V3::Zero();
    e(j) = 1;
    g.A.col(j) = sl2_to_mink(M2(A * mink_to_sl2(e) * Ainv));
  }
  g.v = sl2_to_mink(k.V());
  return g;
}

M5 kernel_matrix(const KernelElement& k, const MinkowskiChart& c) { return conf_group_to_so23(kernel_conf_element(k), c); }

SubspaceQ kernel_photon(const MinkowskiChart& c) {
  V3 n = sl2_to_mink(sl2::P());
  return SubspaceQ(R23, columns(c.p, c.lift(n)));
}

std::vector<FixedPiece> null_pieces(const SubspaceQ& W) {
  std::vector<FixedPiece> out;
  if (W.dim() == 0) return out;
  Signature sg = linalg::inertia(MatQ(W.gram()));
  SubspaceQ rad(W.space, MatQ(W.basis * linalg::nullspace(MatQ(W.gram()))));
  if (sg.p == 0 || sg.q == 0) {
    if (rad.dim() > 0) out.push_back({FixedPiece::Kind::linear, rad});
    return out;
  }
  if (sg.p == 1 && sg.q == 1) {
    // complement of the radical inside W is a hyperbolic plane
    MatQ both(W.space.dim(), W.dim() + rad.dim());
    both << rad.basis, W.basis;
    MatQ cb = linalg::column_basis(both);
    VecQ u1 = cb.col(rad.dim()), u2 = cb.col(rad.dim() + 1);
    Rat a = inner(u1, u1, W.space), b = inner(u1, u2, W.space), cc = inner(u2, u2, W.space);
    auto root = linalg::rational_sqrt(b * b - a * cc);
    if (!root) return {{FixedPiece::Kind::conic, W}};
    std::vector<VecQ> lines;
    if (a != 0) {
      // x = alpha u1 + u2 with a alpha^2 + 2 b alpha + c = 0
      for (int sgn : {1, -1}) lines.push_back(VecQ(((-b + Rat(sgn) * *root) / a) * u1 + u2));
    } else {
      lines.push_back(u1);
      lines.push_back(VecQ(cc * u1 - 2 * b * u2));
    }
    for (const auto& l : lines) {
      MatQ m(W.space.dim(), rad.dim() + 1);
      m << rad.basis, l;
      out.push_back({FixedPiece::Kind::linear, SubspaceQ(W.space, m)});
    }
    return out;
  }
  return {{FixedPiece::Kind::conic, W}};
}

std::vector<FixedPiece> fixed_pieces(const M5& G) {
  std::vector<FixedPiece> out;
  MatQ g(G);
  MatQ id = MatQ::Identity(5, 5);
  for (const auto& mu : linalg::rational_eigenvalues(g)) {
    auto pieces = null_pieces(SubspaceQ(R23, linalg::nullspace(MatQ(g - mu * id))));
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

KernelClass classify_by_fixed_set(const M5& G, const SubspaceQ& photon, const V5& vertex) {
  if (G == M5::Identity()) return KernelClass::identity;
  std::vector<FixedPiece> rest;
  for (const auto& pc : fixed_pieces(G))
    if (!(pc.kind == FixedPiece::Kind::linear && photon.contains(pc.space))) rest.push_back(pc);
  if (rest.empty()) return KernelClass::lightlike;
  if (rest.size() == 1 && rest[0].kind == FixedPiece::Kind::linear && rest[0].space.dim() == 2) {
    const auto& s = rest[0].space;
    int meet = static_cast<int>(linalg::intersect(s.basis, photon.basis).cols());
    if (meet == 0) return KernelClass::H_transformation;
    bool in_vertex_perp = true;
    for (int j = 0; j < s.dim(); ++j) in_vertex_perp = in_vertex_perp && inner(VecQ(s.basis.col(j)), VecQ(vertex), R23) == 0;
    if (meet == 1 && in_vertex_perp) return KernelClass::spacelike;
  }
  return KernelClass::parabolic;
}

KernelClass classify_kernel(const KernelElement& k) {
  if (k.exp_t <= 0) throw std::invalid_argument("classify_kernel: exp_t must be positive");
  if (k.exp_t != 1) return KernelClass::H_transformation;
  if (k.s != 0) return KernelClass::parabolic;
  if (k.u == 0 && k.v == 0) return KernelClass::identity;
  if (k.u == 0) return KernelClass::lightlike;
  if (k.v == 0) return KernelClass::spacelike;
  // mixed case: decided by the fixed set relative to the default chart
  const auto& c = default_chart();
  return classify_by_fixed_set(kernel_matrix(k, c), kernel_photon(c), c.p);
}

std::optional<EinPoint> kernel_spacelike_point(const KernelElement& k, const MinkowskiChart& c) {
  if (k.exp_t != 1 || k.s != 0 || k.u == 0) return std::nullopt;
  auto photon = kernel_photon(c);
  std::vector<FixedPiece> rest;
  for (const auto& pc : fixed_pieces(kernel_matrix(k, c)))
    if (!(pc.kind == FixedPiece::Kind::linear && photon.contains(pc.space))) rest.push_back(pc);
  if (rest.size() != 1 || rest[0].kind != FixedPiece::Kind::linear || rest[0].space.dim() != 2) return std::nullopt;
  MatQ meet = linalg::intersect(rest[0].space.basis, photon.basis);
  if (meet.cols() != 1) return std::nullopt;
  return EinPoint(V5(meet.col(0)));
}

}  // namespace einkit

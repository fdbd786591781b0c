#pragma once

#include "einkit/linalg.hpp"

#include <stdexcept>
#include <array>
#include <string>

namespace einkit {

enum class Causal { spacelike, timelike, lightlike };
std::string to_string(Causal c);

// R^{m,n}: basis e_1..e_{m+n}, the first m negative
struct QuadSpace {
  int m = 0;
  int n = 0;
  int dim() const { return m + n; }
  int diag(int i) const { return i < m ? -1 : 1; }
  template <class T>
  Mat<T> gram() const {
    Mat<T> g = Mat<T>::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) g(i, i) = T(diag(i));
    return g;
  }
  bool operator==(const QuadSpace&) const = default;
};

inline const QuadSpace R12{1, 2};
inline const QuadSpace R23{2, 3};

template <class T, class A, class B>
T inner(const Eigen::MatrixBase<A>& u, const Eigen::MatrixBase<B>& v, const QuadSpace& s) {
  if (u.size() != s.dim() || v.size() != s.dim()) throw std::invalid_argument("inner: dimension mismatch");
  T acc = 0;
  for (int i = 0; i < s.dim(); ++i) {
    if (s.diag(i) < 0)
      acc -= u(i) * v(i);
    else
      acc += u(i) * v(i);
  }
  return acc;
}

inline Rat inner(const VecQ& u, const VecQ& v, const QuadSpace& s) { return inner<Rat>(u, v, s); }
inline double inner(const VecD& u, const VecD& v, const QuadSpace& s) { return inner<double>(u, v, s); }

template <class T>
struct Subspace {
  QuadSpace space;
  Mat<T> basis;  // columns

  Subspace() = default;
  Subspace(QuadSpace sp, Mat<T> b) : space(sp), basis(std::move(b)) {
    if (basis.rows() != space.dim()) throw std::invalid_argument("subspace: dimension mismatch");
  }
  // basis may be dependent; keeps an independent subset
  static Subspace span(QuadSpace sp, const Mat<T>& vecs) { return Subspace(sp, linalg::column_basis(vecs)); }

  int dim() const { return static_cast<int>(basis.cols()); }
  bool contains(const Vec<T>& v) const { return linalg::in_span(basis, v); }
  bool contains(const Subspace& o) const {
    for (int j = 0; j < o.dim(); ++j)
      if (!contains(Vec<T>(o.basis.col(j)))) return false;
    return true;
  }
  bool same_as(const Subspace& o) const { return dim() == o.dim() && contains(o); }
  Mat<T> gram() const { return basis.transpose() * space.template gram<T>() * basis; }
};

using SubspaceQ = Subspace<Rat>;

template <class T>
Signature signature(const Subspace<T>& s) {
  if (s.dim() == 0) throw std::invalid_argument("signature: empty basis");
  if (linalg::rank(s.basis) != s.dim()) throw std::invalid_argument("signature: dependent basis");
  return linalg::inertia(Mat<T>(s.gram()));
}

template <class T>
Subspace<T> orthogonal_complement(const Subspace<T>& s) {
  if (s.dim() == 0) return Subspace<T>(s.space, Mat<T>::Identity(s.space.dim(), s.space.dim()));
  Mat<T> a = s.basis.transpose() * s.space.template gram<T>();
  return Subspace<T>(s.space, linalg::nullspace(a));
}

template <class T>
Causal causal_character(const Vec<T>& v, const QuadSpace& s) {
  bool nz = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) nz = nz || !Num<T>::zero(v(i));
  if (!nz) throw std::invalid_argument("causal_character: zero vector");
  T n = inner<T>(v, v, s);
  double scale = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) scale = std::max(scale, Num<T>::magnitude(v(i)));
  int sg = Num<T>::sign(n, scale * scale);
  return sg < 0 ? Causal::timelike : sg > 0 ? Causal::spacelike : Causal::lightlike;
}

template <class T>
bool is_totally_isotropic(const Subspace<T>& s) {
  Mat<T> g = s.gram();
  double scale = linalg::scale_of(Mat<T>(s.basis));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (!Num<T>::zero(g(i, j), scale * scale)) return false;
  return true;
}

inline VecQ unit(int dim, int i) {
  VecQ v = VecQ::Zero(dim);
  v(i) = 1;
  return v;
}

template <class... V>
MatQ columns(const V&... vs) {
  std::array<VecQ, sizeof...(V)> arr{VecQ(vs)...};
  MatQ m(arr[0].size(), static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = arr[k];
  return m;
}

}  // namespace einkit

#pragma once

#include "einkit/scalar.hpp"

#include <Eigen/Eigenvalues>

#include <optional>
#include <utility>
#include <vector>

namespace einkit {

struct Signature {
  int p = 0;  // negative
  int q = 0;  // positive
  int r = 0;  // isotropic
  int dim() const { return p + q + r; }
  bool operator==(const Signature&) const = default;
};

namespace linalg {

template <class T>
double scale_of(const Mat<T>& a) {
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) s = std::max(s, Num<T>::magnitude(a(i, j)));
  return s;
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& a) {
  const double scale = scale_of(a);
  std::vector<int> piv;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index best = -1;
    double best_mag = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i) {
      if (Num<T>::zero(a(i, col), scale)) continue;
      if constexpr (Num<T>::exact) {
        best = i;
        break;
      } else {
        double m = std::abs(a(i, col));
        if (m > best_mag) best_mag = m, best = i;
      }
    }
    if (best < 0) continue;
    a.row(row).swap(a.row(best));
    T inv = T(1) / a(row, col);
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == T(0)) continue;
      T f = a(i, col);
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
      if constexpr (!Num<T>::exact) a(i, col) = 0;
    }
    piv.push_back(static_cast<int>(col));
    ++row;
  }
  return piv;
}

template <class T>
int rank(Mat<T> a) {
  return static_cast<int>(rref(a).size());
}

// Indices of a maximal independent prefix-greedy subset of the columns.
template <class T>
std::vector<int> independent_columns(const Mat<T>& a) {
  Mat<T> w = a;
  return rref(w);
}

template <class T>
Mat<T> column_basis(const Mat<T>& a) {
  auto idx = independent_columns(a);
  Mat<T> out(a.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
  return out;
}

template <class T>
Mat<T> nullspace(const Mat<T>& a) {
  Mat<T> r = a;
  auto piv = rref(r);
  std::vector<bool> is_piv(static_cast<std::size_t>(a.cols()), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  Mat<T> out(a.cols(), a.cols() - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    Vec<T> v = Vec<T>::Zero(a.cols());
    v(f) = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i]) = -r(static_cast<Eigen::Index>(i), f);
    out.col(k++) = v;
  }
  return out;
}

template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b) {
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<T> x = Vec<T>::Zero(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i]) = aug(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

template <class T>
bool in_span(const Mat<T>& basis, const Vec<T>& v) {
  if (basis.cols() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!Num<T>::zero(v(i))) return false;
    return true;
  }
  return solve(basis, v).has_value();
}

// span(a) ∩ span(b) for column bases a, b
template <class T>
Mat<T> intersect(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() == 0 || b.cols() == 0) return Mat<T>(a.rows(), 0);
  Mat<T> ab(a.rows(), a.cols() + b.cols());
  ab << a, -b;
  Mat<T> n = nullspace(ab);
  Mat<T> v = a * n.topRows(a.cols());
  return column_basis(v);
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  const Eigen::Index n = a.rows();
  Mat<T> aug(n, 2 * n);
  aug << a, Mat<T>::Identity(n, n);
  auto piv = rref(aug);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1)
    return std::nullopt;
  return Mat<T>(aug.rightCols(n));
}

// Sylvester inertia of a symmetric matrix.
template <class T>
Signature inertia(const Mat<T>& g_in) {
  Signature s;
  const Eigen::Index n = g_in.rows();
  if constexpr (Num<T>::exact) {
    Mat<T> g = g_in;
    Eigen::Index k = 0;
    for (; k < n; ++k) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k; i < n; ++i)
        if (g(i, i) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = k; i < n && pi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (g(i, j) != 0) {
              pi = i, pj = j;
              break;
            }
        if (pi < 0) break;  // remaining block is zero
        // congruence e_i -> e_i + e_j makes the diagonal entry 2 g_ij
        g.row(pi) += g.row(pj);
        g.col(pi) += g.col(pj);
        piv = pi;
      }
      g.row(k).swap(g.row(piv));
      g.col(k).swap(g.col(piv));
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (g(i, k) == 0) continue;
        T f = g(i, k) / g(k, k);
        g.row(i) -= f * g.row(k);
        g.col(i) -= f * g.col(k);
      }
      if (g(k, k) < 0)
        ++s.p;
      else
        ++s.q;
    }
    s.r = static_cast<int>(n - k);
  } else {
    if (n == 0) return s;
    Eigen::SelfAdjointEigenSolver<Mat<T>> es(g_in);
    const double scale = scale_of(g_in);
    for (Eigen::Index i = 0; i < n; ++i) {
      int sg = Num<T>::sign(es.eigenvalues()(i), scale);
      if (sg < 0)
        ++s.p;
      else if (sg > 0)
        ++s.q;
      else
        ++s.r;
    }
  }
  return s;
}

// Polynomials over Q, coefficients from low to high degree.
using Poly = std::vector<Rat>;

Poly charpoly(const MatQ& a);  // det(x I - a), monic
Poly poly_gcd(Poly a, Poly b);
Poly poly_derivative(const Poly& a);
Poly poly_div(const Poly& a, const Poly& b);  // exact quotient
Rat poly_eval(const Poly& a, const Rat& x);
// distinct rational roots, ascending
std::vector<Rat> rational_roots(const Poly& a);
std::vector<Rat> rational_eigenvalues(const MatQ& a);
// closest rational with denominator <= max_den
Rat rationalize(double x, long max_den);
// exact square root of a nonnegative rational, if it exists
std::optional<Rat> rational_sqrt(const Rat& x);

}  // namespace linalg
}  // namespace einkit

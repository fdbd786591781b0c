#include "einkit/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace einkit::linalg {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

Poly charpoly(const MatQ& a) {
  // Faddeev-LeVerrier
  const Eigen::Index n = a.rows();
  Poly c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  MatQ m = MatQ::Zero(n, n);
  MatQ id = MatQ::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    MatQ am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Rat(k);
  }
  return c;
}

Poly poly_derivative(const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

Poly poly_div(const Poly& a_in, const Poly& b) {
  Poly a = a_in;
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return q;
}

Rat poly_eval(const Poly& a, const Rat& x) {
  Rat acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat rationalize(double x, long max_den) {
  // continued-fraction convergents
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(r);
    if (std::abs(fl) > 1e15) break;
    long a = static_cast<long>(fl);
    long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    double frac = r - fl;
    if (std::abs(frac) < 1e-14) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return Rat(static_cast<long>(std::llround(x)));
  return Rat(h1) / Rat(k1);
}

std::vector<Rat> rational_roots(const Poly& a_in) {
  Poly a = a_in;
  trim(a);
  std::vector<Rat> out;
  if (a.size() <= 1) return out;
  Poly sq = poly_div(a, poly_gcd(a, poly_derivative(a)));
  trim(sq);
  // zero root handled exactly
  while (sq.size() > 1 && sq[0] == 0) {
    out.push_back(0);
    sq.erase(sq.begin());
  }
  const int n = static_cast<int>(sq.size()) - 1;
  if (n >= 1) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double lead = sq.back().convert_to<double>();
    for (int i = 0; i < n; ++i) comp(0, i) = -sq[static_cast<std::size_t>(n - 1 - i)].convert_to<double>() / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < n; ++i) {
      auto z = es.eigenvalues()(i);
      if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z.real()))) continue;
      for (long den : {1000L, 100000L, 10000000L}) {
        Rat cand = rationalize(z.real(), den);
        if (poly_eval(sq, cand) == 0) {
          out.push_back(cand);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> rational_eigenvalues(const MatQ& a) { return rational_roots(charpoly(a)); }

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  using boost::multiprecision::mpz_int;
  mpz_int n = numerator(x), d = denominator(x);
  mpz_int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rat(rn) / Rat(rd);
}

}  // namespace einkit::linalg

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace einkit {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// fixed-size kernels use M2/M3/M5 below; these cover intermediate systems
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;
using MatD = Mat<double>;
using VecD = Vec<double>;

using M2 = Eigen::Matrix<Rat, 2, 2>;
using M3 = Eigen::Matrix<Rat, 3, 3>;
using M5 = Eigen::Matrix<Rat, 5, 5>;
using V3 = Eigen::Matrix<Rat, 3, 1>;
using V5 = Eigen::Matrix<Rat, 5, 1>;

enum class Backend { exact, floating };

// tolerance used by every rank/sign decision of the float backend
double float_eps();
void set_float_eps(double eps);

template <class T>
struct Num;

template <>
struct Num<Rat> {
  static constexpr bool exact = true;
  static bool zero(const Rat& x, double = 1.0) { return x == 0; }
  static int sign(const Rat& x, double = 1.0) { return x.sign(); }
  static double magnitude(const Rat& x) { return std::abs(x.convert_to<double>()); }
};

template <>
struct Num<double> {
  static constexpr bool exact = false;
  static bool zero(double x, double scale = 1.0) {
    return std::abs(x) < float_eps() * std::max(1.0, scale);
  }
  static int sign(double x, double scale = 1.0) {
    if (zero(x, scale)) return 0;
    return x < 0 ? -1 : 1;
  }
  static double magnitude(double x) { return std::abs(x); }
};

// accepts "3", "-1/2", "0.25", "1e-3"
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& x);

template <class Derived>
auto to_double(const Eigen::MatrixBase<Derived>& m) {
  using Out = Eigen::Matrix<double, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime, 0,
                            Derived::MaxRowsAtCompileTime, Derived::MaxColsAtCompileTime>;
  Out r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).template convert_to<double>();
  return r;
}

inline Rat rat(long num, long den = 1) { return Rat(num) / Rat(den); }

}  // namespace einkit

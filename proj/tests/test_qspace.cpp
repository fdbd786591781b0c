#include "doctest.h"
#include "einkit/qspace.hpp"

#include <random>

using namespace einkit;

namespace {
VecQ vec(std::initializer_list<long> xs) {
  VecQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}
}  // namespace

TEST_CASE("inner product of R^{1,2} and R^{2,3}") {
  CHECK(inner(vec({1, 0, 0}), vec({1, 0, 0}), R12) == -1);
  CHECK(inner(vec({1, 1, 0}), vec({1, 1, 0}), R12) == 0);
  CHECK(inner(vec({1, 0, 1, 0, 0}), vec({0, 1, 0, 1, 0}), R23) == 0);
  CHECK_THROWS_AS(inner(vec({1, 0}), vec({1, 0, 0}), R12), std::invalid_argument);
}

TEST_CASE("signature of subspaces") {
  CHECK(signature(SubspaceQ(R12, columns(vec({1, 0, 0})))) == Signature{1, 0, 0});
  CHECK(signature(SubspaceQ(R12, columns(vec({1, 1, 0}), vec({0, 0, 1})))) == Signature{0, 1, 1});
  CHECK(signature(SubspaceQ(R23, columns(unit(5, 0), unit(5, 1), unit(5, 2)))) == Signature{2, 1, 0});
  CHECK_THROWS_AS(signature(SubspaceQ(R12, columns(vec({1, 0, 0}), vec({2, 0, 0})))), std::invalid_argument);
}

TEST_CASE("signature with an all-zero diagonal needs the off-diagonal pivot") {
  // hyperbolic plane spanned by two null vectors
  SubspaceQ s(R23, columns(vec({1, 0, 1, 0, 0}), vec({1, 0, -1, 0, 0})));
  CHECK(signature(s) == Signature{1, 1, 0});
}

TEST_CASE("float and exact signatures agree") {
  SubspaceQ s(R12, columns(vec({1, 1, 0}), vec({0, 0, 1})));
  Subspace<double> d(R12, to_double(s.basis));
  CHECK(signature(d) == Signature{0, 1, 1});
}

TEST_CASE("signature is basis independent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<SubspaceQ> cases = {
      SubspaceQ(R23, columns(unit(5, 0), unit(5, 2), vec({1, 0, 0, 1, 0}))),
      SubspaceQ(R23, columns(vec({1, 0, 1, 0, 0}), vec({0, 1, 0, 1, 0}), unit(5, 4))),
      SubspaceQ(R12, columns(vec({1, 1, 0}), vec({0, 0, 1}))),
  };
  for (const auto& s : cases) {
    Signature base = signature(s);
    for (int trial = 0; trial < 20; ++trial) {
      MatQ c(s.dim(), s.dim());
      do {
        for (int i = 0; i < s.dim(); ++i)
          for (int j = 0; j < s.dim(); ++j) c(i, j) = dist(rng);
      } while (linalg::rank(c) < s.dim());
      CHECK(signature(SubspaceQ(s.space, MatQ(s.basis * c))) == base);
    }
  }
}

TEST_CASE("orthogonal complement") {
  auto c = orthogonal_complement(SubspaceQ(R23, columns(unit(5, 0))));
  CHECK(c.dim() == 4);
  CHECK(signature(c) == Signature{1, 3, 0});
  auto c2 = orthogonal_complement(SubspaceQ(R23, columns(unit(5, 3), unit(5, 4))));
  CHECK(signature(c2) == Signature{2, 1, 0});
  VecQ p = vec({1, 0, 0, 1, 0});
  auto pp = orthogonal_complement(SubspaceQ(R23, columns(p)));
  CHECK(pp.contains(p));
  for (int j = 0; j < pp.dim(); ++j) CHECK(inner(VecQ(pp.basis.col(j)), p, R23) == 0);
}

TEST_CASE("complement signatures add up to the ambient split") {
  SubspaceQ s(R23, columns(vec({1, 0, 0, 0, 2}), vec({0, 1, 2, 0, 0})));
  Signature a = signature(s), b = signature(orthogonal_complement(s));
  CHECK(a.r == 0);
  CHECK(a.p + b.p == 2);
  CHECK(a.q + b.q == 3);
}

TEST_CASE("causal character and isotropy") {
  CHECK(causal_character(vec({0, 0, 1}), R12) == Causal::spacelike);
  CHECK(causal_character(vec({1, 0, 0}), R12) == Causal::timelike);
  CHECK(causal_character(vec({1, 1, 0}), R12) == Causal::lightlike);
  CHECK_THROWS_AS(causal_character(vec({0, 0, 0}), R12), std::invalid_argument);
  CHECK(is_totally_isotropic(SubspaceQ(R23, columns(vec({1, 0, 1, 0, 0}), vec({0, 1, 0, 1, 0})))));
  CHECK_FALSE(is_totally_isotropic(SubspaceQ(R23, columns(unit(5, 2)))));
  CHECK(is_totally_isotropic(SubspaceQ(R23, columns(vec({1, 0, 1, 0, 0})))));
}

TEST_CASE("rational roots and square roots") {
  auto mul = [](const linalg::Poly& a, const linalg::Poly& b) {
    linalg::Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  // (x-1)^2 (x+1/2) (x^2+1)
  linalg::Poly p = mul(mul(mul({-1, 1}, {-1, 1}), {Rat(1, 2), 1}), {1, 0, 1});
  auto roots = linalg::rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(-1, 2));
  CHECK(roots[1] == 1);
  CHECK(linalg::rational_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK_FALSE(linalg::rational_sqrt(Rat(2)).has_value());
}

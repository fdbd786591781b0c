#include "einkit/orbits.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef EINKIT_HAVE_TBB
#include <tbb/parallel_for.h>
#endif

namespace einkit {

std::string to_string(OrbitCharacter c) {
  switch (c) {
    case OrbitCharacter::point: return "point";
    case OrbitCharacter::spacelike: return "spacelike";
    case OrbitCharacter::timelike: return "timelike";
    case OrbitCharacter::lightlike: return "lightlike";
    case OrbitCharacter::lorentzian: return "lorentzian";
    case OrbitCharacter::degenerate: return "degenerate";
    case OrbitCharacter::open: return "open";
  }
  return "?";
}

OrbitCharacter parse_character(const std::string& s) {
  for (auto c : {OrbitCharacter::point, OrbitCharacter::spacelike, OrbitCharacter::timelike, OrbitCharacter::lightlike,
                 OrbitCharacter::lorentzian, OrbitCharacter::degenerate, OrbitCharacter::open})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown orbit character: " + s);
}

OrbitCharacter character_of(const Signature& s) {
  switch (s.dim()) {
    case 0: return OrbitCharacter::point;
    case 1:
      if (s.r == 1) return OrbitCharacter::lightlike;
      return s.p == 1 ? OrbitCharacter::timelike : OrbitCharacter::spacelike;
    case 2:
      if (s.r >= 1) return OrbitCharacter::degenerate;
      if (s.p == 1 && s.q == 1) return OrbitCharacter::lorentzian;
      if (s.q == 2) return OrbitCharacter::spacelike;
      return OrbitCharacter::timelike;
    default: return OrbitCharacter::open;
  }
}

namespace {

// Rank and signature of span(vectors) modulo span(base) under the form g.
// base spans part of the radical of the form restricted to everything.
template <class T>
Signature quotient_signature(const Mat<T>& base, const Mat<T>& vecs, const Mat<T>& g) {
  if constexpr (!Num<T>::exact) {
    // base lies in the radical, so removing its Euclidean component leaves the form unchanged;
    // an orthonormal basis of what remains keeps the eigenvalue threshold meaningful
    const double eps = float_eps();
    Eigen::MatrixXd w = vecs;
    if (base.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(base);
      Eigen::MatrixXd qb = qr.householderQ() * Eigen::MatrixXd::Identity(base.rows(), base.cols());
      w -= qb * (qb.transpose() * w);
    }
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      double n0 = vecs.col(j).norm(), n1 = w.col(j).norm();
      if (n0 == 0 || n1 <= eps * n0)
        w.col(j).setZero();
      else
        w.col(j) /= n1;
    }
    Signature s;
    if (w.cols() == 0) return s;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(w, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > eps * std::max(1.0, sv(0))) ++r;
    if (r == 0) return s;
    Eigen::MatrixXd b = svd.matrixU().leftCols(r);
    return linalg::inertia(Mat<T>(b.transpose() * g * b));
  } else {
    Mat<T> all(vecs.rows(), base.cols() + vecs.cols());
    all << base, vecs;
    auto idx = linalg::independent_columns(all);
    Mat<T> sel(all.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sel.col(static_cast<Eigen::Index>(k)) = all.col(idx[k]);
    Signature s = linalg::inertia(Mat<T>(sel.transpose() * g * sel));
    s.r -= static_cast<int>(base.cols());
    return s;
  }
}

TangentReport make_report(const EinPoint& x, const Signature& s) {
  TangentReport r;
  r.point = x;
  r.signature = s;
  r.dim = s.dim();
  r.character = character_of(s);
  return r;
}

}  // namespace

TangentReport tangent_at(const std::vector<M5>& gens, const EinPoint& x, Backend b) {
  const V5& v = x.rep();
  MatQ vecs(5, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) vecs.col(static_cast<Eigen::Index>(i)) = gens[i] * v;
  MatQ base(5, 1);
  base.col(0) = v;
  Signature s = b == Backend::exact ? quotient_signature<Rat>(base, vecs, R23.gram<Rat>())
                                    : quotient_signature<double>(to_double(base), to_double(vecs), R23.gram<double>());
  return make_report(x, s);
}

TangentReport chart_tangent_at(const std::vector<ConfAlgElement>& gens, const V3& x, Backend b, const MinkowskiChart& c) {
  MatQ vecs(3, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) vecs.col(static_cast<Eigen::Index>(i)) = gens[i].field(x);
  MatQ base(3, 0);
  Signature s = b == Backend::exact ? quotient_signature<Rat>(base, vecs, R12.gram<Rat>())
                                    : quotient_signature<double>(to_double(base), to_double(vecs), R12.gram<double>());
  return make_report(chart_embed(c, x), s);
}

TangentReport ads_tangent_at(const std::vector<Sl2Pair>& gens, const M2& P, Backend b) {
  if (P.determinant() != 1) throw std::invalid_argument("ads_tangent_at: det must be 1");
  MatQ vecs(4, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    vecs.col(static_cast<Eigen::Index>(i)) = ads_coords(M2(gens[i].X * P - P * gens[i].Y));
  MatQ base(4, 0);
  QuadSpace r22{2, 2};
  Signature s = b == Backend::exact ? quotient_signature<Rat>(base, vecs, r22.gram<Rat>())
                                    : quotient_signature<double>(to_double(base), to_double(vecs), r22.gram<double>());
  return make_report(ads_point_embed(P), s);
}

bool in_region(const EinPoint& x, const std::string& region, const MinkowskiChart& c) {
  const V5& v = x.rep();
  if (region == "any") return true;
  Rat ip = inner<Rat>(v, c.p, R23);
  if (region == "patch") return ip != 0;
  if (region == "vertex") return x == EinPoint(c.p);
  if (region == "lightcone") return ip == 0 && !(x == EinPoint(c.p));
  if (region == "ads") return v(4) != 0;
  if (region == "boundary") return v(4) == 0;
  throw std::invalid_argument("unknown region: " + region);
}

std::vector<V3> random_chart_points(std::uint64_t seed, int count, int max_num, int max_den) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    // |value| <= max_num / max_den whatever the denominator
    long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    long top = max_num * den / max_den;
    long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * top + 1)) - top;
    return Rat(num) / Rat(den);
  };
  std::vector<V3> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rat a = draw(), b = draw(), c = draw();
    out.emplace_back(a, b, c);
  }
  return out;
}

std::vector<EinPoint> make_samples(const SampleConfig& cfg, const MinkowskiChart& c) {
  std::vector<EinPoint> out;
  if (cfg.grid_step > 0 && cfg.grid_radius >= 0) {
    for (Rat x = -cfg.grid_radius; x <= cfg.grid_radius; x += cfg.grid_step)
      for (Rat y = -cfg.grid_radius; y <= cfg.grid_radius; y += cfg.grid_step)
        for (Rat z = -cfg.grid_radius; z <= cfg.grid_radius; z += cfg.grid_step) out.push_back(chart_embed(c, V3(x, y, z)));
  }
  for (const auto& x : random_chart_points(cfg.rng_seed, cfg.random_count)) out.push_back(chart_embed(c, x));
  if (cfg.include_lightcone && cfg.lightcone_count > 0) {
    out.push_back(EinPoint(c.p));
    std::mt19937_64 rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    for (int i = 1; i < cfg.lightcone_count; ++i) {
      // Pythagorean null direction of R^{1,2}, then a point of L(p) over it
      long m = pick(0, 4), n = pick(0, 4);
      if (m == 0 && n == 0) m = 1;
      V3 f(Rat(m * m + n * n), Rat(m * m - n * n), Rat(2 * m * n));
      if (pick(0, 1)) f(1) = -f(1);
      if (pick(0, 1)) f(2) = -f(2);
      if (pick(0, 2) == 0) std::swap(f(1), f(2));
      Rat beta = Rat(pick(-6, 6)) / Rat(pick(1, 3));
      out.push_back(EinPoint(V5(c.lift(f) + beta * c.p)));
    }
  }
  if (cfg.include_sl2_grid) {
    for (Rat a : {Rat(-3), Rat(-2), Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1), Rat(2), Rat(3)})
      for (int b = -2; b <= 2; ++b)
        for (int cc = -2; cc <= 2; ++cc) {
          M2 P;
          P << a, b, cc, (1 + Rat(b) * Rat(cc)) / a;
          out.push_back(ads_point_embed(P));
        }
    for (int b : {-2, -1, 1, 2})
      for (int d = -2; d <= 2; ++d) {
        M2 P;
        P << 0, b, Rat(-1) / Rat(b), d;
        out.push_back(ads_point_embed(P));
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Claim::text() const {
  std::string q = quant == Quant::exists ? "exists" : quant == Quant::all ? "all" : "none";
  return q + " " + region + " " + std::to_string(dim) + " " + character;
}

Claim Claim::parse(const std::string& s) {
  std::istringstream in(s);
  std::string q, dim;
  Claim c;
  if (!(in >> q >> c.region >> dim >> c.character)) throw std::invalid_argument("bad claim: " + s);
  if (q == "exists")
    c.quant = Quant::exists;
  else if (q == "all")
    c.quant = Quant::all;
  else if (q == "none")
    c.quant = Quant::none;
  else
    throw std::invalid_argument("bad claim quantifier: " + s);
  c.dim = std::stoi(dim);
  if (c.character != "any") parse_character(c.character);
  in_region(EinPoint(default_chart().p), c.region);
  return c;
}

bool evaluate_claim(const Claim& claim, const std::vector<TangentReport>& pts) {
  int in = 0, hit = 0;
  for (const auto& t : pts) {
    if (!in_region(t.point, claim.region)) continue;
    ++in;
    if (t.dim == claim.dim && (claim.character == "any" || to_string(t.character) == claim.character)) ++hit;
  }
  switch (claim.quant) {
    case Claim::Quant::exists: return hit > 0;
    case Claim::Quant::all: return in > 0 && hit == in;
    case Claim::Quant::none: return hit == 0;
  }
  return false;
}

OrbitReport scan(const std::vector<M5>& gens, const std::vector<EinPoint>& samples, Backend b) {
  if (samples.empty()) throw std::invalid_argument("scan: empty sample set");
  OrbitReport rep;
  rep.sample_size = static_cast<int>(samples.size());
  rep.points.resize(samples.size());
#ifdef EINKIT_HAVE_TBB
  tbb::parallel_for(std::size_t{0}, samples.size(), [&](std::size_t i) { rep.points[i] = tangent_at(gens, samples[i], b); });
#else
  for (std::size_t i = 0; i < samples.size(); ++i) rep.points[i] = tangent_at(gens, samples[i], b);
#endif
  for (const auto& t : rep.points) {
    rep.max_dim = std::max(rep.max_dim, t.dim);
    rep.character_counts[std::to_string(t.dim) + ":" + to_string(t.character)]++;
    if (t.dim == 2) rep.cohomogeneity_one = true;
  }
  rep.fixed_point_rp4 = fixed_point_rp4(invariant_lines(gens));
  return rep;
}

OrbitReport scan(const std::vector<M5>& gens, const SampleConfig& cfg, Backend b) { return scan(gens, make_samples(cfg), b); }

namespace {

MatQ span_matrix(const std::vector<ConfAlgElement>& gens) {
  MatQ m(7, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = gens[i].flat();
  return m;
}

void require_subalgebra(const std::vector<ConfAlgElement>& gens) {
  if (!is_subalgebra(gens)) throw std::invalid_argument("generators do not span a subalgebra");
}

int component_rank(const std::vector<ConfAlgElement>& gens, int from, int count) {
  MatQ m = span_matrix(gens);
  if (m.cols() == 0) return 0;
  return linalg::rank(MatQ(m.middleRows(from, count)));
}

}  // namespace

bool is_subalgebra(const std::vector<ConfAlgElement>& gens) {
  MatQ m = span_matrix(gens);
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!linalg::in_span(m, VecQ(bracket_conf(a, b).flat()))) return false;
  return true;
}

SubspaceQ translation_part(const std::vector<ConfAlgElement>& gens) {
  require_subalgebra(gens);
  MatQ m = span_matrix(gens);
  MatQ trans(7, 3);
  trans.setZero();
  for (int i = 0; i < 3; ++i) trans(4 + i, i) = 1;
  MatQ both = linalg::intersect(linalg::column_basis(m), trans);
  return SubspaceQ(R12, MatQ(both.bottomRows(3)));
}

int proj_linear_dim(const std::vector<ConfAlgElement>& gens) {
  require_subalgebra(gens);
  return component_rank(gens, 0, 4);
}
int proj_linear_isometry_dim(const std::vector<ConfAlgElement>& gens) {
  require_subalgebra(gens);
  return component_rank(gens, 1, 3);
}
int proj_homothety_dim(const std::vector<ConfAlgElement>& gens) {
  require_subalgebra(gens);
  return component_rank(gens, 0, 1);
}

bool thm302_predicate(const std::vector<ConfAlgElement>& gens) {
  require_subalgebra(gens);
  int dim = linalg::rank(span_matrix(gens));
  return dim >= 2 && (proj_linear_isometry_dim(gens) > 0 || translation_part(gens).dim() <= 2);
}

namespace {

// matrix of gen restricted to the invariant subspace with basis B
MatQ restrict_to(const MatQ& B, const M5& gen) {
  MatQ img = gen * B;
  MatQ r(B.cols(), B.cols());
  for (Eigen::Index j = 0; j < B.cols(); ++j) r.col(j) = *linalg::solve(B, VecQ(img.col(j)));
  return r;
}

bool is_scalar(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if ((i == j && m(i, j) != m(0, 0)) || (i != j && m(i, j) != 0)) return false;
  return true;
}

// largest subspace of span(E) invariant under every generator
MatQ largest_invariant(MatQ E, const std::vector<M5>& gens) {
  while (E.cols() > 0) {
    MatQ F = E;
    for (const auto& g : gens) {
      // {v in F : g v in E}
      MatQ gE = g * F;
      MatQ sys(5, F.cols() + E.cols());
      sys << gE, -E;
      MatQ n = linalg::nullspace(sys);
      F = linalg::column_basis(MatQ(F * n.topRows(F.cols())));
      if (F.cols() == 0) break;
    }
    if (F.cols() == E.cols()) return E;
    E = F;
  }
  return E;
}

void split(const MatQ& B, const std::vector<M5>& gens, std::vector<SubspaceQ>& out, int depth) {
  std::vector<MatQ> rs;
  for (const auto& g : gens) rs.push_back(restrict_to(B, g));
  int pick = -1;
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (!is_scalar(rs[i])) {
      pick = static_cast<int>(i);
      break;
    }
  if (pick < 0) {
    out.emplace_back(R23, B);
    return;
  }
  // a fixed generic combination first, a single generator as fallback
  MatQ C = MatQ::Zero(B.cols(), B.cols());
  static const int coeffs[] = {3, -5, 7, 2, -11, 13, 4, -1};
  for (std::size_t i = 0; i < rs.size(); ++i) C += Rat(coeffs[i % 8]) * rs[i];
  if (depth > 0 || is_scalar(C)) C = rs[static_cast<std::size_t>(pick)];
  MatQ id = MatQ::Identity(B.cols(), B.cols());
  for (const auto& mu : linalg::rational_eigenvalues(C)) {
    MatQ E = B * linalg::nullspace(MatQ(C - mu * id));
    MatQ F = largest_invariant(E, gens);
    if (F.cols() == 0) continue;
    if (F.cols() == B.cols()) {
      // the combination was scalar here; split by the chosen generator
      split(F, gens, out, depth + 1);
      continue;
    }
    split(F, gens, out, depth + 1);
  }
}

// reduced echelon basis: deterministic representative of a subspace
MatQ canonical_basis(const MatQ& b) {
  MatQ t = b.transpose();
  auto piv = linalg::rref(t);
  return MatQ(t.topRows(static_cast<Eigen::Index>(piv.size())).transpose());
}

}  // namespace

std::vector<SubspaceQ> common_eigenspaces(const std::vector<M5>& gens) {
  std::vector<SubspaceQ> out;
  split(MatQ::Identity(5, 5), gens, out, 0);
  for (auto& s : out) s = SubspaceQ(R23, canonical_basis(s.basis));
  return out;
}

std::vector<InvariantLine> invariant_lines(const std::vector<M5>& gens) {
  std::vector<InvariantLine> out;
  for (const auto& w : common_eigenspaces(gens)) {
    for (int j = 0; j < w.dim(); ++j) {
      VecQ v = w.basis.col(j);
      out.push_back({SubspaceQ(R23, columns(v)), causal_character(v, R23), w.dim() > 1});
    }
    // a lightlike line inside a family is reported too
    if (w.dim() > 1)
      for (const auto& pc : null_pieces(w))
        if (pc.kind == FixedPiece::Kind::linear) {
          VecQ v = pc.space.basis.col(0);
          out.push_back({SubspaceQ(R23, columns(v)), Causal::lightlike, true});
        }
  }
  return out;
}

std::string fixed_point_rp4(const std::vector<InvariantLine>& lines) {
  bool l = false, t = false, s = false;
  for (const auto& x : lines) {
    l = l || x.character == Causal::lightlike;
    t = t || x.character == Causal::timelike;
    s = s || x.character == Causal::spacelike;
  }
  return l ? "lightlike" : t ? "timelike" : s ? "spacelike" : "none";
}

std::vector<SubspaceQ> invariant_planes(const std::vector<M5>& gens) {
  std::vector<SubspaceQ> found;
  auto add = [&](const MatQ& b) {
    SubspaceQ s(R23, canonical_basis(b));
    for (const auto& f : found)
      if (f.same_as(s)) return;
    found.push_back(s);
  };
  auto spin = [&](const VecQ& seed) {
    MatQ s(5, 1);
    s.col(0) = seed;
    for (Eigen::Index done = 0; done < s.cols(); ++done) {
      for (const auto& g : gens) {
        VecQ w = g * s.col(done);
        MatQ t(5, s.cols() + 1);
        t << s, w;
        if (linalg::rank(t) > s.cols()) s = t;
        if (s.cols() > 2) return;
      }
    }
    if (s.cols() == 2) add(s);
  };
  auto eig = common_eigenspaces(gens);
  std::vector<VecQ> lines;
  for (const auto& w : eig) {
    if (w.dim() == 2) add(w.basis);
    for (int j = 0; j < w.dim(); ++j) lines.push_back(w.basis.col(j));
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) add(columns(lines[i], lines[j]));
  VecQ v(5);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          for (int e = -2; e <= 2; ++e) {
            v << a, b, c, d, e;
            if (v.isZero()) continue;
            // one seed per projective class: first nonzero coordinate positive
            int first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d != 0 ? d : e;
            if (first < 0) continue;
            spin(v);
          }
  return found;
}

std::vector<SubspaceQ> fixed_point_subspaces(const std::vector<M5>& gens) {
  std::vector<SubspaceQ> out;
  for (const auto& w : common_eigenspaces(gens))
    for (const auto& pc : null_pieces(w))
      if (pc.kind == FixedPiece::Kind::linear) out.emplace_back(R23, canonical_basis(pc.space.basis));
  return out;
}

std::vector<EinPoint> fixed_points_in_ein(const std::vector<M5>& gens) {
  std::vector<EinPoint> out;
  for (const auto& s : fixed_point_subspaces(gens))
    for (int j = 0; j < s.dim(); ++j) out.push_back(EinPoint(V5(s.basis.col(j))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

V3 aff_irreducible_orbit(const V3& q, const Rat& tau, const Rat& s) {
  if (tau <= 0) throw std::invalid_argument("aff_irreducible_orbit: tau must be positive");
  const Rat &x = q(0), &y = q(1), &z = q(2);
  Rat t2 = tau * tau, t3 = t2 * tau, t4 = t3 * tau, t5 = t4 * tau, t6 = t5 * tau;
  return V3(x * t6 + 3 * y * t4 * s * s - 2 * z * t5 * s - 4 * t3 * s * s * s, y * t2 - 4 * tau * s,
            z * t4 - 3 * y * t3 * s + 6 * t2 * s * s);
}

Rat aff_form(const V3& a, const V3& b) { return -(a(0) * b(1) + a(1) * b(0)) / 4 + a(2) * b(2) / 6; }

TangentReport aff_irreducible_tangent(const V3& q) {
  MatQ vecs(3, 2);
  vecs.col(0) = V3(-2 * q(2), Rat(-4), -3 * q(1));
  vecs.col(1) = V3(6 * q(0), 2 * q(1), 4 * q(2));
  MatQ g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = aff_form(V3(V3::Unit(i)), V3(V3::Unit(j)));
  Signature s = quotient_signature<Rat>(MatQ(3, 0), vecs, g);
  TangentReport r;
  r.point = chart_embed(default_chart(), q);
  r.signature = s;
  r.dim = s.dim();
  r.character = character_of(s);
  return r;
}

M5 cayley(const M5& skew) {
  if (!is_so23(skew)) throw std::invalid_argument("cayley: matrix must be Q5-skew");
  M5 id = M5::Identity();
  auto inv = linalg::inverse(MatQ(id - skew));
  if (!inv) throw std::invalid_argument("cayley: I - S is singular");
  return M5(*inv) * (id + skew);
}

M5 random_isometry(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    M5 s = M5::Zero();
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        long c = static_cast<long>(rng() % 5) - 2;
        // Q5-skew generator of the (i,j) plane: Q_jj E_ij - Q_ii E_ji
        s(i, j) = Rat(c) * Q5()(j, j) / 2;
        s(j, i) = -Rat(c) * Q5()(i, i) / 2;
      }
    if (linalg::inverse(MatQ(M5(M5::Identity() - s)))) return cayley(s);
  }
}

}  // namespace einkit

#include "qmackey/hopf.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "qmackey/errors.hpp"

namespace qm {

void HopfData::finalize() {
  const int d = dim;
  prod.assign(static_cast<size_t>(d) * d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c)
        if (left[i](c, j) != cplx(0.0)) prod[static_cast<size_t>(i) * d + j].emplace_back(c, left[i](c, j));
  delta.assign(d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (comult[i](j, k) != cplx(0.0)) delta[i].push_back({j, k, comult[i](j, k)});
}

namespace {

std::vector<std::pair<int, cplx>> nonzeros(const Vec& a) {
  std::vector<std::pair<int, cplx>> nz;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != cplx(0.0)) nz.emplace_back(static_cast<int>(i), a(i));
  return nz;
}

}  // namespace

Vec HopfData::mul(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(dim);
  auto na = nonzeros(a), nb = nonzeros(b);
  for (auto& [i, x] : na)
    for (auto& [j, y] : nb)
      for (auto& [c, v] : prod[static_cast<size_t>(i) * dim + j]) out(c) += x * y * v;
  return out;
}

Mat HopfData::Delta(const Vec& a) const {
  Mat out = Mat::Zero(dim, dim);
  for (auto& [i, x] : nonzeros(a))
    for (const auto& t : delta[i]) out(t.a, t.b) += x * t.v;
  return out;
}

Mat HopfData::mul2(const Mat& x, const Mat& y) const {
  struct E {
    int a, b;
    cplx v;
  };
  std::vector<E> nx, ny;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (x(a, b) != cplx(0.0)) nx.push_back({a, b, x(a, b)});
      if (y(a, b) != cplx(0.0)) ny.push_back({a, b, y(a, b)});
    }
  Mat out = Mat::Zero(dim, dim);
  for (const auto& p : nx)
    for (const auto& q : ny) {
      const auto& l = prod[static_cast<size_t>(p.a) * dim + q.a];
      const auto& r = prod[static_cast<size_t>(p.b) * dim + q.b];
      if (l.empty() || r.empty()) continue;
      cplx pv = p.v * q.v;
      for (auto& [e, u] : l)
        for (auto& [f, w] : r) out(e, f) += pv * u * w;
    }
  return out;
}

HopfPtr function_algebra(const FiniteGroup& g) {
  auto h = std::make_shared<HopfData>();
  const int n = g.order;
  h->dim = n;
  h->left.assign(n, Mat::Zero(n, n));
  h->comult.assign(n, Mat::Zero(n, n));
  for (int x = 0; x < n; ++x) h->left[x](x, x) = 1.0;
  h->unit = Vec::Ones(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h->comult[g.mul(a, b)](a, b) = 1.0;
  h->counit = Vec::Unit(n, g.identity);
  h->antipode = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) h->antipode(g.inv[x], x) = 1.0;
  h->star = Mat::Identity(n, n);
  h->haar = Vec::Constant(n, cplx(1.0 / n, 0.0));
  h->has_haar = true;
  h->finalize();
  return h;
}

HopfPtr group_algebra(const FiniteGroup& g) {
  auto h = std::make_shared<HopfData>();
  const int n = g.order;
  h->dim = n;
  h->left.assign(n, Mat::Zero(n, n));
  h->comult.assign(n, Mat::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h->left[a](g.mul(a, b), b) = 1.0;
  h->unit = Vec::Unit(n, g.identity);
  for (int x = 0; x < n; ++x) h->comult[x](x, x) = 1.0;
  h->counit = Vec::Ones(n);
  h->antipode = Mat::Zero(n, n);
  h->star = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    h->antipode(g.inv[x], x) = 1.0;
    h->star(g.inv[x], x) = 1.0;
  }
  h->haar = Vec::Unit(n, g.identity);
  h->has_haar = true;
  h->finalize();
  return h;
}

double AxiomReport::worst() const {
  double w = 0.0;
  for (auto& [n, r] : residuals) w = std::max(w, r);
  return w;
}

AxiomReport verify_axioms(const HopfData& h) {
  const int d = h.dim;
  AxiomReport rep;
  auto add = [&](const char* name, double r) { rep.residuals.emplace_back(name, r); };

  double assoc = 0.0, unit = 0.0;
  for (int i = 0; i < d; ++i) {
    unit = std::max(unit, (h.mul(h.basis(i), h.unit) - h.basis(i)).cwiseAbs().maxCoeff());
    unit = std::max(unit, (h.mul(h.unit, h.basis(i)) - h.basis(i)).cwiseAbs().maxCoeff());
    for (int j = 0; j < d; ++j) {
      Vec ij = h.left[i].col(j);
      for (int k = 0; k < d; ++k) {
        Vec l = h.mul(ij, h.basis(k));
        Vec r = h.mul(h.basis(i), h.left[j].col(k));
        assoc = std::max(assoc, (l - r).cwiseAbs().maxCoeff());
      }
    }
  }
  add("associativity", assoc);
  add("unit", unit);

  double coassoc = 0.0;
  std::vector<cplx> t1(static_cast<size_t>(d) * d * d), t2(t1.size());
  for (int i = 0; i < d; ++i) {
    std::fill(t1.begin(), t1.end(), cplx(0.0));
    std::fill(t2.begin(), t2.end(), cplx(0.0));
    for (const auto& t : h.delta[i]) {
      for (const auto& s : h.delta[t.a]) t1[(static_cast<size_t>(s.a) * d + s.b) * d + t.b] += t.v * s.v;
      for (const auto& s : h.delta[t.b]) t2[(static_cast<size_t>(t.a) * d + s.a) * d + s.b] += t.v * s.v;
    }
    for (size_t x = 0; x < t1.size(); ++x) coassoc = std::max(coassoc, std::abs(t1[x] - t2[x]));
  }
  add("coassociativity", coassoc);

  double counit = std::abs(h.eps(h.unit) - 1.0);
  for (int i = 0; i < d; ++i) {
    Vec l = h.comult[i].transpose() * h.counit;
    Vec r = h.comult[i] * h.counit;
    counit = std::max(counit, (l - h.basis(i)).cwiseAbs().maxCoeff());
    counit = std::max(counit, (r - h.basis(i)).cwiseAbs().maxCoeff());
    for (int j = 0; j < d; ++j)
      counit = std::max(counit, std::abs(h.eps(h.left[i].col(j)) - h.counit(i) * h.counit(j)));
  }
  add("counit", counit);

  double dmult = max_abs(h.Delta(h.unit) - h.unit * h.unit.transpose());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      dmult = std::max(dmult, max_abs(h.Delta(h.left[i].col(j)) - h.mul2(h.comult[i], h.comult[j])));
  add("comultiplication_multiplicative", dmult);

  double anti = 0.0;
  for (int i = 0; i < d; ++i) {
    Vec l = Vec::Zero(d), r = Vec::Zero(d);
    for (const auto& t : h.delta[i]) {
      l += t.v * h.mul(h.S(h.basis(t.a)), h.basis(t.b));
      r += t.v * h.mul(h.basis(t.a), h.S(h.basis(t.b)));
    }
    anti = std::max(anti, (l - h.counit(i) * h.unit).cwiseAbs().maxCoeff());
    anti = std::max(anti, (r - h.counit(i) * h.unit).cwiseAbs().maxCoeff());
  }
  add("antipode", anti);

  double st = max_abs(h.star * h.star.conjugate() - Mat::Identity(d, d));
  st = std::max(st, (h.adj(h.unit) - h.unit).cwiseAbs().maxCoeff());
  for (int i = 0; i < d; ++i) {
    Vec ai = h.adj(h.basis(i));
    st = std::max(st, max_abs(h.Delta(ai) - h.star * h.comult[i].conjugate() * h.star.transpose()));
    for (int j = 0; j < d; ++j)
      st = std::max(st, (h.adj(h.left[i].col(j)) - h.mul(h.adj(h.basis(j)), ai)).cwiseAbs().maxCoeff());
  }
  add("star", st);

  if (h.has_haar) {
    double inv = std::abs(h.h(h.unit) - 1.0);
    for (int i = 0; i < d; ++i) {
      Vec l = h.comult[i].transpose() * h.haar;
      Vec r = h.comult[i] * h.haar;
      inv = std::max(inv, (l - h.haar(i) * h.unit).cwiseAbs().maxCoeff());
      inv = std::max(inv, (r - h.haar(i) * h.unit).cwiseAbs().maxCoeff());
    }
    add("haar_invariance", inv);
    Mat gram(d, d);
    for (int i = 0; i < d; ++i) {
      Vec ai = h.adj(h.basis(i));
      for (int j = 0; j < d; ++j) gram(i, j) = h.h(h.mul(ai, h.basis(j)));
    }
    double pos = max_abs(gram - gram.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es((gram + gram.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
    pos = std::max(pos, std::max(0.0, -es.eigenvalues()(0)));
    add("haar_positivity", pos);
  }
  rep.ok = rep.worst() < tol().verify;
  return rep;
}

Vec haar_solve(const HopfData& h) {
  const int d = h.dim;
  Mat sys(2 * d * d, d);
  for (int i = 0; i < d; ++i) {
    Mat et = Mat::Zero(1, d);
    et(0, i) = 1.0;
    sys.block(2 * i * d, 0, d, d) = h.comult[i].transpose() - h.unit * et;
    sys.block(2 * i * d + d, 0, d, d) = h.comult[i] - h.unit * et;
  }
  Mat ns = nullspace(sys);
  if (ns.cols() != 1)
    throw Error(ErrorKind::NoUniqueHaar, "invariant functionals form a space of dimension " + std::to_string(ns.cols()));
  Vec v = ns.col(0);
  cplx norm = (h.unit.transpose() * v)(0);
  if (std::abs(norm) < tol().accept) throw Error(ErrorKind::NoUniqueHaar, "invariant functional vanishes on the unit");
  return v / norm;
}

bool is_kac(const HopfData& h) {
  return max_abs(h.antipode * h.antipode - Mat::Identity(h.dim, h.dim)) < tol().verify;
}

double qaut_residual(const HopfData& h, const Mat& a) {
  const int d = h.dim;
  double res = (a * h.unit - h.unit).cwiseAbs().maxCoeff();
  for (int i = 0; i < d; ++i) {
    Vec ai = a.col(i);
    res = std::max(res, (a * h.adj(h.basis(i)) - h.adj(ai)).cwiseAbs().maxCoeff());
    res = std::max(res, max_abs(h.Delta(ai) - a * h.comult[i] * a.transpose()));
    for (int j = 0; j < d; ++j) res = std::max(res, (a * h.left[i].col(j) - h.mul(ai, a.col(j))).cwiseAbs().maxCoeff());
  }
  Eigen::FullPivLU<Mat> lu(a);
  if (lu.rank() < d) res = std::max(res, 1.0);
  return res;
}

std::vector<Mat> action_function_algebra(const HopfData& h, const FiniteGroup& base, const FiniteGroup& lambda,
                                         const std::vector<std::vector<int>>& autos) {
  if (static_cast<int>(autos.size()) != lambda.order)
    throw Error(ErrorKind::ValidationError, "need one automorphism per element of the acting group");
  std::vector<Mat> mats;
  for (int r = 0; r < lambda.order; ++r) {
    if (!is_automorphism(base, autos[r]))
      throw Error(ErrorKind::NotAutomorphism, "action of element " + std::to_string(r) + " is not an automorphism");
    Mat m = Mat::Zero(base.order, base.order);
    for (int x = 0; x < base.order; ++x) m(x, autos[r][x]) = 1.0;
    mats.push_back(m);
  }
  return action_raw(h, lambda, std::move(mats));
}

std::vector<Mat> action_group_algebra(const HopfData& h, const FiniteGroup& base, const FiniteGroup& lambda,
                                      const std::vector<std::vector<int>>& autos) {
  if (static_cast<int>(autos.size()) != lambda.order)
    throw Error(ErrorKind::ValidationError, "need one automorphism per element of the acting group");
  for (int r = 0; r < lambda.order; ++r)
    if (!is_automorphism(base, autos[r]))
      throw Error(ErrorKind::NotAutomorphism, "action of element " + std::to_string(r) + " is not an automorphism");
  std::vector<Mat> mats;
  for (int r = 0; r < lambda.order; ++r) {
    const auto& beta = autos[lambda.inv[r]];
    Mat m = Mat::Zero(base.order, base.order);
    for (int x = 0; x < base.order; ++x) m(beta[x], x) = 1.0;
    mats.push_back(m);
  }
  return action_raw(h, lambda, std::move(mats));
}

std::vector<Mat> action_raw(const HopfData& h, const FiniteGroup& lambda, std::vector<Mat> mats) {
  if (static_cast<int>(mats.size()) != lambda.order)
    throw Error(ErrorKind::ValidationError, "need one matrix per element of the acting group");
  for (int r = 0; r < lambda.order; ++r) {
    if (mats[r].rows() != h.dim || mats[r].cols() != h.dim)
      throw Error(ErrorKind::NotAutomorphism, "matrix for element " + std::to_string(r) + " has wrong size");
    double res = qaut_residual(h, mats[r]);
    if (res > tol().verify)
      throw Error(ErrorKind::NotAutomorphism,
                  "element " + std::to_string(r) + " does not act by a quantum automorphism (residual " +
                      std::to_string(res) + ")");
  }
  if (max_abs(mats[lambda.identity] - Mat::Identity(h.dim, h.dim)) > tol().verify)
    throw Error(ErrorKind::NotAntihomomorphism, "identity does not act trivially");
  for (int r = 0; r < lambda.order; ++r)
    for (int s = 0; s < lambda.order; ++s)
      if (max_abs(mats[lambda.mul(r, s)] - mats[s] * mats[r]) > tol().verify)
        throw Error(ErrorKind::NotAntihomomorphism,
                    "alpha*_{rs} != alpha*_s alpha*_r at r=" + std::to_string(r) + " s=" + std::to_string(s));
  return mats;
}

DualAlgebra dual_algebra(const HopfData& h) {
  DualAlgebra a;
  a.dim = h.dim;
  a.left.assign(h.dim, Mat::Zero(h.dim, h.dim));
  for (int k = 0; k < h.dim; ++k)
    for (const auto& t : h.delta[k]) a.left[t.a](k, t.b) += t.v;
  a.unit = h.counit;
  return a;
}

DualBlocks dual_blocks(const HopfData& h, std::uint64_t seed) {
  const int d = h.dim;
  DualAlgebra a = dual_algebra(h);
  auto left_of = [&](const Vec& z) {
    Mat l = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j)
      if (z(j) != cplx(0.0)) l += z(j) * a.left[j];
    return l;
  };
  // center: z phi_i = phi_i z for all i
  Mat sys(d * d, d);
  for (int i = 0; i < d; ++i) {
    Mat right(d, d);  // z -> z phi_i
    for (int j = 0; j < d; ++j) right.col(j) = a.left[j].col(i);
    sys.block(i * d, 0, d, d) = right - a.left[i];
  }
  Mat center = nullspace(sys);
  const int c = static_cast<int>(center.cols());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec coef(c);
    for (int i = 0; i < c; ++i) coef(i) = cplx(nd(rng), nd(rng));
    Vec z = center * coef;
    Mat m = center.adjoint() * left_of(z) * center;
    Eigen::ComplexEigenSolver<Mat> es(m);
    const auto& ev = es.eigenvalues();
    double gap = 1e300, scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
    if (c > 1 && gap < 1e-6 * scale) continue;
    DualBlocks out;
    std::vector<std::tuple<std::vector<long long>, int, Vec, Vec>> blocks;
    int total = 0;
    for (int i = 0; i < c; ++i) {
      Vec f = center * es.eigenvectors().col(i);
      Vec ff = left_of(f) * f;
      cplx kappa = f.dot(ff) / f.squaredNorm();
      Vec e = f / kappa;
      Mat le = left_of(e);
      int d2 = static_cast<int>(round_int(le.trace(), "dual block dimension"));
      int di = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
      if (di * di != d2) throw Error(ErrorKind::PeterWeylMismatch, "dual block of non-square dimension");
      total += d2;
      Vec chi(d);
      for (int k = 0; k < d; ++k) chi(k) = (a.left[k].cwiseProduct(le.transpose())).sum() / static_cast<double>(di);
      auto key = rounded_key(chi);
      key.insert(key.begin(), di);
      blocks.emplace_back(key, di, e, chi);
    }
    if (total != d) throw Error(ErrorKind::PeterWeylMismatch, "dual block dimensions do not sum to the algebra dimension");
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
    for (auto& b : blocks) {
      out.dims.push_back(std::get<1>(b));
      out.idempotents.push_back(std::get<2>(b));
      out.characters.push_back(std::get<3>(b));
    }
    return out;
  }
  throw Error(ErrorKind::ValidationError, "could not separate the central idempotents of the dual algebra");
}

std::vector<std::vector<std::vector<int>>> dual_fusion(const HopfData& h, const DualBlocks& b) {
  const size_t n = b.dims.size();
  std::vector<std::vector<std::vector<int>>> nn(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      Vec prod = h.mul(b.characters[j], b.characters[k]);
      for (size_t i = 0; i < n; ++i) {
        cplx v = (b.idempotents[i].transpose() * prod)(0) / static_cast<double>(b.dims[i]);
        nn[i][j][k] = static_cast<int>(round_int(v, "dual fusion coefficient"));
      }
    }
  return nn;
}

}  // namespace qm

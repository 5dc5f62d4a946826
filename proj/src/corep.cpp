#include "qmackey/corep.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>

#include "qmackey/errors.hpp"

namespace qm {

Vec Corep::entry(int i, int j) const {
  Vec v(parent->dim);
  for (int k = 0; k < parent->dim; ++k) v(k) = coef[k](i, j);
  return v;
}

Corep trivial_corep(HopfPtr h) {
  Corep u{h, 1, {}};
  for (int k = 0; k < h->dim; ++k) u.coef.push_back(Mat::Constant(1, 1, h->unit(k)));
  return u;
}

Corep corep_from_entries(HopfPtr h, const std::vector<std::vector<Vec>>& entries) {
  const int n = static_cast<int>(entries.size());
  Corep u{h, n, std::vector<Mat>(h->dim, Mat::Zero(n, n))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < h->dim; ++k) u.coef[k](i, j) = entries[i][j](k);
  return u;
}

bool CorepReport::ok() const {
  return comodule < tol().verify && counit < tol().verify && unitarity < tol().verify;
}

CorepReport verify_corep(const Corep& u) {
  const auto& h = *u.parent;
  const int d = h.dim, n = u.dim;
  CorepReport rep;
  std::vector<Mat> lhs(static_cast<size_t>(d) * d, Mat::Zero(n, n));
  for (int c = 0; c < d; ++c)
    if (!u.coef[c].isZero(0.0))
      for (const auto& t : h.delta[c]) lhs[static_cast<size_t>(t.a) * d + t.b] += t.v * u.coef[c];
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      rep.comodule = std::max(rep.comodule, max_abs(lhs[static_cast<size_t>(a) * d + b] - u.coef[a] * u.coef[b]));
  Mat e = Mat::Zero(n, n);
  for (int c = 0; c < d; ++c) e += h.counit(c) * u.coef[c];
  rep.counit = max_abs(e - Mat::Identity(n, n));
  Corep us = adjoint(u);
  Corep p1 = matmul(u, us), p2 = matmul(us, u);
  for (int c = 0; c < d; ++c) {
    Mat id = h.unit(c) * Mat::Identity(n, n);
    rep.unitarity = std::max(rep.unitarity, std::max(max_abs(p1.coef[c] - id), max_abs(p2.coef[c] - id)));
  }
  return rep;
}

namespace {

template <class Op>
Corep bilinear(const Corep& u, const Corep& w, int outdim, Op op) {
  const auto& h = *u.parent;
  const int d = h.dim;
  Corep out{u.parent, outdim, std::vector<Mat>(d, Mat::Zero(outdim, outdim))};
  std::vector<int> nu, nw;
  for (int a = 0; a < d; ++a) {
    if (!u.coef[a].isZero(0.0)) nu.push_back(a);
    if (!w.coef[a].isZero(0.0)) nw.push_back(a);
  }
  for (int a : nu)
    for (int b : nw) {
      const auto& p = h.prod[static_cast<size_t>(a) * d + b];
      if (p.empty()) continue;
      Mat m = op(u.coef[a], w.coef[b]);
      for (auto& [c, v] : p) out.coef[c] += v * m;
    }
  return out;
}

}  // namespace

Corep tensor(const Corep& u, const Corep& w) {
  return bilinear(u, w, u.dim * w.dim, [](const Mat& a, const Mat& b) { return kron(a, b); });
}

Corep matmul(const Corep& u, const Corep& w) {
  return bilinear(u, w, u.dim, [](const Mat& a, const Mat& b) { return Mat(a * b); });
}

Corep direct_sum(const Corep& u, const Corep& w) {
  const int n = u.dim + w.dim;
  Corep out{u.parent, n, {}};
  for (int k = 0; k < u.parent->dim; ++k) {
    Mat m = Mat::Zero(n, n);
    m.topLeftCorner(u.dim, u.dim) = u.coef[k];
    m.bottomRightCorner(w.dim, w.dim) = w.coef[k];
    out.coef.push_back(m);
  }
  return out;
}

Corep adjoint(const Corep& u) {
  const auto& h = *u.parent;
  Corep out{u.parent, u.dim, std::vector<Mat>(h.dim, Mat::Zero(u.dim, u.dim))};
  for (int b = 0; b < h.dim; ++b) {
    if (u.coef[b].isZero(0.0)) continue;
    Mat ad = u.coef[b].adjoint();
    for (int c = 0; c < h.dim; ++c)
      if (h.star(c, b) != cplx(0.0)) out.coef[c] += h.star(c, b) * ad;
  }
  return out;
}

Corep conjugate_by(const Corep& u, const Mat& t) {
  Corep out{u.parent, static_cast<int>(t.rows()), {}};
  for (const auto& c : u.coef) out.coef.push_back(t * c * t.adjoint());
  return out;
}

Vec character(const Corep& u) {
  Vec chi(u.parent->dim);
  for (int k = 0; k < u.parent->dim; ++k) chi(k) = u.coef[k].trace();
  return chi;
}

int mor_dim_haar(const Corep& u, const Corep& w) {
  const auto& h = *u.parent;
  cplx v = h.h(h.mul(h.adj(character(u)), character(w)));
  return static_cast<int>(round_int(v, "Haar character inner product"));
}

std::vector<Mat> intertwiner_basis(const Corep& u, const Corep& w) { return solve_intertwiners(u.coef, w.coef); }

int mor_dim(const Corep& u, const Corep& w) {
  int a = mor_dim_haar(u, w);
  int b = static_cast<int>(intertwiner_basis(u, w).size());
  if (a != b)
    throw Error(ErrorKind::OracleDisagreement, "intertwiner dimension: Haar route gives " + std::to_string(a) +
                                                   ", nullspace route gives " + std::to_string(b));
  return a;
}

namespace {

Corep contragredient_raw(const Corep& u) {
  const auto& h = *u.parent;
  Corep out{u.parent, u.dim, std::vector<Mat>(h.dim, Mat::Zero(u.dim, u.dim))};
  for (int b = 0; b < h.dim; ++b) {
    if (u.coef[b].isZero(0.0)) continue;
    Mat tr = u.coef[b].transpose();
    for (int c = 0; c < h.dim; ++c)
      if (h.antipode(c, b) != cplx(0.0)) out.coef[c] += h.antipode(c, b) * tr;
  }
  return out;
}

Mat herm_power(const Mat& p, double e) {
  Eigen::SelfAdjointEigenSolver<Mat> es((p + p.adjoint()) * 0.5);
  Vec d = es.eigenvalues().cast<cplx>();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::pow(d(i).real(), e);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Conjugate conjugate(const Corep& u) {
  Corep uc = contragredient_raw(u);
  Corep ucc = contragredient_raw(uc);
  auto basis = intertwiner_basis(u, ucc);
  Mat rho;
  const int n = u.dim;
  if (basis.size() == 1) {
    cplx t = basis[0].trace();
    if (std::abs(t) < tol().accept) throw Error(ErrorKind::NoPositiveIntertwiner, "intertwiner has zero trace");
    Mat p = basis[0] * (std::abs(t) / t);
    p = (p + p.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Mat> es(p, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) <= tol().accept)
      throw Error(ErrorKind::NoPositiveIntertwiner, "intertwiner in Mor(u,u^cc) is not positive");
    double lam = std::sqrt(p.inverse().trace().real() / p.trace().real());
    rho = lam * p;
  } else if (is_kac(*u.parent)) {
    rho = Mat::Identity(n, n);
  } else {
    throw Error(ErrorKind::NoPositiveIntertwiner, "reducible corep of a non-Kac algebra");
  }
  Mat jr = rho.transpose();
  Mat half = herm_power(jr, 0.5), mhalf = herm_power(jr, -0.5);
  Conjugate out{uc, rho};
  for (auto& c : out.ubar.coef) c = half * c * mhalf;
  if (verify_corep(out.ubar).unitarity > tol().verify)
    throw Error(ErrorKind::NoPositiveIntertwiner, "conjugate corep is not unitary");
  return out;
}

std::vector<IrrFactor> irr_decompose(const Corep& u, std::uint64_t seed) {
  FamilySplit fs = split_family(u.coef, seed);
  std::vector<IrrFactor> out(fs.nclasses);
  for (size_t i = 0; i < fs.pieces.size(); ++i) {
    auto& f = out[fs.cls[i]];
    if (f.multiplicity == 0) {
      f.irrep = Corep{u.parent, static_cast<int>(fs.pieces[i].cols()), compress(u.coef, fs.pieces[i])};
    }
    ++f.multiplicity;
    f.isometries.push_back(fs.pieces[i]);
  }
  return out;
}

Corep regular_corep(HopfPtr hp) {
  const auto& h = *hp;
  const int d = h.dim;
  Mat gram(d, d);
  for (int i = 0; i < d; ++i) {
    Vec ai = h.adj(h.basis(i));
    for (int j = 0; j < d; ++j) gram(i, j) = h.h(h.mul(ai, h.basis(j)));
  }
  gram = (gram + gram.adjoint()) * 0.5;
  Eigen::LLT<Mat> llt(gram);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::ValidationError, "Haar inner product is not definite");
  Mat lmat = llt.matrixL();
  Mat b = lmat.adjoint().inverse();
  Mat binv = b.inverse();
  Corep u{hp, d, std::vector<Mat>(d, Mat::Zero(d, d))};
  for (int j = 0; j < d; ++j) {
    Mat dj = h.Delta(b.col(j));
    Mat c = binv * dj;  // c(i,k): coefficient of b_i (x) e_k
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) u.coef[k](i, j) = c(i, k);
  }
  return u;
}

std::vector<Corep> irr_enumerate(HopfPtr h, std::uint64_t seed) {
  Corep reg = regular_corep(h);
  auto factors = irr_decompose(reg, seed);
  std::vector<std::pair<std::vector<long long>, Corep>> keyed;
  int total = 0;
  for (auto& f : factors) {
    if (f.multiplicity != f.irrep.dim)
      throw Error(ErrorKind::PeterWeylMismatch, "irreducible multiplicity differs from its dimension");
    total += f.irrep.dim * f.irrep.dim;
    auto key = rounded_key(character(f.irrep));
    key.insert(key.begin(), f.irrep.dim);
    keyed.emplace_back(key, f.irrep);
  }
  if (total != h->dim) throw Error(ErrorKind::PeterWeylMismatch, "sum of squared dimensions differs from dim A");
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Corep> out;
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

Corep act(const Corep& u, const Mat& alpha_inv) {
  const int d = u.parent->dim;
  Corep out{u.parent, u.dim, std::vector<Mat>(d, Mat::Zero(u.dim, u.dim))};
  for (int b = 0; b < d; ++b) {
    if (u.coef[b].isZero(0.0)) continue;
    for (int c = 0; c < d; ++c)
      if (alpha_inv(c, b) != cplx(0.0)) out.coef[c] += alpha_inv(c, b) * u.coef[b];
  }
  return out;
}

int find_equivalent(const Corep& u, const std::vector<Corep>& reps) {
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i].dim == u.dim && mor_dim_haar(reps[i], u) == 1) return static_cast<int>(i);
  return -1;
}

GroupAction irr_action(GroupPtr lambda, const std::vector<Mat>& alpha_star, const std::vector<Corep>& reps) {
  GroupAction act_{lambda, static_cast<int>(reps.size()), {}};
  for (int r = 0; r < lambda->order; ++r) {
    std::vector<int> p;
    for (size_t x = 0; x < reps.size(); ++x) {
      Corep ru = act(reps[x], alpha_star[lambda->inv[r]]);
      int found = -1;
      for (size_t y = 0; y < reps.size(); ++y) {
        if (reps[y].dim != ru.dim) continue;
        if (mor_dim(ru, reps[y]) == 1) {
          if (found >= 0) throw Error(ErrorKind::OrbitResolutionFailure, "translate matches two representatives");
          found = static_cast<int>(y);
        }
      }
      if (found < 0) throw Error(ErrorKind::OrbitResolutionFailure, "translate matches no representative");
      p.push_back(found);
    }
    act_.perm.push_back(p);
  }
  act_.validate();
  return act_;
}

}  // namespace qm

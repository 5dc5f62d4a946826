#include "qmackey/projective_rep.hpp"

#include <algorithm>
#include <numeric>

#include "qmackey/errors.hpp"

namespace qm {

std::vector<Mat> ProjectiveRep::family() const {
  std::vector<Mat> out;
  for (int r : dom.elems) out.push_back(mats[r]);
  return out;
}

Cochain2 cocycle_of(GroupPtr g, const Subgroup& dom, const std::vector<Mat>& mats) {
  Cochain2 w = trivial_cochain2(g, dom);
  for (int r : dom.elems)
    for (int s : dom.elems) {
      const Mat& vrs = mats[g->mul(r, s)];
      Mat prod = mats[r] * mats[s];
      cplx om = (vrs.adjoint() * prod).trace() / static_cast<double>(vrs.rows());
      om /= std::abs(om);
      double res = max_abs(prod - om * vrs);
      if (!(res <= tol().accept))
        throw Error(ErrorKind::NotProjective,
                    "V(r)V(s) is not a scalar multiple of V(rs) at r=" + std::to_string(r) + " s=" + std::to_string(s));
      w.at(r, s) = om;
    }
  return w;
}

double projrep_residual(const ProjectiveRep& v) {
  const auto& g = *v.group;
  double res = max_abs(v(g.identity) - Mat::Identity(v.dim, v.dim));
  for (int r : v.dom.elems) {
    res = std::max(res, max_abs(v(r) * v(r).adjoint() - Mat::Identity(v.dim, v.dim)));
    for (int s : v.dom.elems) res = std::max(res, max_abs(v(r) * v(s) - v.cocycle(r, s) * v(g.mul(r, s))));
  }
  return res;
}

ProjectiveRep make_projrep(GroupPtr g, const Subgroup& dom, std::vector<Mat> mats) {
  ProjectiveRep v;
  v.group = g;
  v.dom = dom;
  mats.resize(g->order);
  v.dim = static_cast<int>(mats[g->identity].rows());
  for (int r : dom.elems)
    if (mats[r].rows() != v.dim || mats[r].cols() != v.dim)
      throw Error(ErrorKind::ValidationError, "projective representation matrices have inconsistent size");
  if (max_abs(mats[g->identity] - Mat::Identity(v.dim, v.dim)) > tol().verify)
    throw Error(ErrorKind::ValidationError, "V(e) is not the identity");
  for (int r : dom.elems)
    if (max_abs(mats[r] * mats[r].adjoint() - Mat::Identity(v.dim, v.dim)) > tol().verify)
      throw Error(ErrorKind::ValidationError, "V(" + std::to_string(r) + ") is not unitary");
  for (int r = 0; r < g->order; ++r)
    if (!dom.contains(r)) mats[r] = Mat();
  v.mats = std::move(mats);
  v.cocycle = cocycle_of(g, dom, v.mats);
  return v;
}

ProjectiveRep trivial_projrep(GroupPtr g, const Subgroup& dom, int dim) {
  std::vector<Mat> mats(g->order);
  for (int r : dom.elems) mats[r] = Mat::Identity(dim, dim);
  return make_projrep(g, dom, std::move(mats));
}

ProjectiveRep rescale(const Cochain1& b, const ProjectiveRep& v) {
  ProjectiveRep out = v;
  for (int r : v.dom.elems) out.mats[r] = b(r) * v.mats[r];
  out.cocycle = product(coboundary(b), v.cocycle);
  return out;
}

ProjChar proj_character(const ProjectiveRep& v) {
  ProjChar c(v.group->order, cplx(0.0, 0.0));
  for (int r : v.dom.elems) c[r] = v(r).trace();
  return c;
}

int proj_mor_dim(const ProjectiveRep& v1, const ProjectiveRep& v2) {
  if (!(v1.dom == v2.dom)) throw Error(ErrorKind::ValidationError, "projective representations on different groups");
  if (distance(v1.cocycle, v2.cocycle) > tol().accept)
    throw Error(ErrorKind::CocycleMismatch, "proj_mor_dim needs equal cocycles");
  auto c1 = proj_character(v1), c2 = proj_character(v2);
  cplx ip = 0.0;
  for (int r : v1.dom.elems) ip += std::conj(c1[r]) * c2[r];
  ip /= static_cast<double>(v1.dom.order());
  long long by_char = round_int(ip, "projective character inner product");
  long long by_null = static_cast<long long>(solve_intertwiners(v1.family(), v2.family()).size());
  if (by_char != by_null)
    throw Error(ErrorKind::OracleDisagreement, "projective intertwiner dimension: character route gives " +
                                                   std::to_string(by_char) + ", nullspace route gives " +
                                                   std::to_string(by_null));
  return static_cast<int>(by_char);
}

std::vector<ProjectiveRep> irreducible_projreps(GroupPtr g, const Subgroup& dom, const Cochain2& w,
                                                std::uint64_t seed) {
  const int k = dom.order();
  std::vector<Mat> left;
  for (int r : dom.elems) {
    Mat l = Mat::Zero(k, k);
    for (int s : dom.elems) l(dom.pos(g->mul(r, s)), dom.pos(s)) = w(r, s);
    left.push_back(l);
  }
  FamilySplit fs = split_family(left, seed);
  std::vector<ProjectiveRep> out;
  for (int c = 0; c < fs.nclasses; ++c) {
    size_t i = std::find(fs.cls.begin(), fs.cls.end(), c) - fs.cls.begin();
    std::vector<Mat> mats(g->order);
    for (int j = 0; j < k; ++j) mats[dom.elems[j]] = fs.pieces[i].adjoint() * left[j] * fs.pieces[i];
    out.push_back(make_projrep(g, dom, std::move(mats)));
    out.back().cocycle = w;
  }
  std::vector<std::pair<std::vector<long long>, size_t>> keys;
  for (size_t i = 0; i < out.size(); ++i) {
    auto ch = proj_character(out[i]);
    Vec cv(ch.size());
    for (size_t j = 0; j < ch.size(); ++j) cv(j) = ch[j];
    auto key = rounded_key(cv);
    key.insert(key.begin(), out[i].dim);
    keys.emplace_back(key, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<ProjectiveRep> sorted;
  for (auto& kv : keys) sorted.push_back(out[kv.second]);
  return sorted;
}

ProjectiveRep tensor(const ProjectiveRep& v, const ProjectiveRep& w) {
  if (!(v.dom == w.dom)) throw Error(ErrorKind::ValidationError, "tensor of projective representations on different groups");
  ProjectiveRep out;
  out.group = v.group;
  out.dom = v.dom;
  out.dim = v.dim * w.dim;
  out.mats.resize(v.group->order);
  for (int r : v.dom.elems) out.mats[r] = kron(v(r), w(r));
  out.cocycle = product(v.cocycle, w.cocycle);
  return out;
}

ProjectiveRep restrict(const ProjectiveRep& v, const Subgroup& sub) {
  ProjectiveRep out = v;
  out.dom = sub;
  for (int r = 0; r < v.group->order; ++r)
    if (!sub.contains(r)) out.mats[r] = Mat();
    else if (!v.dom.contains(r)) throw Error(ErrorKind::ValidationError, "restriction outside the domain");
  out.cocycle = restrict(v.cocycle, sub);
  return out;
}

ProjectiveRep contragredient(const ProjectiveRep& v) {
  ProjectiveRep out = v;
  for (int r : v.dom.elems) out.mats[r] = v(r).conjugate();
  out.cocycle = inverse(v.cocycle);
  return out;
}

ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b) {
  if (distance(a.cocycle, b.cocycle) > tol().accept)
    throw Error(ErrorKind::CocycleMismatch, "direct sum needs equal cocycles");
  ProjectiveRep out = a;
  out.dim = a.dim + b.dim;
  for (int r : a.dom.elems) {
    Mat m = Mat::Zero(out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = a(r);
    m.bottomRightCorner(b.dim, b.dim) = b(r);
    out.mats[r] = m;
  }
  return out;
}

ProjectiveRep transport(const ProjectiveRep& v, const Mat& t) {
  ProjectiveRep out = v;
  out.dim = static_cast<int>(t.rows());
  for (int r : v.dom.elems) out.mats[r] = t * v(r) * t.adjoint();
  return out;
}

ProjectiveRep translate(const ProjectiveRep& v, int r) {
  const auto& g = *v.group;
  ProjectiveRep out;
  out.group = v.group;
  out.dim = v.dim;
  out.dom = conjugate_subgroup(g, v.dom, r).sub;
  out.mats.resize(g.order);
  for (int s : v.dom.elems) out.mats[g.conj(r, s)] = v(s);
  out.cocycle = pullback_adj(v.cocycle, r);
  return out;
}

Cochain1 transitional_map(const ProjectiveRep& v1, const ProjectiveRep& v2) {
  if (!(v1.dom == v2.dom) || v1.dim != v2.dim)
    throw Error(ErrorKind::NotScalarRelated, "representations differ in group or dimension");
  Cochain1 b = trivial_cochain1(v1.group, v1.dom);
  for (int r : v1.dom.elems) {
    cplx c = (v1(r).adjoint() * v2(r)).trace() / static_cast<double>(v1.dim);
    if (max_abs(v2(r) - c * v1(r)) > tol().accept)
      throw Error(ErrorKind::NotScalarRelated, "V2(r)V1(r)^-1 is not scalar at r=" + std::to_string(r));
    b.b[r] = c / std::abs(c);
  }
  return b;
}

}  // namespace qm

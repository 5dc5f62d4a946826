#include "qmackey/induction.hpp"

#include "qmackey/errors.hpp"

namespace qm {

InducedRep induce(const Product& p, const Corep& u) {
  const auto& inst = *p.inst;
  const auto& g = *inst.lambda();
  const int L = g.order, n = u.dim, d = inst.base()->dim, k = p.sub.order();
  CovariantPair cp = split_covariant(p, u);
  if (check_covariant(inst, cp.ug, cp.ul, false) > tol().verify)
    throw Error(ErrorKind::CovarianceFailure, "source corep does not split into a covariant pair");

  // W~_G: block s carries (id (x) alpha*_s)(U_G); W~_L(t): delta_r -> delta_{r t^-1}.
  const int N = L * n;
  Corep wg{inst.base(), N, std::vector<Mat>(d, Mat::Zero(N, N))};
  for (int s = 0; s < L; ++s) {
    const Mat& a = inst.alpha_star(s);
    for (int c = 0; c < d; ++c)
      for (int b = 0; b < d; ++b)
        if (a(c, b) != cplx(0.0)) wg.coef[c].block(s * n, s * n, n, n) += a(c, b) * cp.ug.coef[b];
  }
  std::vector<Mat> wl(L);
  for (int t = 0; t < L; ++t) {
    Mat m = Mat::Zero(N, N);
    for (int r = 0; r < L; ++r) m.block(g.mul(r, g.inv[t]) * n, r * n, n, n) = Mat::Identity(n, n);
    wl[t] = m;
  }
  ProductPtr full = inst.full();
  Corep wt = join_covariant(*full, wg, make_projrep(inst.lambda(), full->sub, wl));

  // Isometry onto K, one block of columns per right coset L0 r.
  auto cosets = right_cosets(g, p.sub);
  Mat q = Mat::Zero(N, static_cast<Eigen::Index>(cosets.size()) * n);
  const double nrm = 1.0 / std::sqrt(static_cast<double>(k));
  for (size_t ci = 0; ci < cosets.size(); ++ci) {
    const int r = cosets[ci][0];
    for (int r0 : p.sub.elems) q.block(g.mul(r0, r) * n, ci * n, n, n) = nrm * cp.ul(r0);
  }
  Mat pi = q * q.adjoint();
  Mat pi_formula = Mat::Zero(N, N);
  for (int r0 : p.sub.elems)
    for (int s = 0; s < L; ++s) pi_formula.block(g.mul(r0, s) * n, s * n, n, n) += cp.ul(r0) / static_cast<double>(k);
  double res = max_abs(pi - pi_formula);
  for (const auto& c : wt.coef) res = std::max(res, max_abs(pi * c - c * pi));
  if (res > tol().verify)
    throw Error(ErrorKind::ProjectionNotInvariant, "projection onto K is not invariant (residual " +
                                                       std::to_string(res) + ")");
  InducedRep out{u, conjugate_by(wt, q.adjoint()), q};
  return out;
}

Corep translate_restrict(const Product& p, const Corep& u, int r, const Product& to) {
  const auto& g = *p.inst->lambda();
  ProductPtr mid = p.inst->product(conjugate_subgroup(g, p.sub, r).sub);
  return restrict_corep(*mid, to, act_corep(p, r, u));
}

InducedCharacter induced_character(const Product& p, const Corep& u) {
  const auto& inst = *p.inst;
  const auto& g = *inst.lambda();
  ProductPtr full = inst.full();
  InducedCharacter out{Vec::Zero(full->hopf->dim), Vec::Zero(full->hopf->dim)};
  std::vector<Vec> terms(g.order);
  for (int r = 0; r < g.order; ++r) {
    ProductPtr mid = inst.product(conjugate_subgroup(g, p.sub, r).sub);
    terms[r] = extend(*mid, *full, character(act_corep(p, r, u)));
    out.full += terms[r];
  }
  out.full /= static_cast<double>(p.sub.order());
  for (int r : left_coset_reps(g, p.sub)) out.coset += terms[r];
  double diff = (out.full - out.coset).cwiseAbs().maxCoeff();
  if (diff > tol().build)
    throw Error(ErrorKind::FormulaMismatch, "full-sum and coset-sum induced characters differ by " +
                                                std::to_string(diff));
  return out;
}

int ind_mor_dim_formula(const Product& pt, const Corep& u, const Product& px, const Corep& w) {
  const auto& inst = *pt.inst;
  const auto& g = *inst.lambda();
  long long acc = 0;
  for (int r = 0; r < g.order; ++r)
    for (int s = 0; s < g.order; ++s) {
      Subgroup meet = conjugate_intersection(g, {pt.sub, px.sub}, {r, s});
      ProductPtr sub = inst.product(meet);
      int m = mor_dim(translate_restrict(pt, u, r, *sub), translate_restrict(px, w, s, *sub));
      acc += static_cast<long long>(m) * meet.order();
    }
  const long long den = static_cast<long long>(g.order) * pt.sub.order() * px.sub.order();
  if (acc % den != 0)
    throw Error(ErrorKind::NotInteger, "intertwiner dimension formula gives a non-integer");
  return static_cast<int>(acc / den);
}

int ind_mor_dim(const Product& pt, const Corep& u, const Product& px, const Corep& w) {
  int a = ind_mor_dim_formula(pt, u, px, w);
  int b = mor_dim(induce(pt, u).result, induce(px, w).result);
  if (a != b)
    throw Error(ErrorKind::OracleDisagreement, "intertwiner formula gives " + std::to_string(a) +
                                                   ", induced coreps give " + std::to_string(b));
  return a;
}

bool mackey_irreducible(const Product& p, const Corep& u) {
  if (mor_dim(u, u) != 1) throw Error(ErrorKind::ValidationError, "Mackey criterion needs an irreducible corep");
  const auto& g = *p.inst->lambda();
  for (int r = 0; r < g.order; ++r)
    for (int s = 0; s < g.order; ++s) {
      if (p.sub.contains(g.mul(g.inv[r], s))) continue;
      ProductPtr sub = p.inst->product(conjugate_intersection(g, {p.sub, p.sub}, {r, s}));
      if (mor_dim(translate_restrict(p, u, r, *sub), translate_restrict(p, u, s, *sub)) != 0) return false;
    }
  return true;
}

}  // namespace qm

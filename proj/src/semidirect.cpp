#include "qmackey/semidirect.hpp"

#include "qmackey/errors.hpp"

namespace qm {

int Product::index(int r, int i) const { return sub.pos(r) * inst->base()->dim + i; }

SemidirectInstance::SemidirectInstance(std::string name, HopfPtr base, GroupPtr lambda, std::vector<Mat> alpha_star)
    : seed(tol().seed), name_(std::move(name)), base_(std::move(base)), lambda_(std::move(lambda)),
      alpha_(std::move(alpha_star)) {
  if (static_cast<int>(alpha_.size()) != lambda_->order)
    throw Error(ErrorKind::ValidationError, "need one action matrix per element of the acting group");
}

ProductPtr SemidirectInstance::product(const Subgroup& sub) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(sub.elems);
  if (it != cache_.end()) return it->second;
  auto p = std::make_shared<Product>();
  p->inst = this;
  p->sub = sub;
  p->hopf = build_product(*base_, *lambda_, alpha_, sub);
  cache_.emplace(sub.elems, p);
  return p;
}

const std::vector<Corep>& SemidirectInstance::base_irreps() const {
  std::call_once(irr_once_, [this] {
    irreps_ = irr_enumerate(base_, seed);
    action_ = qm::irr_action(lambda_, alpha_, irreps_);
  });
  return irreps_;
}

const GroupAction& SemidirectInstance::irr_action() const {
  base_irreps();
  return action_;
}

HopfPtr build_product(const HopfData& base, const FiniteGroup& lambda, const std::vector<Mat>& alpha_star,
                      const Subgroup& sub) {
  const int d = base.dim, k = sub.order(), n = d * k;
  auto idx = [&](int r, int i) { return sub.pos(r) * d + i; };
  auto h = std::make_shared<HopfData>();
  h->dim = n;
  h->left.assign(n, Mat::Zero(n, n));
  h->comult.assign(n, Mat::Zero(n, n));
  h->unit = Vec::Zero(n);
  h->counit = Vec::Zero(n);
  h->antipode = Mat::Zero(n, n);
  h->star = Mat::Zero(n, n);
  h->haar = Vec::Zero(n);
  for (int r : sub.elems) {
    const int rinv = lambda.inv[r];
    Vec srow(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j)
        for (int c = 0; c < d; ++c)
          if (base.left[i](c, j) != cplx(0.0)) h->left[idx(r, i)](idx(r, c), idx(r, j)) = base.left[i](c, j);
      h->unit(idx(r, i)) = base.unit(i);
      if (r == lambda.identity) h->counit(idx(r, i)) = base.counit(i);
      Vec s = alpha_star[r] * base.antipode.col(i);
      for (int c = 0; c < d; ++c) h->antipode(idx(rinv, c), idx(r, i)) = s(c);
      for (int c = 0; c < d; ++c) h->star(idx(r, c), idx(r, i)) = base.star(c, i);
      h->haar(idx(r, i)) = base.haar(i) / static_cast<double>(k);
      for (int s2 : sub.elems) {
        Mat m = base.comult[i] * alpha_star[s2].transpose();
        const int t = lambda.mul(lambda.inv[s2], r);
        for (int j = 0; j < d; ++j)
          for (int l = 0; l < d; ++l)
            if (m(j, l) != cplx(0.0)) h->comult[idx(r, i)](idx(s2, j), idx(t, l)) = m(j, l);
      }
    }
  }
  h->has_haar = base.has_haar;
  h->finalize();
  return h;
}

Corep restrict_corep(const Product& from, const Product& to, const Corep& u) {
  if (!is_subset(to.sub, from.sub)) throw Error(ErrorKind::ValidationError, "restriction to a non-subgroup");
  const int d = from.inst->base()->dim;
  Corep out{to.hopf, u.dim, {}};
  for (int r : to.sub.elems)
    for (int i = 0; i < d; ++i) out.coef.push_back(u.coef[from.index(r, i)]);
  return out;
}

Vec extend(const Product& from, const Product& to, const Vec& f) {
  if (!is_subset(from.sub, to.sub)) throw Error(ErrorKind::ValidationError, "extension to a smaller group");
  const int d = from.inst->base()->dim;
  Vec out = Vec::Zero(to.hopf->dim);
  for (int r : from.sub.elems)
    for (int i = 0; i < d; ++i) out(to.index(r, i)) = f(from.index(r, i));
  return out;
}

CovariantPair split_covariant(const Product& p, const Corep& u) {
  const auto& inst = *p.inst;
  const auto& base = *inst.base();
  const int d = base.dim, e = inst.lambda()->identity;
  Corep ug{inst.base(), u.dim, {}};
  for (int c = 0; c < d; ++c) ug.coef.push_back(u.coef[p.index(e, c)]);
  std::vector<Mat> mats(inst.lambda()->order);
  for (int r : p.sub.elems) {
    Mat f = Mat::Zero(u.dim, u.dim);
    for (int c = 0; c < d; ++c)
      if (base.counit(c) != cplx(0.0)) f += base.counit(c) * u.coef[p.index(r, c)];
    mats[r] = f;
  }
  ProjectiveRep ul = make_projrep(inst.lambda(), p.sub, std::move(mats));
  if (distance(ul.cocycle, trivial_cochain2(inst.lambda(), p.sub)) > tol().accept)
    throw Error(ErrorKind::NotCovariant, "the acting-group part is not an ordinary representation");
  return {ug, ul};
}

double check_covariant(const SemidirectInstance& inst, const Corep& ug, const ProjectiveRep& ul, bool raise) {
  const int d = inst.base()->dim;
  double worst = 0.0;
  int wr = -1, wc = -1;
  for (int r : ul.dom.elems) {
    const Mat& a = inst.alpha_star(r);
    for (int c = 0; c < d; ++c) {
      Mat rhs = Mat::Zero(ug.dim, ug.dim);
      for (int b = 0; b < d; ++b)
        if (a(c, b) != cplx(0.0)) rhs += a(c, b) * ug.coef[b];
      double res = max_abs(ul(r) * ug.coef[c] - rhs * ul(r));
      if (res > worst) worst = res, wr = r, wc = c;
    }
  }
  if (raise && worst > tol().accept)
    throw Error(ErrorKind::NotCovariant, "covariance fails at r=" + std::to_string(wr) + " basis index " +
                                             std::to_string(wc) + " (residual " + std::to_string(worst) + ")");
  return worst;
}

Corep join_covariant(const Product& p, const Corep& ug, const ProjectiveRep& ul) {
  if (!(ul.dom == p.sub) || ul.dim != ug.dim)
    throw Error(ErrorKind::ValidationError, "covariant pair does not match the product");
  check_covariant(*p.inst, ug, ul);
  const int d = p.inst->base()->dim;
  Corep out{p.hopf, ug.dim, std::vector<Mat>(p.hopf->dim)};
  for (int r : p.sub.elems)
    for (int c = 0; c < d; ++c) out.coef[p.index(r, c)] = ug.coef[c] * ul(r);
  return out;
}

Mat conj_iso(const Product& from, const Product& to, int r) {
  const auto& g = *from.inst->lambda();
  const int d = from.inst->base()->dim;
  if (!(conjugate_subgroup(g, from.sub, r).sub == to.sub))
    throw Error(ErrorKind::ValidationError, "target is not the conjugated subgroup");
  const Mat& a = from.inst->alpha_star(g.inv[r]);
  Mat m = Mat::Zero(to.hopf->dim, from.hopf->dim);
  for (int r0 : from.sub.elems) {
    const int t = g.conj(r, r0);
    m.block(to.index(t, 0), from.index(r0, 0), d, d) = a;
  }
  return m;
}

Corep act_corep(const Product& p, int r, const Corep& u) {
  const auto& g = *p.inst->lambda();
  ProductPtr to = p.inst->product(conjugate_subgroup(g, p.sub, r).sub);
  Corep out = act(u, conj_iso(p, *to, r));
  out.parent = to->hopf;
  return out;
}

}  // namespace qm

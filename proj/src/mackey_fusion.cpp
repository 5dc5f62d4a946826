#include "qmackey/mackey_fusion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <thread>

#include "qmackey/errors.hpp"

namespace qm {

namespace {

Mat herm_power(const Mat& p, double e) {
  Eigen::SelfAdjointEigenSolver<Mat> es((p + p.adjoint()) * 0.5);
  Vec d = es.eigenvalues().cast<cplx>();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::pow(d(i).real(), e);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Corep base_act(const SemidirectInstance& inst, const Corep& u, int r) {
  return act(u, inst.alpha_star(inst.lambda()->inv[r]));
}

Corep kron_identity(const Corep& u, int k) {
  Corep out{u.parent, k * u.dim, {}};
  for (const auto& c : u.coef) out.coef.push_back(kron(Mat::Identity(k, k), c));
  return out;
}

// Maximal residual of V(r0) (r0.u) = u V(r0).
double covariance_residual(const SemidirectInstance& inst, const Corep& u, const ProjectiveRep& V) {
  double res = 0.0;
  for (int r : V.dom.elems) {
    Corep ru = base_act(inst, u, r);
    for (size_t c = 0; c < u.coef.size(); ++c) res = std::max(res, max_abs(V(r) * ru.coef[c] - u.coef[c] * V(r)));
  }
  return res;
}

}  // namespace

void validate_parameter(const SemidirectInstance& inst, const RepParameter& p, bool irreducible) {
  if (!(p.V.dom == p.lambda0) || !(p.v.dom == p.lambda0))
    throw Error(ErrorKind::ValidationError, "parameter pieces live on different subgroups");
  if (p.V.dim != p.u.dim) throw Error(ErrorKind::ValidationError, "V acts on a space of the wrong dimension");
  if (irreducible && mor_dim(p.u, p.u) != 1) throw Error(ErrorKind::ValidationError, "u is not irreducible");
  double res = covariance_residual(inst, p.u, p.V);
  if (res > tol().accept)
    throw Error(ErrorKind::NotCovariant, "V is not covariant with u (residual " + std::to_string(res) + ")");
  if (distance(product(p.V.cocycle, p.v.cocycle), trivial_cochain2(p.V.group, p.lambda0)) > tol().accept)
    throw Error(ErrorKind::CocycleMismatch, "cocycles of V and v are not opposite");
}

ProjectiveRep covariant_projective(const SemidirectInstance& inst, const Corep& u, const Subgroup& lambda0) {
  const auto& g = *inst.lambda();
  const int n = u.dim;
  std::vector<Mat> mats(g.order);
  for (int r : lambda0.elems) {
    if (r == g.identity) {
      mats[r] = Mat::Identity(n, n);
      continue;
    }
    auto basis = intertwiner_basis(base_act(inst, u, r), u);
    if (basis.empty())
      throw Error(ErrorKind::NotStabilized, "element " + std::to_string(r) + " moves the class of u");
    if (basis.size() > 1) throw Error(ErrorKind::ValidationError, "covariant_projective needs an irreducible u");
    Mat t = basis[0] * std::sqrt(static_cast<double>(n));
    cplx phase = 0.0;
    for (int i = 0; i < n && phase == cplx(0.0); ++i)
      for (int j = 0; j < n; ++j)
        if (std::abs(t(i, j)) > 1e-8) {
          phase = std::abs(t(i, j)) / t(i, j);
          break;
        }
    if (phase == cplx(0.0)) throw Error(ErrorKind::GaugeFailure, "intertwiner has no significant entry");
    mats[r] = t * phase;
  }
  return make_projrep(inst.lambda(), lambda0, std::move(mats));
}

Corep csr_corep(const SemidirectInstance& inst, const RepParameter& p) {
  const int k = p.v.dim;
  Corep ug = kron_identity(p.u, k);
  std::vector<Mat> mats(inst.lambda()->order);
  for (int r : p.lambda0.elems) mats[r] = kron(p.v(r), p.V(r));
  ProjectiveRep ul = make_projrep(inst.lambda(), p.lambda0, std::move(mats));
  return join_covariant(*inst.product(p.lambda0), ug, ul);
}

int param_mor_dim(const SemidirectInstance& inst, const RepParameter& p1, const RepParameter& p2) {
  if (!(p1.lambda0 == p2.lambda0)) throw Error(ErrorKind::ValidationError, "parameters over different subgroups");
  int by_param = 0;
  auto basis = intertwiner_basis(p1.u, p2.u);
  if (basis.size() > 1) throw Error(ErrorKind::ValidationError, "param_mor_dim needs irreducible u");
  if (basis.size() == 1) {
    Mat t = basis[0] * std::sqrt(static_cast<double>(p1.u.dim));
    ProjectiveRep v1t = transport(p1.V, t);
    Cochain1 b = transitional_map(v1t, p2.V);
    by_param = proj_mor_dim(p1.v, rescale(b, p2.v));
  }
  int direct = mor_dim(csr_corep(inst, p1), csr_corep(inst, p2));
  if (by_param != direct)
    throw Error(ErrorKind::OracleDisagreement, "transitional-map route gives " + std::to_string(by_param) +
                                                   ", direct route gives " + std::to_string(direct));
  return direct;
}

std::vector<int> match_dual_blocks(const std::vector<ClassifiedIrr>& irrs, const DualBlocks& blocks) {
  std::vector<int> pos(irrs.size(), -1);
  std::vector<char> used(blocks.dims.size(), 0);
  for (size_t i = 0; i < irrs.size(); ++i)
    for (size_t b = 0; b < blocks.dims.size(); ++b)
      if (!used[b] && blocks.dims[b] == irrs[i].dim &&
          (blocks.characters[b] - irrs[i].character).cwiseAbs().maxCoeff() < tol().accept) {
        pos[i] = static_cast<int>(b);
        used[b] = 1;
        break;
      }
  for (size_t i = 0; i < irrs.size(); ++i)
    if (pos[i] < 0)
      throw Error(ErrorKind::OracleDisagreement, "classified irrep " + std::to_string(i) +
                                                     " matches no block of the dual algebra");
  if (irrs.size() != blocks.dims.size())
    throw Error(ErrorKind::OracleDisagreement, "classification and dual algebra count different irreps");
  return pos;
}

std::vector<ClassifiedIrr> classify(const SemidirectInstance& inst) {
  const auto& irr = inst.base_irreps();
  const auto& act_ = inst.irr_action();
  const auto& full = *inst.full();
  const auto& hf = *full.hopf;
  std::vector<ClassifiedIrr> out;
  for (const auto& orb : orbits(act_)) {
    const int x = orb.front();
    Subgroup l0 = stabilizer(act_, x);
    ProjectiveRep V = covariant_projective(inst, irr[x], l0);
    auto vs = irreducible_projreps(inst.lambda(), l0, inverse(V.cocycle), inst.seed);
    bool trivial = std::any_of(vs.begin(), vs.end(), [](const ProjectiveRep& v) { return v.dim == 1; });
    for (size_t j = 0; j < vs.size(); ++j) {
      ClassifiedIrr c;
      c.param = RepParameter{irr[x], V, vs[j], l0};
      validate_parameter(inst, c.param, true);
      c.orbit_rep = x;
      c.proj_index = static_cast<int>(j);
      c.cocycle_trivial = trivial;
      c.csr = csr_corep(inst, c.param);
      c.induced = induce(*inst.product(l0), c.csr).result;
      c.dim = c.induced.dim;
      c.character = character(c.induced);
      bool dup = false;
      for (const auto& k : out) {
        cplx ip = hf.h(hf.mul(hf.adj(k.character), c.character));
        long long v = round_int(ip, "character Gram entry");
        if (v != 0 && v != 1) throw Error(ErrorKind::GramFailure, "Gram entry outside {0,1}");
        dup = dup || v == 1;
      }
      cplx norm = hf.h(hf.mul(hf.adj(c.character), c.character));
      if (std::abs(norm - 1.0) > tol().accept) throw Error(ErrorKind::GramFailure, "induced character has norm != 1");
      if (!dup) out.push_back(std::move(c));
    }
  }
  long long total = 0;
  for (const auto& c : out) total += static_cast<long long>(c.dim) * c.dim;
  if (total != hf.dim)
    throw Error(ErrorKind::CompletenessFailure, "sum of squared dimensions is " + std::to_string(total) +
                                                    ", expected " + std::to_string(hf.dim));
  match_dual_blocks(out, dual_blocks(hf, inst.seed));
  auto enumerated = irr_enumerate(full.hopf, inst.seed);
  std::vector<char> hit(out.size(), 0);
  for (const auto& w : enumerated) {
    Vec cw = character(w);
    int found = -1;
    for (size_t i = 0; i < out.size() && found < 0; ++i)
      if (!hit[i] && out[i].dim == w.dim && (out[i].character - cw).cwiseAbs().maxCoeff() < tol().accept)
        found = static_cast<int>(i);
    if (found < 0) throw Error(ErrorKind::OracleDisagreement, "enumerated irrep of the product is not classified");
    hit[found] = 1;
  }
  if (enumerated.size() != out.size())
    throw Error(ErrorKind::OracleDisagreement, "classification and enumeration count different irreps");
  return out;
}

RepParameter conjugate_parameter(const SemidirectInstance& inst, const RepParameter& p) {
  Conjugate cj = conjugate(p.u);
  RepParameter out{cj.ubar, contragredient(p.V), contragredient(p.v), p.lambda0};
  if (max_abs(cj.rho - Mat::Identity(p.u.dim, p.u.dim)) > tol().verify) {
    Mat jr = cj.rho.transpose();
    Mat a = herm_power(jr, 0.5), ai = herm_power(jr, -0.5);
    for (int r : p.lambda0.elems) out.V.mats[r] = a * out.V.mats[r] * ai;
  }
  validate_parameter(inst, out, false);
  return out;
}

std::vector<int> conjugation_involution(const SemidirectInstance& inst, const std::vector<ClassifiedIrr>& irrs) {
  const auto& hf = *inst.full()->hopf;
  std::vector<int> inv(irrs.size(), -1);
  for (size_t i = 0; i < irrs.size(); ++i) {
    Vec cb = character(conjugate(irrs[i].induced).ubar);
    for (size_t j = 0; j < irrs.size(); ++j)
      if (irrs[j].dim == irrs[i].dim && round_int(hf.h(hf.mul(hf.adj(cb), irrs[j].character)), "conjugate match") == 1) {
        inv[i] = static_cast<int>(j);
        break;
      }
    if (inv[i] < 0) throw Error(ErrorKind::CompletenessFailure, "conjugate of an irrep is not in the list");
  }
  return inv;
}

std::optional<RepParameter> reduce_grp(const SemidirectInstance& inst, const GRParameter& g, const Corep& u0,
                                       const ProjectiveRep& V0) {
  const int d0 = u0.dim, n = g.u.dim;
  auto basis = intertwiner_basis(u0, g.u);
  const int m = static_cast<int>(basis.size());
  if (m == 0) return std::nullopt;
  Mat w(n, m * d0);
  for (int a = 0; a < m; ++a) w.middleCols(a * d0, d0) = std::sqrt(static_cast<double>(d0)) * basis[a];
  std::vector<Mat> v1(inst.lambda()->order);
  double res = 0.0;
  for (int r : g.lambda0.elems) {
    Mat vp = w.adjoint() * g.V(r) * w;
    Mat x(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) x(a, b) = (V0(r).adjoint() * vp.block(a * d0, b * d0, d0, d0)).trace() / double(d0);
    res = std::max(res, max_abs(x * x.adjoint() - Mat::Identity(m, m)));
    res = std::max(res, max_abs(vp - kron(x, V0(r))));
    v1[r] = x;
  }
  if (res > tol().accept)
    throw Error(ErrorKind::NonUnitaryExtraction, "extracted multiplicity representation is not unitary (residual " +
                                                     std::to_string(res) + ")");
  ProjectiveRep V1 = make_projrep(inst.lambda(), g.lambda0, std::move(v1));
  return RepParameter{u0, V0, tensor(g.v, V1), g.lambda0};
}

namespace {

// r.p restricted to sub (a subgroup of r L0 r^-1).
RepParameter translate_param(const SemidirectInstance& inst, const RepParameter& p, int r, const Subgroup& sub) {
  RepParameter out;
  out.u = base_act(inst, p.u, r);
  out.V = restrict(translate(p.V, r), sub);
  out.v = restrict(translate(p.v, r), sub);
  out.lambda0 = sub;
  return out;
}

}  // namespace

int incidence(const SemidirectInstance& inst, const ClassifiedIrr& w1, const ClassifiedIrr& w2,
              const ClassifiedIrr& w3, int r1, int r2, int r3) {
  const auto& g = *inst.lambda();
  Subgroup meet = conjugate_intersection(g, {w1.param.lambda0, w2.param.lambda0, w3.param.lambda0}, {r1, r2, r3});
  ProductPtr pm = inst.product(meet);
  const auto& hm = *pm->hopf;

  Vec c1 = character(translate_restrict(*inst.product(w1.param.lambda0), w1.csr, r1, *pm));
  Vec c2 = character(translate_restrict(*inst.product(w2.param.lambda0), w2.csr, r2, *pm));
  Vec c3 = character(translate_restrict(*inst.product(w3.param.lambda0), w3.csr, r3, *pm));
  int by_char = static_cast<int>(round_int(hm.h(hm.mul(hm.adj(c1), hm.mul(c2, c3))), "incidence number"));

  RepParameter t1 = translate_param(inst, w1.param, r1, meet);
  RepParameter t2 = translate_param(inst, w2.param, r2, meet);
  RepParameter t3 = translate_param(inst, w3.param, r3, meet);
  GRParameter grp{tensor(t2.u, t3.u), tensor(t2.V, t3.V), tensor(t2.v, t3.v), meet};
  int by_proj = 0;
  if (auto red = reduce_grp(inst, grp, t1.u, t1.V)) by_proj = proj_mor_dim(t1.v, red->v);
  if (by_char != by_proj)
    throw Error(ErrorKind::OracleDisagreement, "incidence number: character route " + std::to_string(by_char) +
                                                   ", projective route " + std::to_string(by_proj));
  return by_char;
}

FusionTable fusion(const SemidirectInstance& inst, const std::vector<ClassifiedIrr>& irrs, int jobs,
                   bool check_frobenius) {
  const auto& g = *inst.lambda();
  const auto& hf = *inst.full()->hopf;
  const int n = static_cast<int>(irrs.size());
  FusionTable t;
  t.formula.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  t.brute = t.formula;

  std::vector<std::vector<int>> reps(n);
  for (int i = 0; i < n; ++i) reps[i] = left_coset_reps(g, irrs[i].param.lambda0);
  std::vector<Vec> conj_char(n);
  if (check_frobenius)
    for (int i = 0; i < n; ++i) conj_char[i] = character(conjugate(irrs[i].induced).ubar);

  const long long total = static_cast<long long>(n) * n * n;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(total));
  std::vector<char> frob(static_cast<size_t>(total), 1);
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (long long idx = next++; idx < total; idx = next++) {
      const int a = static_cast<int>(idx / (n * n)), b = static_cast<int>((idx / n) % n), c = static_cast<int>(idx % n);
      try {
        long long acc = 0;
        for (int z1 : reps[a])
          for (int z2 : reps[b])
            for (int z3 : reps[c]) {
              int m = incidence(inst, irrs[a], irrs[b], irrs[c], z1, z2, z3);
              if (m == 0) continue;
              Subgroup meet = conjugate_intersection(
                  g, {irrs[a].param.lambda0, irrs[b].param.lambda0, irrs[c].param.lambda0}, {z1, z2, z3});
              acc += static_cast<long long>(m) * meet.order();
            }
        if (acc % g.order != 0) throw Error(ErrorKind::NonIntegerCoefficient, "fusion coefficient is not an integer");
        t.formula[a][b][c] = static_cast<int>(acc / g.order);
        Vec prod = hf.mul(hf.adj(irrs[a].character), hf.mul(irrs[b].character, irrs[c].character));
        t.brute[a][b][c] = static_cast<int>(round_int(hf.h(prod), "brute-force fusion coefficient"));
        if (check_frobenius) {
          Vec f = hf.mul(hf.adj(hf.mul(conj_char[b], irrs[a].character)), irrs[c].character);
          frob[idx] = round_int(hf.h(f), "Frobenius check") == t.formula[a][b][c];
        }
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const int nt = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (long long i = 0; i < total; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  t.frobenius_ok = std::all_of(frob.begin(), frob.end(), [](char c) { return c != 0; });

  DualBlocks blocks = dual_blocks(hf, inst.seed);
  auto pos = match_dual_blocks(irrs, blocks);
  Cube dn = dual_fusion(hf, blocks);
  t.dual = t.formula;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.dual[a][b][c] = dn[pos[a]][pos[b]][pos[c]];
  return t;
}

}  // namespace qm

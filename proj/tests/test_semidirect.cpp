#include "helpers.hpp"

using namespace qmt;

TEST_CASE("trivial acting group reproduces the base") {
  auto base = function_algebra(s3());
  auto one = std::make_shared<FiniteGroup>(cyclic(1));
  SemidirectInstance inst("t", base, one, {Mat::Identity(6, 6)});
  const auto& p = *inst.full()->hopf;
  CHECK(max_abs(p.antipode - base->antipode) == 0.0);
  for (int i = 0; i < 6; ++i) {
    CHECK(max_abs(p.left[i] - base->left[i]) == 0.0);
    CHECK(max_abs(p.comult[i] - base->comult[i]) == 0.0);
  }
}

TEST_CASE("products of the corpus satisfy the axioms") {
  for (const char* name : {"A_z3_by_z2", "B_z2sq_by_swap", "C_dual_s3_by_conj", "D_dual_s3_trivial", "E_z3sq_by_z2sq",
                           "F_d4_by_inner", "A_raw"}) {
    CAPTURE(name);
    auto inst = load(name);
    const auto& p = *inst->full()->hopf;
    CHECK(p.dim == inst->base()->dim * inst->lambda()->order);
    CHECK(verify_axioms(p).worst() < 1e-9);
    CHECK((haar_solve(p) - p.haar).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_kac(p) == is_kac(*inst->base()));
    for (const auto& sub : general_isotropy_family(inst->irr_action()))
      CHECK(verify_axioms(*inst->product(sub)->hopf).worst() < 1e-9);
  }
}

TEST_CASE("C is neither commutative nor cocommutative") {
  auto inst = load("C_dual_s3_by_conj");
  const auto& p = *inst->full()->hopf;
  double comm = 0.0, cocomm = 0.0;
  for (int i = 0; i < p.dim; ++i) {
    cocomm = std::max(cocomm, max_abs(p.comult[i] - p.comult[i].transpose()));
    for (int j = 0; j < p.dim; ++j) comm = std::max(comm, (p.mul(p.basis(i), p.basis(j)) - p.mul(p.basis(j), p.basis(i))).cwiseAbs().maxCoeff());
  }
  CHECK(comm > 0.5);
  CHECK(cocomm > 0.5);
}

TEST_CASE("split and join are inverse") {
  auto inst = load("B_z2sq_by_swap");
  auto full = inst->full();
  for (const auto& u : irr_enumerate(full->hopf, 3)) {
    auto cp = split_covariant(*full, u);
    Corep back = join_covariant(*full, cp.ug, cp.ul);
    for (size_t k = 0; k < u.coef.size(); ++k) CHECK(max_abs(back.coef[k] - u.coef[k]) < 1e-12);
    CHECK(verify_corep(back).ok());
  }
}

TEST_CASE("a non-covariant pair is rejected") {
  auto inst = load("A_z3_by_z2");
  auto full = inst->full();
  const auto& irr = inst->base_irreps();
  int omega = 0;
  while (orbit(inst->irr_action(), omega).size() != 2) ++omega;
  std::vector<Mat> sign{Mat::Identity(1, 1), -Mat::Identity(1, 1)};
  ProjectiveRep ul = make_projrep(inst->lambda(), full->sub, sign);
  CHECK(check_covariant(*inst, irr[omega], ul, false) > 0.5);
  CHECK_THROWS_AS(join_covariant(*full, irr[omega], ul), Error);
  // the trivial corep with the sign rep is covariant
  Corep triv = trivial_corep(inst->base());
  Corep s = join_covariant(*full, triv, ul);
  CHECK(verify_corep(s).ok());
}

TEST_CASE("restriction, extension and the translation action") {
  auto inst = load("E_z3sq_by_z2sq");
  const auto& g = *inst->lambda();
  auto full = inst->full();
  auto irr = irr_enumerate(full->hopf, 5);
  Subgroup h = make_subgroup(g, {0, 1});
  auto ph = inst->product(h);
  auto pe = inst->product(trivial_subgroup(g));
  for (const auto& u : irr) {
    Corep r = restrict_corep(*full, *ph, u);
    CHECK(verify_corep(r).ok());
    Corep e = restrict_corep(*full, *pe, u);
    CHECK(max_abs(e.coef[0] - split_covariant(*full, u).ug.coef[0]) < 1e-15);
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) {
        Corep ab = act_corep(*full, g.mul(a, b), u);
        Corep ab2 = act_corep(*full, a, act_corep(*full, b, u));
        for (size_t k = 0; k < ab.coef.size(); ++k) CHECK(max_abs(ab.coef[k] - ab2.coef[k]) < 1e-12);
      }
  }
  Vec one = ph->hopf->unit;
  Vec ext = extend(*ph, *full, one);
  CHECK(std::abs(full->hopf->h(ext) - ph->hopf->h(one) / 2.0) < 1e-12);
  Vec x = Vec::Random(ph->hopf->dim);
  CHECK(std::abs(full->hopf->h(extend(*ph, *full, x)) - ph->hopf->h(x) / 2.0) < 1e-12);
}

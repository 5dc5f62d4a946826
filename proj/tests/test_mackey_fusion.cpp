#include "helpers.hpp"

using namespace qmt;

TEST_CASE("covariant projective representations") {
  auto a = load("A_z3_by_z2");
  const auto& g = *a->lambda();
  int triv = first_with_orbit(*a, 1);
  ProjectiveRep V = covariant_projective(*a, a->base_irreps()[triv], whole_group(g));
  for (int r = 0; r < g.order; ++r) CHECK(max_abs(V(r) - Mat::Identity(1, 1)) < 1e-12);
  int moved = first_with_orbit(*a, 2);
  ProjectiveRep Ve = covariant_projective(*a, a->base_irreps()[moved], trivial_subgroup(g));
  CHECK(max_abs(Ve(0) - Mat::Identity(1, 1)) == 0.0);
  CHECK_THROWS_AS(covariant_projective(*a, a->base_irreps()[moved], whole_group(g)), Error);

  auto b = load("B_z2sq_by_swap");
  int x = first_with_orbit(*b, 1);
  ProjectiveRep Vb = covariant_projective(*b, b->base_irreps()[x], whole_group(*b->lambda()));
  CHECK(try_solve_coboundary(Vb.cocycle, 2).has_value());
}

TEST_CASE("the sign representation as a parameter") {
  auto a = load("A_z3_by_z2");
  const auto& g = *a->lambda();
  int triv = first_with_orbit(*a, 1);
  auto ps = parameters(*a, triv, whole_group(g));
  REQUIRE(ps.size() == 2);
  const RepParameter& sgn = ps[0].v(1)(0, 0).real() < 0 ? ps[0] : ps[1];
  Corep u = csr_corep(*a, sgn);
  CHECK(u.dim == 1);
  CHECK(verify_corep(u).ok());
  CHECK(mor_dim(u, trivial_corep(a->full()->hopf)) == 0);
  CHECK(param_mor_dim(*a, ps[0], ps[0]) == 1);
  CHECK(param_mor_dim(*a, ps[0], ps[1]) == 0);
}

TEST_CASE("param_mor_dim vanishes for different orbit points") {
  auto c = load("C_dual_s3_by_conj");
  const auto& g = *c->lambda();
  Subgroup e = trivial_subgroup(g);
  auto p1 = parameters(*c, 0, e).front();
  auto p2 = parameters(*c, 1, e).front();
  CHECK(param_mor_dim(*c, p1, p2) == 0);
  CHECK(param_mor_dim(*c, p1, p1) == 1);
}

TEST_CASE("classification of the corpus") {
  struct Case {
    const char* name;
    std::vector<int> dims;
  };
  for (const auto& cs : std::vector<Case>{{"A_z3_by_z2", {1, 1, 2}},
                                          {"B_z2sq_by_swap", {1, 1, 1, 1, 2}},
                                          {"C_dual_s3_by_conj", {1, 1, 1, 1, 2, 2}},
                                          {"D_dual_s3_trivial", std::vector<int>(12, 1)},
                                          {"E_z3sq_by_z2sq", {1, 1, 1, 1, 2, 2, 2, 2, 4}},
                                          {"A_raw", {1, 1, 2}}}) {
    CAPTURE(cs.name);
    auto inst = load(cs.name);
    auto cl = classify(*inst);
    CHECK(sorted_dims(cl) == cs.dims);
    for (const auto& c : cl) {
      CHECK(c.cocycle_trivial);
      CHECK(c.dim == (inst->lambda()->order / c.param.lambda0.order()) * c.param.u.dim * c.param.v.dim);
      CHECK(mackey_irreducible(*inst->product(c.param.lambda0), c.csr));
    }
  }
}

TEST_CASE("instance F carries a nontrivial cocycle class") {
  auto f = load("F_d4_by_inner");
  auto cl = classify(*f);
  std::vector<int> expect(16, 1);
  expect.push_back(4);
  CHECK(sorted_dims(cl) == expect);
  int nontrivial = 0;
  for (const auto& c : cl) {
    if (c.cocycle_trivial) continue;
    ++nontrivial;
    const Cochain2& w = c.param.V.cocycle;
    CHECK(c.param.u.dim == 2);
    CHECK(c.param.v.dim == 2);
    // commuting elements with w(r,s) != w(s,r) rule out a coboundary in any gauge
    CHECK(std::abs(w(1, 2) / w(2, 1) + 1.0) < 1e-9);
    CHECK(std::abs(w(1, 3) / w(3, 1) + 1.0) < 1e-9);
    CHECK_FALSE(try_solve_coboundary(w, 4).has_value());
    CHECK_FALSE(try_solve_coboundary(w, 8).has_value());
  }
  CHECK(nontrivial == 1);
}

TEST_CASE("fusion rules of S3 from instance A") {
  auto a = load("A_z3_by_z2");
  auto cl = classify(*a);
  FusionTable t = fusion(*a, cl, 2);
  CHECK(t.agree());
  int two = 0;
  while (cl[two].dim != 2) ++two;
  for (int i = 0; i < 3; ++i) CHECK(t.formula[i][two][two] == 1);
  int triv = -1;
  for (int i = 0; i < 3; ++i)
    if (mor_dim(cl[i].induced, trivial_corep(a->full()->hopf)) == 1) triv = i;
  REQUIRE(triv >= 0);
  for (int w = 0; w < 3; ++w)
    for (int w2 = 0; w2 < 3; ++w2) CHECK(t.formula[w2][triv][w] == (w == w2 ? 1 : 0));
}

TEST_CASE("fusion agrees on C with several threads") {
  auto c = load("C_dual_s3_by_conj");
  auto cl = classify(*c);
  FusionTable t1 = fusion(*c, cl, 1), t3 = fusion(*c, cl, 3);
  CHECK(t1.agree());
  CHECK(t1.formula == t3.formula);
}

TEST_CASE("incidence numbers depend only on cosets") {
  auto c = load("C_dual_s3_by_conj");
  const auto& g = *c->lambda();
  auto cl = classify(*c);
  for (const auto& w1 : cl)
    for (const auto& w2 : cl)
      for (const auto& w3 : cl)
        for (int r1 = 0; r1 < g.order; ++r1)
          for (int h1 : w1.param.lambda0.elems)
            for (int h2 : w2.param.lambda0.elems)
              CHECK(incidence(*c, w1, w2, w3, r1, 0, 1) == incidence(*c, w1, w2, w3, g.mul(r1, h1), h2, g.mul(1, w3.param.lambda0.elems.back())));
}

TEST_CASE("conjugate parameters") {
  for (const char* name : {"A_z3_by_z2", "C_dual_s3_by_conj", "E_z3sq_by_z2sq"}) {
    CAPTURE(name);
    auto inst = load(name);
    auto cl = classify(*inst);
    auto inv = conjugation_involution(*inst, cl);
    const auto& hf = *inst->full()->hopf;
    for (size_t i = 0; i < cl.size(); ++i) {
      CHECK(inv[inv[i]] == static_cast<int>(i));
      RepParameter pb = conjugate_parameter(*inst, cl[i].param);
      Vec c = character(induce(*inst->product(pb.lambda0), csr_corep(*inst, pb)).result);
      CHECK(round_int(hf.h(hf.mul(hf.adj(c), cl[inv[i]].character)), "x") == 1);
    }
  }
  auto a = load("A_z3_by_z2");
  auto cl = classify(*a);
  auto inv = conjugation_involution(*a, cl);
  for (size_t i = 0; i < cl.size(); ++i)
    if (cl[i].dim == 2) CHECK(inv[i] == static_cast<int>(i));
}

TEST_CASE("reduce_grp: identity, empty and multiplicity cases") {
  auto f = load("F_d4_by_inner");
  auto cl = classify(*f);
  const ClassifiedIrr* big = nullptr;
  const ClassifiedIrr* small = nullptr;
  for (const auto& c : cl) (c.cocycle_trivial ? small : big) = &c;
  REQUIRE(big);
  REQUIRE(small);
  auto same = reduce_grp(*f, big->param, big->param.u, big->param.V);
  REQUIRE(same.has_value());
  CHECK(same->v.dim == big->param.v.dim);
  CHECK(param_mor_dim(*f, *same, big->param) == 1);
  CHECK_FALSE(reduce_grp(*f, small->param, big->param.u, big->param.V).has_value());

  // u (x) u contains each 1-dim character once
  GRParameter sq{tensor(big->param.u, big->param.u), tensor(big->param.V, big->param.V),
                 tensor(big->param.v, big->param.v), big->param.lambda0};
  validate_parameter(*f, sq, false);
  auto red = reduce_grp(*f, sq, small->param.u, small->param.V);
  REQUIRE(red.has_value());
  CHECK(red->v.dim == big->param.v.dim * big->param.v.dim);
}

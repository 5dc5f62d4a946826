#include "helpers.hpp"

using namespace qmt;

TEST_CASE("inducing a moved character of Z3 gives the 2-dim irrep of S3") {
  auto inst = load("A_z3_by_z2");
  const auto& g = *inst->lambda();
  auto pe = inst->product(trivial_subgroup(g));
  int x = first_with_orbit(*inst, 2);
  auto p = parameters(*inst, x, trivial_subgroup(g)).front();
  Corep u = csr_corep(*inst, p);
  InducedRep ind = induce(*pe, u);
  CHECK(ind.result.dim == 2);
  CHECK(verify_corep(ind.result).ok());
  CHECK(max_abs(ind.isometry.adjoint() * ind.isometry - Mat::Identity(2, 2)) < 1e-12);
  CHECK(mor_dim(ind.result, ind.result) == 1);
  CHECK(mackey_irreducible(*pe, u));
  auto dual = dual_blocks(*inst->full()->hopf, 1);
  Vec chi = character(ind.result);
  bool found = false;
  for (size_t b = 0; b < dual.dims.size(); ++b)
    found = found || (dual.dims[b] == 2 && (dual.characters[b] - chi).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(found);

  // the other point of the orbit induces the same representation
  int y = inst->irr_action().perm[1][x];
  Corep w = csr_corep(*inst, parameters(*inst, y, trivial_subgroup(g)).front());
  CHECK(ind_mor_dim(*pe, u, *pe, w) == 1);
}

TEST_CASE("inducing the trivial character from the trivial subgroup") {
  auto inst = load("A_z3_by_z2");
  const auto& g = *inst->lambda();
  auto pe = inst->product(trivial_subgroup(g));
  int x = first_with_orbit(*inst, 1);
  Corep u = csr_corep(*inst, parameters(*inst, x, trivial_subgroup(g)).front());
  InducedRep ind = induce(*pe, u);
  CHECK(ind.result.dim == 2);
  CHECK_FALSE(mackey_irreducible(*pe, u));
  CHECK(mor_dim(ind.result, ind.result) == 2);
  // trivial corep of the product: multiplicity of the trivial rep
  auto full = inst->full();
  Corep triv = trivial_corep(full->hopf);
  CHECK(ind_mor_dim(*full, triv, *pe, u) == 1);
}

TEST_CASE("induction from the whole group is the identity up to equivalence") {
  auto inst = load("C_dual_s3_by_conj");
  auto full = inst->full();
  for (const auto& c : classify(*inst)) {
    if (!(c.param.lambda0 == full->sub)) continue;
    InducedRep ind = induce(*full, c.csr);
    CHECK(mor_dim(ind.result, c.csr) == 1);
    InducedCharacter ch = induced_character(*full, c.csr);
    CHECK((ch.full - character(c.csr)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("induced character of a moved character of Z2 x Z2 is the D4 character") {
  auto inst = load("B_z2sq_by_swap");
  const auto& g = *inst->lambda();
  auto pe = inst->product(trivial_subgroup(g));
  int x = first_with_orbit(*inst, 2);
  Corep u = csr_corep(*inst, parameters(*inst, x, trivial_subgroup(g)).front());
  InducedCharacter ch = induced_character(*pe, u);
  Vec expect = Vec::Zero(8);
  expect(0) = 2.0;
  expect(3) = -2.0;
  CHECK((ch.full - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ch.coset - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((character(induce(*pe, u).result) - expect).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("dimension law on instance E") {
  auto inst = load("E_z3sq_by_z2sq");
  const auto& g = *inst->lambda();
  for (const auto& sub : general_isotropy_family(inst->irr_action())) {
    auto p = inst->product(sub);
    for (int x = 0; x < static_cast<int>(inst->base_irreps().size()); ++x) {
      if (!is_subset(sub, stabilizer(inst->irr_action(), x))) continue;
      for (const auto& par : parameters(*inst, x, sub)) {
        Corep u = csr_corep(*inst, par);
        InducedRep ind = induce(*p, u);
        CHECK(ind.result.dim * sub.order() == g.order * u.dim);
      }
    }
  }
}

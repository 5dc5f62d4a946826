#include "helpers.hpp"

using namespace qmt;

namespace {

const char* const kInstances[] = {"A_z3_by_z2", "B_z2sq_by_swap", "C_dual_s3_by_conj", "E_z3sq_by_z2sq",
                                  "F_d4_by_inner"};

struct Sample {
  Subgroup sub;
  Corep u;  // csr corep over G x| sub
};

// Random (sub, csr) pairs with sub in the isotropy family and sub inside the stabilizer.
std::vector<Sample> samples(const SemidirectInstance& inst, int count, std::uint64_t seed) {
  std::vector<Subgroup> fam;
  for (const auto& s : general_isotropy_family(inst.irr_action())) fam.push_back(s);
  fam.push_back(trivial_subgroup(*inst.lambda()));
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  const int nx = static_cast<int>(inst.base_irreps().size());
  while (static_cast<int>(out.size()) < count) {
    const Subgroup& sub = fam[rng() % fam.size()];
    int x = static_cast<int>(rng() % nx);
    if (!is_subset(sub, stabilizer(inst.irr_action(), x))) continue;
    auto ps = parameters(inst, x, sub);
    out.push_back({sub, csr_corep(inst, ps[rng() % ps.size()])});
  }
  return out;
}

}  // namespace

TEST_CASE("induced characters: coset formula, full formula and trace agree") {
  for (const char* name : kInstances) {
    CAPTURE(name);
    auto inst = load(name);
    for (const auto& c : classify(*inst)) {
      auto p = inst->product(c.param.lambda0);
      InducedCharacter ch = induced_character(*p, c.csr);
      CHECK((ch.full - c.character).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(c.character.size() == inst->full()->hopf->dim);
    }
  }
}

TEST_CASE("Mackey intertwiner formula matches the induced coreps on random pairs") {
  for (const char* name : kInstances) {
    CAPTURE(name);
    auto inst = load(name);
    auto s = samples(*inst, 8, 7);
    for (size_t i = 0; i + 1 < s.size(); i += 2) {
      auto p1 = inst->product(s[i].sub), p2 = inst->product(s[i + 1].sub);
      Corep a = induce(*p1, s[i].u).result, b = induce(*p2, s[i + 1].u).result;
      CHECK(ind_mor_dim(*p1, s[i].u, *p2, s[i + 1].u) == mor_dim(a, b));
      CHECK(ind_mor_dim(*p1, s[i].u, *p1, s[i].u) == mor_dim(a, a));
    }
  }
}

TEST_CASE("Mackey irreducibility criterion matches the direct check") {
  for (const char* name : kInstances) {
    CAPTURE(name);
    auto inst = load(name);
    for (const auto& smp : samples(*inst, 6, 11)) {
      auto p = inst->product(smp.sub);
      CHECK(mackey_irreducible(*p, smp.u) == (mor_dim(induce(*p, smp.u).result, induce(*p, smp.u).result) == 1));
    }
  }
}

TEST_CASE("incidence numbers are invariant under a common left translation") {
  for (const char* name : {"A_z3_by_z2", "B_z2sq_by_swap", "E_z3sq_by_z2sq"}) {
    CAPTURE(name);
    auto inst = load(name);
    const auto& g = *inst->lambda();
    auto cl = classify(*inst);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& w1 = cl[rng() % cl.size()];
      const auto& w2 = cl[rng() % cl.size()];
      const auto& w3 = cl[rng() % cl.size()];
      int r1 = static_cast<int>(rng() % g.order), r2 = static_cast<int>(rng() % g.order);
      int r3 = static_cast<int>(rng() % g.order), t = static_cast<int>(rng() % g.order);
      CHECK(incidence(*inst, w1, w2, w3, r1, r2, r3) ==
            incidence(*inst, w1, w2, w3, g.mul(t, r1), g.mul(t, r2), g.mul(t, r3)));
    }
  }
}

TEST_CASE("conjugation is an involution preserving dimension") {
  for (const char* name : kInstances) {
    CAPTURE(name);
    auto inst = load(name);
    auto cl = classify(*inst);
    auto inv = conjugation_involution(*inst, cl);
    for (size_t i = 0; i < cl.size(); ++i) {
      CHECK(inv[inv[i]] == static_cast<int>(i));
      CHECK(cl[inv[i]].dim == cl[i].dim);
    }
  }
}

TEST_CASE("fusion: Frobenius reciprocity and dimension count") {
  for (const char* name : {"A_z3_by_z2", "B_z2sq_by_swap", "C_dual_s3_by_conj"}) {
    CAPTURE(name);
    auto inst = load(name);
    auto cl = classify(*inst);
    FusionTable t = fusion(*inst, cl);
    CHECK(t.agree());
    const size_t n = cl.size();
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        int total = 0;
        for (size_t a = 0; a < n; ++a) total += t.formula[a][b][c] * cl[a].dim;
        CHECK(total == cl[b].dim * cl[c].dim);
      }
  }
}

TEST_CASE("reduce_grp recovers randomly scrambled generalized parameters") {
  auto inst = load("F_d4_by_inner");
  const auto& lam = inst->lambda();
  auto cl = classify(*inst);
  std::mt19937_64 rng(5);
  int rounds = 0;
  for (const auto& c : cl) {
    const RepParameter& p = c.param;
    // multiplicity spaces: irreducible projective reps for a few cocycles
    std::vector<ProjectiveRep> mults = irreducible_projreps(lam, p.lambda0, trivial_cochain2(lam, p.lambda0), 1);
    for (auto& v : irreducible_projreps(lam, p.lambda0, p.V.cocycle, 1)) mults.push_back(v);
    for (const auto& V1 : mults) {
      const int m = V1.dim, d0 = p.u.dim;
      Mat q = random_unitary(m * d0, rng());
      Corep stacked = p.u;
      for (int k = 1; k < m; ++k) stacked = direct_sum(stacked, p.u);
      GRParameter g{conjugate_by(stacked, q), transport(tensor(V1, p.V), q), tensor(contragredient(V1), p.v),
                    p.lambda0};
      validate_parameter(*inst, g, false);
      auto red = reduce_grp(*inst, g, p.u, p.V);
      REQUIRE(red.has_value());
      Corep a = csr_corep(*inst, g), b = csr_corep(*inst, *red);
      CHECK(a.dim == b.dim);
      CHECK(mor_dim(a, b) == param_mor_dim(*inst, *red, *red));
      ++rounds;
    }
  }
  CHECK(rounds >= 10);
}

TEST_CASE("translated parameters induce equivalent representations") {
  for (const char* name : {"A_z3_by_z2", "C_dual_s3_by_conj", "E_z3sq_by_z2sq", "F_d4_by_inner"}) {
    CAPTURE(name);
    auto inst = load(name);
    const auto& g = *inst->lambda();
    const auto& hf = *inst->full()->hopf;
    for (const auto& c : classify(*inst)) {
      auto p = inst->product(c.param.lambda0);
      for (int r = 0; r < g.order; ++r) {
        Corep ru = act_corep(*p, r, c.csr);
        auto pr = inst->product(conjugate_subgroup(g, c.param.lambda0, r).sub);
        Vec chi = character(induce(*pr, ru).result);
        CHECK((chi - c.character).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(round_int(hf.h(hf.mul(hf.adj(chi), c.character)), "pairing") == 1);
      }
    }
  }
}

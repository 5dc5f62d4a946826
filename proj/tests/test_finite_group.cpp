#include "helpers.hpp"

using namespace qmt;

TEST_CASE("from_table validates") {
  auto z3 = cyclic(3);
  CHECK(z3.order == 3);
  CHECK(z3.identity == 0);
  CHECK(z3.inv[1] == 2);
  CHECK(s3().order == 6);
  std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), Error);
  std::vector<std::vector<int>> nonassoc{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  try {
    FiniteGroup::from_table(nonassoc);
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
}

TEST_CASE("conjugate subgroups and intersections in S3") {
  auto g = s3();
  int t12 = s3_index({1, 0, 2}), t13 = s3_index({2, 1, 0}), t23 = s3_index({0, 2, 1});
  Subgroup h = make_subgroup(g, {0, t12});
  auto c = conjugate_subgroup(g, h, t13);
  CHECK(c.sub.elems == std::vector<int>{0, t23});
  CHECK(conjugate_subgroup(g, whole_group(g), t13).sub == whole_group(g));
  CHECK(conjugate_intersection(g, {h, h}, {0, t13}).order() == 1);
  CHECK(conjugate_intersection(g, {h}, {0}) == h);
  CHECK(left_cosets(g, h).size() == 3);
  CHECK(left_cosets(g, whole_group(g)).front().front() == 0);
  CHECK(left_cosets(g, trivial_subgroup(g)).size() == 6);
  CHECK_THROWS_AS(make_subgroup(g, {0, t12, t13}), Error);
  CHECK(generated_subgroup(g, {t12, t13}).order() == 6);
}

TEST_CASE("coset invariance of conjugate intersections") {
  auto g = s3();
  Subgroup h = make_subgroup(g, {0, s3_index({1, 0, 2})});
  Subgroup k = generated_subgroup(g, {s3_index({1, 2, 0})});
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s)
      for (int hh : h.elems)
        for (int kk : k.elems)
          CHECK(conjugate_intersection(g, {h, k}, {r, s}) == conjugate_intersection(g, {h, k}, {g.mul(r, hh), g.mul(s, kk)}));
}

TEST_CASE("orbits, stabilizers and general isotropy") {
  auto z2 = std::make_shared<FiniteGroup>(cyclic(2));
  GroupAction inv{z2, 3, {{0, 1, 2}, {0, 2, 1}}};
  inv.validate();
  CHECK(stabilizer(inv, 0).order() == 2);
  CHECK(stabilizer(inv, 1).order() == 1);
  CHECK(orbit(inv, 1) == std::vector<int>{1, 2});
  CHECK(orbits(inv).size() == 2);
  auto giso = general_isotropy_family(inv);
  CHECK(giso.size() == 2);
  GroupAction triv{z2, 3, {{0, 1, 2}, {0, 1, 2}}};
  CHECK(general_isotropy_family(triv).size() == 1);

  auto g = std::make_shared<FiniteGroup>(s3());
  GroupAction reg{g, 6, g->mult};
  reg.validate();
  for (int x = 0; x < 6; ++x) CHECK(orbit(reg, x).size() * stabilizer(reg, x).order() == 6);
  CHECK(general_isotropy_family(reg).count(trivial_subgroup(*g)) == 1);
}

TEST_CASE("automorphism check") {
  auto z3 = cyclic(3);
  CHECK(is_automorphism(z3, {0, 2, 1}));
  CHECK_FALSE(is_automorphism(z3, {1, 0, 2}));
}

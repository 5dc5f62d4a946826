#include "helpers.hpp"

using namespace qmt;

TEST_CASE("ordinary irreducibles of S3") {
  auto g = std::make_shared<FiniteGroup>(s3());
  Subgroup all = whole_group(*g);
  auto irr = irreducible_projreps(g, all, trivial_cochain2(g, all), 1);
  REQUIRE(irr.size() == 3);
  CHECK(irr[0].dim == 1);
  CHECK(irr[1].dim == 1);
  CHECK(irr[2].dim == 2);
  for (size_t i = 0; i < irr.size(); ++i)
    for (size_t j = 0; j < irr.size(); ++j) CHECK(proj_mor_dim(irr[i], irr[j]) == (i == j ? 1 : 0));
}

TEST_CASE("twisted Klein group has a single 2-dim irreducible") {
  auto k = std::make_shared<FiniteGroup>(klein());
  ProjectiveRep v = pauli(k);
  auto irr = irreducible_projreps(k, whole_group(*k), v.cocycle, 3);
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].dim == 2);
  CHECK(proj_mor_dim(irr[0], v) == 1);
  ProjectiveRep c = contragredient(v);
  CHECK(distance(product(c.cocycle, v.cocycle), trivial_cochain2(k, whole_group(*k))) < 1e-12);
  ProjectiveRep t = tensor(v, c);
  CHECK(t.dim == 4);
  CHECK(distance(t.cocycle, trivial_cochain2(k, whole_group(*k))) < 1e-12);
  CHECK(projrep_residual(t) < 1e-12);
}

TEST_CASE("transitional maps and rescaling") {
  auto k = std::make_shared<FiniteGroup>(klein());
  ProjectiveRep v = pauli(k);
  Cochain1 b = trivial_cochain1(k, whole_group(*k));
  b.b[1] = cplx(0, 1);
  b.b[3] = -1.0;
  ProjectiveRep w = rescale(b, v);
  Cochain1 got = transitional_map(v, w);
  for (int r = 0; r < 4; ++r) CHECK(std::abs(got(r) - b(r)) < 1e-12);
  CHECK(projrep_residual(w) < 1e-12);
  CHECK_THROWS_AS(proj_mor_dim(v, w), Error);
  ProjectiveRep moved = transport(v, random_unitary(2, 5));
  CHECK(proj_mor_dim(v, moved) == 1);
}

TEST_CASE("non-projective matrices are rejected") {
  auto z2 = std::make_shared<FiniteGroup>(cyclic(2));
  Mat a(2, 2);
  a << 0, 1, 1, 0;
  std::vector<Mat> m{Mat::Identity(2, 2), random_unitary(2, 9)};
  CHECK_THROWS_AS(make_projrep(z2, whole_group(*z2), m), Error);
  m[1] = a;
  CHECK(make_projrep(z2, whole_group(*z2), m).dim == 2);
}

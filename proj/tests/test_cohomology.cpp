#include "helpers.hpp"

using namespace qmt;

TEST_CASE("coboundaries are cocycles and can be solved") {
  auto g = std::make_shared<FiniteGroup>(s3());
  Subgroup all = whole_group(*g);
  Cochain1 b = trivial_cochain1(g, all);
  const double pi = std::acos(-1.0);
  for (int r = 1; r < 6; ++r) b.b[r] = std::polar(1.0, 2 * pi * (r % 3) / 6.0);
  Cochain2 w = coboundary(b);
  CHECK(is_cocycle(w).ok);
  auto sol = try_solve_coboundary(w, 6);
  REQUIRE(sol.has_value());
  CHECK(distance(coboundary(*sol), w) < 1e-9);
}

TEST_CASE("the Pauli cocycle on the Klein group is not a coboundary") {
  auto k = std::make_shared<FiniteGroup>(klein());
  ProjectiveRep v = pauli(k);
  CHECK(is_cocycle(v.cocycle).ok);
  // antisymmetry omega(r,s)/omega(s,r) = -1 survives any rescaling
  CHECK(std::abs(v.cocycle(1, 2) / v.cocycle(2, 1) + 1.0) < 1e-12);
  CHECK_FALSE(try_solve_coboundary(v.cocycle, 4).has_value());
  CHECK(try_solve_coboundary(product(v.cocycle, v.cocycle), 4).has_value());
}

TEST_CASE("restriction and conjugation pullback") {
  auto g = std::make_shared<FiniteGroup>(s3());
  Cochain2 w = trivial_cochain2(g, whole_group(*g));
  Subgroup h = make_subgroup(*g, {0, s3_index({1, 0, 2})});
  Cochain2 r = restrict(w, h);
  CHECK(r.dom == h);
  Cochain2 p = pullback_adj(r, s3_index({2, 1, 0}));
  CHECK(p.dom.elems == std::vector<int>{0, s3_index({0, 2, 1})});
  CHECK(is_cocycle(p).ok);
  CHECK(distance(product(w, inverse(w)), trivial_cochain2(g, whole_group(*g))) < 1e-15);
}

#include "helpers.hpp"

using namespace qmt;

TEST_CASE("function and group algebras satisfy the axioms") {
  auto g = s3();
  for (auto h : {function_algebra(g), group_algebra(g)}) {
    AxiomReport r = verify_axioms(*h);
    CHECK(r.ok);
    CHECK(r.worst() < 1e-12);
    CHECK((haar_solve(*h) - h->haar).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_kac(*h));
  }
}

TEST_CASE("a broken comultiplication is detected") {
  auto spec = parse_instance_file(corpus("bad_comult"));
  AxiomReport r = verify_axioms(*spec.base);
  CHECK_FALSE(r.ok);
  CHECK_THROWS_AS(make_instance(spec), Error);
}

TEST_CASE("dual algebra blocks") {
  auto g = s3();
  auto fa = function_algebra(g);
  CHECK(dual_blocks(*fa, 1).dims == std::vector<int>{1, 1, 2});
  auto ga = group_algebra(g);
  CHECK(dual_blocks(*ga, 1).dims == std::vector<int>(6, 1));
  auto b = dual_blocks(*fa, 1);
  auto n = dual_fusion(*fa, b);
  // 2 x 2 = 1 + sgn + 2
  CHECK(n[0][2][2] == 1);
  CHECK(n[1][2][2] == 1);
  CHECK(n[2][2][2] == 1);
}

TEST_CASE("actions must be automorphisms and antihomomorphic") {
  auto z3 = cyclic(3);
  auto z2 = cyclic(2);
  auto h = function_algebra(z3);
  auto a = action_function_algebra(*h, z3, z2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(a.size() == 2);
  CHECK(qaut_residual(*h, a[1]) < 1e-12);
  CHECK_THROWS_AS(action_function_algebra(*h, z3, z2, {{0, 1, 2}, {1, 0, 2}}), Error);
  CHECK_THROWS_AS(action_raw(*h, z2, {Mat::Identity(3, 3), Mat::Identity(3, 3) * 2.0}), Error);
}

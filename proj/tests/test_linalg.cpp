#include "helpers.hpp"

using namespace qmt;

TEST_CASE("kron and round_int") {
  Mat a = Mat::Identity(2, 2), b(1, 2);
  b << 1, 2;
  Mat k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(1, 3) == cplx(2.0));
  CHECK(round_int(2.96, "x") == 3);
  CHECK_THROWS_AS(round_int(2.5, "x"), Error);
  CHECK_THROWS_AS(round_int(cplx(1.0, 0.5), "x"), Error);
}

TEST_CASE("nullspace of a rank-one matrix") {
  Mat a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  Mat ns = nullspace(a);
  CHECK(ns.cols() == 2);
  CHECK(max_abs(a * ns) < 1e-12);
  CHECK(max_abs(ns.adjoint() * ns - Mat::Identity(2, 2)) < 1e-12);
}

TEST_CASE("intertwiners between conjugate families") {
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  Mat u = random_unitary(2, 7);
  std::vector<Mat> a{x, z}, b{u * x * u.adjoint(), u * z * u.adjoint()};
  auto t = solve_intertwiners(a, b);
  REQUIRE(t.size() == 1);
  Mat s = t[0] * std::sqrt(2.0);
  CHECK(max_abs(s * x - b[0] * s) < 1e-10);
  CHECK(max_abs(s.adjoint() * s - Mat::Identity(2, 2)) < 1e-10);
  // T x = z T and T z = z T force T (x - z) = 0 with x - z invertible
  std::vector<Mat> c{z, z};
  CHECK(solve_intertwiners(a, c).empty());
}

TEST_CASE("split_family separates inequivalent blocks and groups equivalent ones") {
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  auto block = [](const Mat& p, const Mat& q) {
    Mat m = Mat::Zero(p.rows() + q.rows(), p.rows() + q.rows());
    m.topLeftCorner(p.rows(), p.rows()) = p;
    m.bottomRightCorner(q.rows(), q.rows()) = q;
    return m;
  };
  Mat one = Mat::Identity(1, 1), mone = -one;
  Mat u = random_unitary(5, 3);
  std::vector<Mat> gens;
  gens.push_back(u * block(block(x, x), one) * u.adjoint());
  gens.push_back(u * block(block(z, z), mone) * u.adjoint());
  FamilySplit fs = split_family(gens, 11);
  CHECK(fs.pieces.size() == 3);
  CHECK(fs.nclasses == 2);
}

TEST_CASE("eigenspaces cluster repeated eigenvalues") {
  Mat h = Mat::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0 + 1e-9;
  h(2, 2) = 2.0;
  auto sp = eigenspaces(h);
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].cols() == 2);
}

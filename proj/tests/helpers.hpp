#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "doctest.h"
#include "qmackey/errors.hpp"
#include "qmackey/instance_io.hpp"
#include "qmackey/mackey_fusion.hpp"

namespace qmt {

using namespace qm;

inline std::string corpus(const std::string& name) { return std::string(QM_CORPUS) + "/" + name + ".json"; }

inline std::unique_ptr<SemidirectInstance> load(const std::string& name) { return load_instance(corpus(name)); }

inline FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t);
}

// Klein four group, element a + 2b.
inline FiniteGroup klein() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::from_table(t);
}

// S3 as permutations of {0,1,2} in lexicographic order; composition (pq)(i) = p(q(i)).
inline std::vector<std::array<int, 3>> s3_elems() {
  std::vector<std::array<int, 3>> e;
  std::array<int, 3> p{0, 1, 2};
  do e.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return e;
}

inline FiniteGroup s3() {
  auto e = s3_elems();
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{e[i][e[j][0]], e[i][e[j][1]], e[i][e[j][2]]};
      t[i][j] = static_cast<int>(std::find(e.begin(), e.end(), c) - e.begin());
    }
  return FiniteGroup::from_table(t);
}

inline int s3_index(std::array<int, 3> p) {
  auto e = s3_elems();
  return static_cast<int>(std::find(e.begin(), e.end(), p) - e.begin());
}

inline std::vector<int> sorted_dims(const std::vector<ClassifiedIrr>& cl) {
  std::vector<int> d;
  for (const auto& c : cl) d.push_back(c.dim);
  std::sort(d.begin(), d.end());
  return d;
}

// Pauli-type cocycle on the Klein group from the projective rep a + 2b -> X^a Z^b.
inline ProjectiveRep pauli(GroupPtr k) {
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  std::vector<Mat> m(4);
  m[0] = Mat::Identity(2, 2);
  m[1] = x;
  m[2] = z;
  m[3] = x * z;
  return make_projrep(k, whole_group(*k), m);
}

inline Mat random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ() * Mat::Identity(n, n);
}

// All parameters (u_x, V, v) over sub, one per irreducible v.
inline std::vector<RepParameter> parameters(const SemidirectInstance& inst, int x, const Subgroup& sub) {
  const Corep& u = inst.base_irreps()[x];
  ProjectiveRep V = covariant_projective(inst, u, sub);
  std::vector<RepParameter> out;
  for (auto& v : irreducible_projreps(inst.lambda(), sub, inverse(V.cocycle), inst.seed)) out.push_back({u, V, v, sub});
  return out;
}

inline int first_with_orbit(const SemidirectInstance& inst, size_t size) {
  int x = 0;
  while (orbit(inst.irr_action(), x).size() != size) ++x;
  return x;
}

}  // namespace qmt

/** @file cohomology.hpp
 *  @brief Circle-valued 1- and 2-cochains on a subgroup of a finite group.
 */
#pragma once

#include <optional>

#include "qmackey/finite_group.hpp"
#include "qmackey/linalg.hpp"

namespace qm {

/// omega(r,s) for r,s in dom; stored over the parent indices (1 outside dom).
struct Cochain2 {
  GroupPtr group;
  Subgroup dom;
  std::vector<cplx> w;

  cplx operator()(int r, int s) const { return w[static_cast<size_t>(r) * group->order + s]; }
  cplx& at(int r, int s) { return w[static_cast<size_t>(r) * group->order + s]; }
};

struct Cochain1 {
  GroupPtr group;
  Subgroup dom;
  std::vector<cplx> b;

  cplx operator()(int r) const { return b[r]; }
};

Cochain2 trivial_cochain2(GroupPtr g, const Subgroup& dom);
Cochain1 trivial_cochain1(GroupPtr g, const Subgroup& dom);
/// Checks unit modulus and normalization; throws ValidationError.
void validate(const Cochain2& w);

struct CocycleReport {
  bool ok = true;
  double residual = 0.0;
  int r = -1, s = -1, t = -1;  // worst triple
};

CocycleReport is_cocycle(const Cochain2& w);
Cochain2 coboundary(const Cochain1& b);
/// Looks for b with values in m-th roots of unity and coboundary(b) = w.
std::optional<Cochain1> try_solve_coboundary(const Cochain2& w, int m);

Cochain2 inverse(const Cochain2& w);
Cochain2 product(const Cochain2& a, const Cochain2& b);
Cochain2 restrict(const Cochain2& w, const Subgroup& sub);
/// (s,t) -> w(r^-1 s r, r^-1 t r) on r dom r^-1.
Cochain2 pullback_adj(const Cochain2& w, int r);
double distance(const Cochain2& a, const Cochain2& b);

}  // namespace qm

/** @file projective_rep.hpp
 *  @brief Unitary projective representations of subgroups of a finite group.
 */
#pragma once

#include "qmackey/cohomology.hpp"

namespace qm {

/// V(r) V(s) = cocycle(r,s) V(rs) on dom; mats are indexed by parent elements.
struct ProjectiveRep {
  GroupPtr group;
  Subgroup dom;
  int dim = 0;
  std::vector<Mat> mats;
  Cochain2 cocycle;

  const Mat& operator()(int r) const { return mats[r]; }
  /// The matrices over dom, in dom order.
  std::vector<Mat> family() const;
};

/// Character values over the parent, zero outside dom.
using ProjChar = std::vector<cplx>;

Cochain2 cocycle_of(GroupPtr g, const Subgroup& dom, const std::vector<Mat>& mats);
/// Validates V(e) = 1 and unitarity, then attaches the cocycle.
ProjectiveRep make_projrep(GroupPtr g, const Subgroup& dom, std::vector<Mat> mats);
ProjectiveRep trivial_projrep(GroupPtr g, const Subgroup& dom, int dim = 1);

ProjectiveRep rescale(const Cochain1& b, const ProjectiveRep& v);
ProjChar proj_character(const ProjectiveRep& v);
/// dim Mor(v1, v2); the character and nullspace computations must agree.
int proj_mor_dim(const ProjectiveRep& v1, const ProjectiveRep& v2);
/// Pairwise-inequivalent irreducible w-projective representations, canonically sorted.
std::vector<ProjectiveRep> irreducible_projreps(GroupPtr g, const Subgroup& dom, const Cochain2& w,
                                                std::uint64_t seed);

/// (v x V)(r) = v(r) (x) V(r), v acting on the first factor.
ProjectiveRep tensor(const ProjectiveRep& v, const ProjectiveRep& w);
ProjectiveRep restrict(const ProjectiveRep& v, const Subgroup& sub);
/// V^c(r) = conj(V(r)).
ProjectiveRep contragredient(const ProjectiveRep& v);
ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b);
/// T V(r) T^* for a unitary T.
ProjectiveRep transport(const ProjectiveRep& v, const Mat& t);
/// (r.V)(r s r^-1) = V(s) on r dom r^-1.
ProjectiveRep translate(const ProjectiveRep& v, int r);
/// The b with v2 = b v1.
Cochain1 transitional_map(const ProjectiveRep& v1, const ProjectiveRep& v2);

/// Max residual of the projective law and unitarity.
double projrep_residual(const ProjectiveRep& v);

}  // namespace qm

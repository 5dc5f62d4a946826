/** @file mackey_fusion.hpp
 *  @brief Representation parameters (u, V, v), classification, conjugates, incidence numbers and fusion rules.
 */
#pragma once

#include <optional>

#include "qmackey/induction.hpp"

namespace qm {

/// (u, V, v) over lambda0.  With u reducible this is a generalized parameter.
struct RepParameter {
  Corep u;
  ProjectiveRep V;  // V(r0) in Mor(r0.u, u)
  ProjectiveRep v;  // cocycle opposite to V's
  Subgroup lambda0;
};
using GRParameter = RepParameter;

/// Checks covariance and opposing cocycles; with `irreducible` also that u is irreducible.
void validate_parameter(const SemidirectInstance& inst, const RepParameter& p, bool irreducible);

/// V(r0) spans Mor(r0.u, u), gauge: first entry above 1e-8 (row-major) real positive.
ProjectiveRep covariant_projective(const SemidirectInstance& inst, const Corep& u, const Subgroup& lambda0);

/// join(id_K (x) u, v x V) over G x| lambda0.
Corep csr_corep(const SemidirectInstance& inst, const RepParameter& p);

/// dim Mor(csr(p1), csr(p2)) through the transitional map; cross-checked against the coreps.
int param_mor_dim(const SemidirectInstance& inst, const RepParameter& p1, const RepParameter& p2);

struct ClassifiedIrr {
  RepParameter param;
  int orbit_rep = -1;        // index of u among the base irreps
  int proj_index = -1;       // index of v among the irreducible projective reps
  bool cocycle_trivial = true;
  Corep csr;                 // over G x| lambda0
  Corep induced;             // over G x| L
  int dim = 0;
  Vec character;
};

std::vector<ClassifiedIrr> classify(const SemidirectInstance& inst);

/// (ubar, V^c, v^c).
RepParameter conjugate_parameter(const SemidirectInstance& inst, const RepParameter& p);
/// Index j with W_j equivalent to the conjugate of W_i, from the conjugate corep.
std::vector<int> conjugation_involution(const SemidirectInstance& inst, const std::vector<ClassifiedIrr>& irrs);

/// Reduction of a generalized parameter along (u0, V0); empty when u0 does not occur in g.u.
std::optional<RepParameter> reduce_grp(const SemidirectInstance& inst, const GRParameter& g, const Corep& u0,
                                       const ProjectiveRep& V0);

/// Incidence number of (r1, r2, r3); the character and projective routes must agree.
int incidence(const SemidirectInstance& inst, const ClassifiedIrr& w1, const ClassifiedIrr& w2,
              const ClassifiedIrr& w3, int r1, int r2, int r3);

using Cube = std::vector<std::vector<std::vector<int>>>;

struct FusionTable {
  Cube formula;  // coset sum of incidence numbers
  Cube brute;    // round(h(conj(chi1) chi2 chi3))
  Cube dual;     // dual-algebra decomposition
  bool frobenius_ok = true;
  bool agree() const { return formula == brute && formula == dual && frobenius_ok; }
};

/// N[w1][w2][w3] = dim Mor(W1, W2 x W3) by three routes; compare with agree().
FusionTable fusion(const SemidirectInstance& inst, const std::vector<ClassifiedIrr>& irrs, int jobs = 1,
                   bool check_frobenius = true);

/// Position of each classified irrep among the dual-algebra blocks (by character).
std::vector<int> match_dual_blocks(const std::vector<ClassifiedIrr>& irrs, const DualBlocks& blocks);

}  // namespace qm

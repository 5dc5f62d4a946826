/** @file induction.hpp
 *  @brief Induction from G x| L0 to G x| L, induced characters, and Mackey's criterion.
 */
#pragma once

#include "qmackey/semidirect.hpp"

namespace qm {

struct InducedRep {
  Corep source;
  Corep result;   // corep of the full product
  Mat isometry;   // K -> l2(L) (x) H, index r * dim(source) + a
};

/// Requires u to be a corep of p (a principal subgroup product).
InducedRep induce(const Product& p, const Corep& u);

struct InducedCharacter {
  Vec full;   // |L0|^-1 sum over all r
  Vec coset;  // sum over left coset representatives
};
/// Both forms; throws FormulaMismatch if they differ by more than tol().build.
InducedCharacter induced_character(const Product& p, const Corep& u);

/// r.U restricted to the product over `to` (a subgroup of r L0 r^-1).
Corep translate_restrict(const Product& p, const Corep& u, int r, const Product& to);

/// Intertwiner dimension of the induced coreps from the double coset sum; cross-checked
/// against the direct computation (OracleDisagreement).
int ind_mor_dim(const Product& pt, const Corep& u, const Product& px, const Corep& w);
/// The double coset sum alone.
int ind_mor_dim_formula(const Product& pt, const Corep& u, const Product& px, const Corep& w);

/// For irreducible U: true iff no r, s with r^-1 s outside L0 has a nonzero intertwiner.
bool mackey_irreducible(const Product& p, const Corep& u);

}  // namespace qm

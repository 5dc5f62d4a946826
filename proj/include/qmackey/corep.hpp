/** @file corep.hpp
 *  @brief Unitary corepresentations u = sum_k C_k (x) e_k of a HopfData.
 *
 *  A corep is stored by its coefficient matrices C_k, so the (i,j) entry
 *  is u_ij = sum_k C_k(i,j) e_k.  Intertwiners T in Mor(u,w) are exactly
 *  the T with T C_k = D_k T for all k.
 */
#pragma once

#include "qmackey/hopf.hpp"

namespace qm {

struct Corep {
  HopfPtr parent;
  int dim = 0;
  std::vector<Mat> coef;

  Vec entry(int i, int j) const;
};

Corep trivial_corep(HopfPtr h);
/// Builds from entries u_ij given as vectors.
Corep corep_from_entries(HopfPtr h, const std::vector<std::vector<Vec>>& entries);

struct CorepReport {
  double comodule = 0.0, counit = 0.0, unitarity = 0.0;
  bool ok() const;
};
CorepReport verify_corep(const Corep& u);

Corep tensor(const Corep& u, const Corep& w);
Corep direct_sum(const Corep& u, const Corep& w);
/// Matrix product over A: (uw)_ij = sum_k u_ik w_kj.
Corep matmul(const Corep& u, const Corep& w);
/// (u^*)_ij = (u_ji)^*.
Corep adjoint(const Corep& u);
/// T u T^* for an isometry or unitary T (coefficientwise).
Corep conjugate_by(const Corep& u, const Mat& t);
Vec character(const Corep& u);

/// dim Mor(u,w) by Haar and by nullspace; throws OracleDisagreement on mismatch.
int mor_dim(const Corep& u, const Corep& w);
std::vector<Mat> intertwiner_basis(const Corep& u, const Corep& w);
/// round(h(chi_u^* chi_w)) only.
int mor_dim_haar(const Corep& u, const Corep& w);

struct Conjugate {
  Corep ubar;
  Mat rho;
};
/// u^c_ij = S(u_ji) = (u_ij)^*, rho in Mor(u, u^cc) positive with tr rho = tr rho^-1.
Conjugate conjugate(const Corep& u);

struct IrrFactor {
  Corep irrep;
  int multiplicity = 0;
  std::vector<Mat> isometries;  // embeddings of each copy
};
std::vector<IrrFactor> irr_decompose(const Corep& u, std::uint64_t seed);

/// Pairwise-inequivalent irreducible coreps, sorted by dimension then character.
std::vector<Corep> irr_enumerate(HopfPtr h, std::uint64_t seed);
/// The regular corep built on a Haar-orthonormal basis.
Corep regular_corep(HopfPtr h);

/// r.u: entries alpha*_{r^-1}(u_ij); alpha_inv is the matrix of alpha*_{r^-1}.
Corep act(const Corep& u, const Mat& alpha_inv);

/// Index of the representative equivalent to u (by character), or -1.
int find_equivalent(const Corep& u, const std::vector<Corep>& reps);

/// Induced action of the acting group on representative indices.
GroupAction irr_action(GroupPtr lambda, const std::vector<Mat>& alpha_star, const std::vector<Corep>& reps);

}  // namespace qm

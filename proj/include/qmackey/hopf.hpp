/** @file hopf.hpp
 *  @brief Finite-dimensional Hopf *-algebras given by structure constants.
 *
 *  Elements are coefficient vectors in a fixed basis e_0..e_{d-1}.
 */
#pragma once

#include <memory>
#include <string>

#include "qmackey/finite_group.hpp"
#include "qmackey/linalg.hpp"

namespace qm {

struct HopfData {
  int dim = 0;
  std::vector<Mat> left;     // left[i](c,j): coefficient of e_c in e_i e_j
  Vec unit;
  std::vector<Mat> comult;   // comult[i](j,k): coefficient of e_j (x) e_k in Delta(e_i)
  Vec counit;
  Mat antipode;              // column j holds S(e_j)
  Mat star;                  // column j holds e_j^*; extended antilinearly
  Vec haar;
  bool has_haar = false;

  struct Term {
    int a, b;
    cplx v;
  };
  // sparse caches filled by finalize()
  std::vector<std::vector<std::pair<int, cplx>>> prod;  // prod[i*d+j] = e_i e_j
  std::vector<std::vector<Term>> delta;                 // nonzeros of comult[i]

  void finalize();

  Vec mul(const Vec& a, const Vec& b) const;
  Mat Delta(const Vec& a) const;
  Vec S(const Vec& a) const { return antipode * a; }
  Vec adj(const Vec& a) const { return star * a.conjugate(); }
  cplx eps(const Vec& a) const { return (counit.transpose() * a)(0); }
  cplx h(const Vec& a) const { return (haar.transpose() * a)(0); }
  Vec basis(int i) const { return Vec::Unit(dim, i); }
  /// Product in A (x) A of coefficient matrices.
  Mat mul2(const Mat& x, const Mat& y) const;
};

using HopfPtr = std::shared_ptr<const HopfData>;

HopfPtr function_algebra(const FiniteGroup& g);
HopfPtr group_algebra(const FiniteGroup& g);

struct AxiomReport {
  std::vector<std::pair<std::string, double>> residuals;
  bool ok = true;
  double worst() const;
};

AxiomReport verify_axioms(const HopfData& h);
/// The invariant state from the linear invariance system; throws NoUniqueHaar.
Vec haar_solve(const HopfData& h);
bool is_kac(const HopfData& h);

/// A quantum automorphism is stored as its d x d matrix (column j = alpha(e_j)).
double qaut_residual(const HopfData& h, const Mat& alpha);

/// alpha*_r(delta_g) = delta_{alpha_r^-1(g)} from automorphisms alpha_r of G.
std::vector<Mat> action_function_algebra(const HopfData& h, const FiniteGroup& base, const FiniteGroup& lambda,
                                         const std::vector<std::vector<int>>& autos);
/// alpha*_r(lambda_g) = lambda_{beta_{r^-1}(g)} from automorphisms beta_r of Gamma.
std::vector<Mat> action_group_algebra(const HopfData& h, const FiniteGroup& base, const FiniteGroup& lambda,
                                      const std::vector<std::vector<int>>& autos);
/// Checks explicit matrices alpha*_r; throws NotAutomorphism / NotAntihomomorphism.
std::vector<Mat> action_raw(const HopfData& h, const FiniteGroup& lambda, std::vector<Mat> mats);

/// The dual algebra: phi_i phi_j = sum_k comult[k](i,j) phi_k, unit = counit.
struct DualAlgebra {
  int dim = 0;
  std::vector<Mat> left;
  Vec unit;
};
DualAlgebra dual_algebra(const HopfData& h);

/// Simple blocks of the dual algebra.
struct DualBlocks {
  std::vector<int> dims;
  std::vector<Vec> idempotents;  // minimal central idempotents in the dual
  std::vector<Vec> characters;   // corresponding characters, as elements of A
};
DualBlocks dual_blocks(const HopfData& h, std::uint64_t seed);
/// N[i][j][k] = multiplicity of block i in block j (x) block k.
std::vector<std::vector<std::vector<int>>> dual_fusion(const HopfData& h, const DualBlocks& b);

}  // namespace qm

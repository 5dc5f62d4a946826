#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace qm {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Numerical thresholds shared by every module.
struct Tolerances {
  double build = 1e-12;    // exact-by-construction identities
  double verify = 1e-9;    // axiom and invariant checks
  double accept = 1e-6;    // scalar extraction, gauge/cocycle matching
  double cluster = 1e-7;   // eigenvalue clustering and nullspace cutoff
  double int_window = 0.1; // integer recovery window
  std::uint64_t seed = 20240601;
};

Tolerances& tol();

Mat kron(const Mat& a, const Mat& b);

/// Rounds x to the nearest integer; throws NotInteger outside the window.
long long round_int(double x, const char* what);
long long round_int(cplx x, const char* what);

/// Orthonormal basis (as columns) of the null space of a.
Mat nullspace(const Mat& a);

/// All T (m x n) with T A_k = B_k T for every k; A_k are n x n, B_k are m x m.
/// Returned as a Frobenius-orthonormal list.
std::vector<Mat> solve_intertwiners(const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Eigenspaces of a Hermitian matrix, clustered at tol().cluster, in increasing eigenvalue order.
std::vector<Mat> eigenspaces(const Mat& herm);

/// Irreducible splitting of a *-closed family of n x n matrices.
struct FamilySplit {
  std::vector<Mat> pieces;   // isometries onto irreducible invariant subspaces
  std::vector<int> cls;      // equivalence class of each piece
  int nclasses = 0;
};

/// Numerical Artin-Wedderburn splitting via a random self-adjoint commutant element.
FamilySplit split_family(const std::vector<Mat>& gens, std::uint64_t seed);

/// Restriction of a family to the range of an isometry.
std::vector<Mat> compress(const std::vector<Mat>& gens, const Mat& iso);

double max_abs(const Mat& m);

/// Canonical sort key for a complex vector: values rounded to 1e-6.
std::vector<long long> rounded_key(const Vec& v);

}  // namespace qm

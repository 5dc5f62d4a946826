#include "qmackey/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

#include "qmackey/errors.hpp"

namespace qm {

Tolerances& tol() {
  static Tolerances t;
  return t;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotRootsOfUnity: return "NotRootsOfUnity";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::CocycleMismatch: return "CocycleMismatch";
    case ErrorKind::NotScalarRelated: return "NotScalarRelated";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotAntihomomorphism: return "NotAntihomomorphism";
    case ErrorKind::NoUniqueHaar: return "NoUniqueHaar";
    case ErrorKind::PeterWeylMismatch: return "PeterWeylMismatch";
    case ErrorKind::OrbitResolutionFailure: return "OrbitResolutionFailure";
    case ErrorKind::NoPositiveIntertwiner: return "NoPositiveIntertwiner";
    case ErrorKind::NotCovariant: return "NotCovariant";
    case ErrorKind::CovarianceFailure: return "CovarianceFailure";
    case ErrorKind::ProjectionNotInvariant: return "ProjectionNotInvariant";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::GaugeFailure: return "GaugeFailure";
    case ErrorKind::CompletenessFailure: return "CompletenessFailure";
    case ErrorKind::GramFailure: return "GramFailure";
    case ErrorKind::NonUnitaryExtraction: return "NonUnitaryExtraction";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

long long round_int(double x, const char* what) {
  double r = std::round(x);
  if (std::abs(x - r) > tol().int_window) {
    std::ostringstream os;
    os << what << " = " << x << " is not within " << tol().int_window << " of an integer";
    throw Error(ErrorKind::NotInteger, os.str());
  }
  return static_cast<long long>(r);
}

long long round_int(cplx x, const char* what) {
  if (std::abs(x.imag()) > tol().int_window) {
    std::ostringstream os;
    os << what << " has imaginary part " << x.imag();
    throw Error(ErrorKind::NotInteger, os.str());
  }
  return round_int(x.real(), what);
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Mat nullspace(const Mat& a) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Mat::Identity(n, n);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  double cut = tol().cluster * std::max(1.0, smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

std::vector<Mat> solve_intertwiners(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.empty()) throw Error(ErrorKind::ValidationError, "empty family");
  const Eigen::Index n = a[0].rows(), m = b[0].rows();
  const Eigen::Index N = n * m;
  // Normal equations of T -> {T A_k - B_k T}, with column-major vec(T).
  Mat aa = Mat::Zero(n, n), bb = Mat::Zero(m, m), g = Mat::Zero(N, N);
  for (size_t k = 0; k < a.size(); ++k) {
    bool za = a[k].isZero(0.0), zb = b[k].isZero(0.0);
    if (za && zb) continue;
    aa += a[k].conjugate() * a[k].transpose();
    bb += b[k].adjoint() * b[k];
    if (!za && !zb) {
      g -= kron(a[k].conjugate(), b[k]);
      g -= kron(a[k].transpose(), b[k].adjoint());
    }
  }
  g += kron(aa, Mat::Identity(m, m)) + kron(Mat::Identity(n, n), bb);
  g = (g + g.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  const auto& ev = es.eigenvalues();
  double lmax = ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0;
  double cut = 1e-10 * std::max(1.0, lmax);
  std::vector<Mat> out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cut) break;
    Vec v = es.eigenvectors().col(i);
    out.emplace_back(Eigen::Map<Mat>(v.data(), m, n));
  }
  return out;
}

std::vector<Mat> eigenspaces(const Mat& herm) {
  Mat h = (herm + herm.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Mat> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > tol().cluster * scale) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

std::vector<Mat> compress(const std::vector<Mat>& gens, const Mat& iso) {
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(iso.adjoint() * g * iso);
  return out;
}

namespace {

void split_into(const std::vector<Mat>& gens, const Mat& iso, std::uint64_t seed, int depth,
                std::vector<Mat>& pieces) {
  auto comm = solve_intertwiners(gens, gens);
  if (comm.size() <= 1) {
    pieces.push_back(iso);
    return;
  }
  if (depth > 8) throw Error(ErrorKind::ValidationError, "commutant splitting did not converge");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const Eigen::Index n = gens[0].rows();
  Mat h = Mat::Zero(n, n);
  for (const auto& c : comm) h += dist(rng) * (c + c.adjoint()) + dist(rng) * cplx(0.0, 1.0) * (c - c.adjoint());
  for (const auto& sp : eigenspaces(h)) split_into(compress(gens, sp), iso * sp, seed + 1, depth + 1, pieces);
}

}  // namespace

FamilySplit split_family(const std::vector<Mat>& gens, std::uint64_t seed) {
  FamilySplit fs;
  const Eigen::Index n = gens[0].rows();
  split_into(gens, Mat::Identity(n, n), seed, 0, fs.pieces);
  std::vector<std::vector<Mat>> subs;
  for (const auto& p : fs.pieces) subs.push_back(compress(gens, p));
  std::vector<int> rep;  // piece index representing each class
  for (size_t i = 0; i < fs.pieces.size(); ++i) {
    int found = -1;
    for (size_t c = 0; c < rep.size() && found < 0; ++c) {
      const auto& r = subs[rep[c]];
      if (r[0].rows() != subs[i][0].rows()) continue;
      if (!solve_intertwiners(subs[i], r).empty()) found = static_cast<int>(c);
    }
    if (found < 0) {
      found = static_cast<int>(rep.size());
      rep.push_back(static_cast<int>(i));
    }
    fs.cls.push_back(found);
  }
  fs.nclasses = static_cast<int>(rep.size());
  return fs;
}

std::vector<long long> rounded_key(const Vec& v) {
  std::vector<long long> key;
  key.reserve(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    key.push_back(std::llround(v(i).real() * 1e6));
    key.push_back(std::llround(v(i).imag() * 1e6));
  }
  return key;
}

}  // namespace qm

/** @file semidirect.hpp
 *  @brief The semidirect product G x| L and its principal subgroups G x| L0.
 *
 *  The product algebra over L0 has basis e_i (x) delta_r, r in L0, indexed
 *  by pos(r) * dim(base) + i.  Sub-products are built lazily and cached.
 */
#pragma once

#include <map>
#include <mutex>

#include "qmackey/corep.hpp"
#include "qmackey/projective_rep.hpp"

namespace qm {

class SemidirectInstance;

/// G x| L0 for one subgroup L0.
struct Product {
  const SemidirectInstance* inst = nullptr;
  Subgroup sub;
  HopfPtr hopf;

  int index(int r, int i) const;
};
using ProductPtr = std::shared_ptr<const Product>;

class SemidirectInstance {
 public:
  SemidirectInstance(std::string name, HopfPtr base, GroupPtr lambda, std::vector<Mat> alpha_star);
  SemidirectInstance(const SemidirectInstance&) = delete;
  SemidirectInstance& operator=(const SemidirectInstance&) = delete;

  const std::string& name() const { return name_; }
  const HopfPtr& base() const { return base_; }
  const GroupPtr& lambda() const { return lambda_; }
  /// Matrix of alpha*_r on the base basis.
  const Mat& alpha_star(int r) const { return alpha_[r]; }
  const std::vector<Mat>& alpha_star_all() const { return alpha_; }

  ProductPtr product(const Subgroup& sub) const;
  ProductPtr full() const { return product(whole_group(*lambda_)); }

  /// Irreducible coreps of the base and the induced action on them (computed once).
  const std::vector<Corep>& base_irreps() const;
  const GroupAction& irr_action() const;

  std::uint64_t seed = 0;

 private:
  std::string name_;
  HopfPtr base_;
  GroupPtr lambda_;
  std::vector<Mat> alpha_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, ProductPtr> cache_;
  mutable std::once_flag irr_once_;
  mutable std::vector<Corep> irreps_;
  mutable GroupAction action_;
};

/// Structure constants of G x| L0 from the base and the action.
HopfPtr build_product(const HopfData& base, const FiniteGroup& lambda, const std::vector<Mat>& alpha_star,
                      const Subgroup& sub);

/// Keeps the delta_r blocks with r in `to`.
Corep restrict_corep(const Product& from, const Product& to, const Corep& u);
/// Zero-fills an element of A (x) C(from) to A (x) C(to).
Vec extend(const Product& from, const Product& to, const Vec& f);

struct CovariantPair {
  Corep ug;          // corep of the base
  ProjectiveRep ul;  // ordinary unitary rep of L0
};
CovariantPair split_covariant(const Product& p, const Corep& u);
/// U = (U_G)_12 (U_L)_13; checks covariance first.
Corep join_covariant(const Product& p, const Corep& ug, const ProjectiveRep& ul);
/// Worst residual of F(r) N_c = sum_b alpha*_r(c,b) N_b F(r); throws NotCovariant above tol().accept.
double check_covariant(const SemidirectInstance& inst, const Corep& ug, const ProjectiveRep& ul, bool raise = true);

/// Matrix of alpha*_{r^-1} (x) Adj*_{r^-1} from A (x) C(L0) to A (x) C(r L0 r^-1).
Mat conj_iso(const Product& from, const Product& to, int r);
/// r.U as a corep of G x| r L0 r^-1.
Corep act_corep(const Product& p, int r, const Corep& u);

}  // namespace qm

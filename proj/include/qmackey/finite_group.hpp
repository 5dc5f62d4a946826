/** @file finite_group.hpp
 *  @brief Finite groups as dense multiplication tables, subgroups, cosets and actions.
 */
#pragma once

#include <memory>
#include <set>
#include <vector>

namespace qm {

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mult;
  int identity = 0;
  std::vector<int> inv;

  int mul(int r, int s) const { return mult[r][s]; }
  int conj(int r, int h) const { return mult[mult[r][h]][inv[r]]; }  // r h r^-1

  /// Validates the table; throws NotAGroup with a witness.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted element set of a subgroup of some parent group.
struct Subgroup {
  std::vector<int> elems;
  std::vector<char> member;  // indicator over the parent

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int r) const { return member[r] != 0; }
  /// Position of r inside elems, or -1.
  int pos(int r) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool operator<(const Subgroup& o) const { return elems < o.elems; }
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
/// Subgroup from an element list; throws NotAGroup if not closed.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elems);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subset(const Subgroup& a, const Subgroup& b);

/// r H r^-1; adj[i] is the image of H.elems[i].
struct Conjugated {
  Subgroup sub;
  std::vector<int> adj;
};
Conjugated conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int r);

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup conjugate_intersection(const FiniteGroup& g, const std::vector<Subgroup>& subs,
                                const std::vector<int>& reps);

/// Left cosets rH with the minimal element as representative, ordered by representative.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h);
std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& h);
/// Right cosets Hr, same conventions.
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h);

struct GroupAction {
  GroupPtr group;
  int set_size = 0;
  std::vector<std::vector<int>> perm;  // perm[r][x] = r.x

  /// Checks the left-action law; throws ValidationError.
  void validate() const;
};

Subgroup stabilizer(const GroupAction& act, int point);
std::vector<int> orbit(const GroupAction& act, int point);
std::vector<std::vector<int>> orbits(const GroupAction& act);
std::set<Subgroup> general_isotropy_family(const GroupAction& act);

/// Checks that perm is an automorphism of g.
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm);

}  // namespace qm

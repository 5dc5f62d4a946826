#include "qmackey/finite_group.hpp"

#include <algorithm>
#include <sstream>

#include "qmackey/errors.hpp"

namespace qm {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotAGroup, "entry out of range in row " + std::to_string(i));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          throw Error(ErrorKind::NotAGroup, os.str());
        }
  FiniteGroup g;
  g.order = n;
  g.mult = table;
  g.identity = -1;
  for (int e = 0; e < n && g.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) g.identity = e;
  }
  if (g.identity < 0) throw Error(ErrorKind::NotAGroup, "no identity element");
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == g.identity && table[b][a] == g.identity) g.inv[a] = b;
    if (g.inv[a] < 0) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

int Subgroup::pos(int r) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), r);
  return (it != elems.end() && *it == r) ? static_cast<int>(it - elems.begin()) : -1;
}

static Subgroup from_sorted(const FiniteGroup& g, std::vector<int> elems) {
  Subgroup h;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  h.member.assign(g.order, 0);
  for (int r : elems) h.member[r] = 1;
  h.elems = std::move(elems);
  return h;
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  return from_sorted(g, all);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return from_sorted(g, {g.identity}); }

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elems) {
  for (int r : elems)
    if (r < 0 || r >= g.order) throw Error(ErrorKind::NotAGroup, "subgroup element out of range");
  Subgroup h = from_sorted(g, std::move(elems));
  if (h.elems.empty() || !h.contains(g.identity)) throw Error(ErrorKind::NotAGroup, "subgroup lacks identity");
  for (int a : h.elems) {
    if (!h.contains(g.inv[a])) throw Error(ErrorKind::NotAGroup, "subgroup not closed under inverses");
    for (int b : h.elems)
      if (!h.contains(g.mul(a, b))) throw Error(ErrorKind::NotAGroup, "subgroup not closed under products");
  }
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems{g.identity};
  in[g.identity] = 1;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = g.mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  return from_sorted(g, elems);
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  for (int r : a.elems)
    if (!b.contains(r)) return false;
  return true;
}

Conjugated conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int r) {
  Conjugated c;
  for (int x : h.elems) c.adj.push_back(g.conj(r, x));
  c.sub = from_sorted(g, c.adj);
  return c;
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> e;
  for (int r : a.elems)
    if (b.contains(r)) e.push_back(r);
  return from_sorted(g, e);
}

Subgroup conjugate_intersection(const FiniteGroup& g, const std::vector<Subgroup>& subs,
                                const std::vector<int>& reps) {
  Subgroup acc = whole_group(g);
  for (size_t i = 0; i < subs.size(); ++i) acc = intersect(g, acc, conjugate_subgroup(g, subs[i], reps[i]).sub);
  return acc;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order, 0);
  std::vector<std::vector<int>> out;
  for (int r = 0; r < g.order; ++r) {
    if (seen[r]) continue;
    std::vector<int> c;
    for (int x : h.elems) c.push_back(g.mul(r, x));
    std::sort(c.begin(), c.end());
    for (int x : c) seen[x] = 1;
    out.push_back(c);
  }
  return out;
}

std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> reps;
  for (const auto& c : left_cosets(g, h)) reps.push_back(c.front());
  return reps;
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order, 0);
  std::vector<std::vector<int>> out;
  for (int r = 0; r < g.order; ++r) {
    if (seen[r]) continue;
    std::vector<int> c;
    for (int x : h.elems) c.push_back(g.mul(x, r));
    std::sort(c.begin(), c.end());
    for (int x : c) seen[x] = 1;
    out.push_back(c);
  }
  return out;
}

void GroupAction::validate() const {
  const auto& g = *group;
  if (static_cast<int>(perm.size()) != g.order) throw Error(ErrorKind::ValidationError, "action size mismatch");
  for (int x = 0; x < set_size; ++x)
    if (perm[g.identity][x] != x) throw Error(ErrorKind::ValidationError, "identity does not act trivially");
  for (int r = 0; r < g.order; ++r)
    for (int s = 0; s < g.order; ++s)
      for (int x = 0; x < set_size; ++x)
        if (perm[g.mul(r, s)][x] != perm[r][perm[s][x]]) {
          std::ostringstream os;
          os << "left-action law fails at r=" << r << " s=" << s << " x=" << x;
          throw Error(ErrorKind::ValidationError, os.str());
        }
}

Subgroup stabilizer(const GroupAction& act, int point) {
  std::vector<int> e;
  for (int r = 0; r < act.group->order; ++r)
    if (act.perm[r][point] == point) e.push_back(r);
  return from_sorted(*act.group, e);
}

std::vector<int> orbit(const GroupAction& act, int point) {
  std::vector<int> o;
  for (int r = 0; r < act.group->order; ++r) o.push_back(act.perm[r][point]);
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

std::vector<std::vector<int>> orbits(const GroupAction& act) {
  std::vector<char> seen(act.set_size, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < act.set_size; ++x) {
    if (seen[x]) continue;
    auto o = orbit(act, x);
    for (int y : o) seen[y] = 1;
    out.push_back(o);
  }
  return out;
}

std::set<Subgroup> general_isotropy_family(const GroupAction& act) {
  std::set<Subgroup> fam;
  for (int x = 0; x < act.set_size; ++x) fam.insert(stabilizer(act, x));
  if (act.set_size == 0) fam.insert(whole_group(*act.group));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> cur(fam.begin(), fam.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (fam.insert(intersect(*act.group, cur[i], cur[j])).second) grew = true;
  }
  return fam;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order) return false;
  std::vector<char> hit(g.order, 0);
  for (int x : perm) {
    if (x < 0 || x >= g.order || hit[x]) return false;
    hit[x] = 1;
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
  return true;
}

}  // namespace qm

#include "qmackey/cohomology.hpp"

#include <cmath>
#include <numbers>

#include "qmackey/errors.hpp"

namespace qm {

Cochain2 trivial_cochain2(GroupPtr g, const Subgroup& dom) {
  Cochain2 c{g, dom, {}};
  c.w.assign(static_cast<size_t>(g->order) * g->order, cplx(1.0, 0.0));
  return c;
}

Cochain1 trivial_cochain1(GroupPtr g, const Subgroup& dom) {
  Cochain1 c{g, dom, {}};
  c.b.assign(g->order, cplx(1.0, 0.0));
  return c;
}

void validate(const Cochain2& w) {
  const int e = w.group->identity;
  for (int r : w.dom.elems)
    for (int s : w.dom.elems)
      if (std::abs(std::abs(w(r, s)) - 1.0) > tol().build * 1e3)
        throw Error(ErrorKind::ValidationError, "cochain value off the unit circle");
  for (int r : w.dom.elems)
    if (std::abs(w(e, r) - 1.0) > tol().verify || std::abs(w(r, e) - 1.0) > tol().verify)
      throw Error(ErrorKind::ValidationError, "cochain not normalized");
}

CocycleReport is_cocycle(const Cochain2& w) {
  CocycleReport rep;
  const auto& g = *w.group;
  for (int r : w.dom.elems)
    for (int s : w.dom.elems)
      for (int t : w.dom.elems) {
        double res = std::abs(w(r, g.mul(s, t)) * w(s, t) - w(r, s) * w(g.mul(r, s), t));
        if (res > rep.residual) {
          rep.residual = res;
          rep.r = r, rep.s = s, rep.t = t;
        }
      }
  rep.ok = rep.residual < tol().verify;
  return rep;
}

Cochain2 coboundary(const Cochain1& b) {
  Cochain2 out = trivial_cochain2(b.group, b.dom);
  const auto& g = *b.group;
  for (int r : b.dom.elems)
    for (int s : b.dom.elems) out.at(r, s) = b(r) * b(s) / b(g.mul(r, s));
  return out;
}

namespace {

long long mod(long long a, long long q) {
  a %= q;
  return a < 0 ? a + q : a;
}

long long inv_mod(long long a, long long q) {
  long long t = 0, nt = 1, r = q, nr = mod(a, q);
  while (nr) {
    long long k = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - k * nt);
    std::tie(r, nr) = std::make_pair(nr, r - k * nr);
  }
  return mod(t, q);
}

int valuation(long long x, long long p, int e) {
  if (x == 0) return e;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Solves A x = y over Z/p^e; A is rows x k.
std::optional<std::vector<long long>> solve_local(std::vector<std::vector<long long>> a, std::vector<long long> y,
                                                  long long p, int e) {
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  const size_t rows = a.size(), k = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = mod(x, q);
  for (auto& x : y) x = mod(x, q);
  std::vector<std::vector<long long>> cq(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i) cq[i][i] = 1;
  size_t t = 0;
  std::vector<int> vals;
  for (; t < std::min(rows, k); ++t) {
    int best = e;
    size_t bi = 0, bj = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < k; ++j) {
        int v = valuation(a[i][j], p, e);
        if (v < best) best = v, bi = i, bj = j;
      }
    if (best == e) break;
    std::swap(a[t], a[bi]);
    std::swap(y[t], y[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);
    for (auto& row : cq) std::swap(row[t], row[bj]);
    long long pv = 1;
    for (int i = 0; i < best; ++i) pv *= p;
    long long uinv = inv_mod(a[t][t] / pv, q);
    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      long long f = mod((a[i][t] / pv) * uinv, q);
      for (size_t j = t; j < k; ++j) a[i][j] = mod(a[i][j] - f * a[t][j], q);
      y[i] = mod(y[i] - f * y[t], q);
    }
    for (size_t j = t + 1; j < k; ++j) {
      if (a[t][j] == 0) continue;
      long long f = mod((a[t][j] / pv) * uinv, q);
      for (size_t i = t; i < rows; ++i) a[i][j] = mod(a[i][j] - f * a[i][t], q);
      for (size_t i = 0; i < k; ++i) cq[i][j] = mod(cq[i][j] - f * cq[i][t], q);
    }
    vals.push_back(best);
  }
  for (size_t i = t; i < rows; ++i)
    if (y[i] != 0) return std::nullopt;
  std::vector<long long> z(k, 0);
  for (size_t i = 0; i < t; ++i) {
    long long pv = 1;
    for (int j = 0; j < vals[i]; ++j) pv *= p;
    if (y[i] % pv != 0) return std::nullopt;
    z[i] = mod((y[i] / pv) * inv_mod(a[i][i] / pv, q), q);
  }
  std::vector<long long> x(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) x[i] = mod(x[i] + cq[i][j] * z[j], q);
  return x;
}

}  // namespace

std::optional<Cochain1> try_solve_coboundary(const Cochain2& w, int m) {
  if (m <= 0) throw Error(ErrorKind::ValidationError, "m must be positive");
  const auto& g = *w.group;
  const auto& el = w.dom.elems;
  const size_t k = el.size();
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::vector<long long>> a;
  std::vector<long long> y;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      cplx v = w(el[i], el[j]);
      double turns = std::arg(v) / two_pi * m;
      long long th = std::llround(turns);
      if (std::abs(v - std::polar(1.0, two_pi * th / m)) > tol().accept)
        throw Error(ErrorKind::NotRootsOfUnity, "cocycle value is not an m-th root of unity");
      std::vector<long long> row(k, 0);
      row[i] += 1;
      row[j] += 1;
      row[w.dom.pos(g.mul(el[i], el[j]))] -= 1;
      a.push_back(row);
      y.push_back(th);
    }
  // Chinese remaindering over the prime-power factors of m.
  std::vector<long long> x(k, 0);
  long long modulus = 1, rest = m;
  for (long long p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    int e = 0;
    long long q = 1;
    while (rest % p == 0) rest /= p, ++e, q *= p;
    auto sol = solve_local(a, y, p, e);
    if (!sol) return std::nullopt;
    for (size_t i = 0; i < k; ++i) {
      // combine x mod modulus with sol mod q
      long long t = mod(((*sol)[i] - x[i]) % q * inv_mod(modulus % q, q), q);
      x[i] = x[i] + modulus * t;
    }
    modulus *= q;
  }
  Cochain1 b = trivial_cochain1(w.group, w.dom);
  for (size_t i = 0; i < k; ++i) b.b[el[i]] = std::polar(1.0, two_pi * static_cast<double>(mod(x[i], m)) / m);
  if (distance(coboundary(b), w) > tol().accept) return std::nullopt;
  return b;
}

Cochain2 inverse(const Cochain2& w) {
  Cochain2 out = w;
  for (auto& v : out.w) v = std::conj(v) / std::norm(v);
  return out;
}

Cochain2 product(const Cochain2& a, const Cochain2& b) {
  if (!(a.dom == b.dom)) throw Error(ErrorKind::ValidationError, "cochain domains differ");
  Cochain2 out = a;
  for (size_t i = 0; i < out.w.size(); ++i) out.w[i] = a.w[i] * b.w[i];
  return out;
}

Cochain2 restrict(const Cochain2& w, const Subgroup& sub) {
  Cochain2 out = trivial_cochain2(w.group, sub);
  for (int r : sub.elems)
    for (int s : sub.elems) {
      if (!w.dom.contains(r) || !w.dom.contains(s))
        throw Error(ErrorKind::ValidationError, "restriction outside the cochain domain");
      out.at(r, s) = w(r, s);
    }
  return out;
}

Cochain2 pullback_adj(const Cochain2& w, int r) {
  const auto& g = *w.group;
  Cochain2 out = trivial_cochain2(w.group, conjugate_subgroup(g, w.dom, r).sub);
  const int ri = g.inv[r];
  for (int s : out.dom.elems)
    for (int t : out.dom.elems) out.at(s, t) = w(g.conj(ri, s), g.conj(ri, t));
  return out;
}

double distance(const Cochain2& a, const Cochain2& b) {
  double d = 0.0;
  for (int r : a.dom.elems)
    for (int s : a.dom.elems) d = std::max(d, std::abs(a(r, s) - b(r, s)));
  return d;
}

}  // namespace qm

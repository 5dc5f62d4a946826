// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qmackey/errors.hpp"
#include "qmackey/instance_io.hpp"
#include "qmackey/mackey_fusion.hpp"

using namespace qm;

namespace {

constexpr double kAxiomTol = 1e-9;
constexpr double kHaarTol = 1e-12;
constexpr double kCharTol = 1e-9;
constexpr double kCosetTol = 1e-12;
constexpr double kAxiomSeconds = 2.0;
constexpr double kClassifySeconds = 10.0;
constexpr double kFusionSeconds = 60.0;
constexpr int kRandomPairs = 50;
constexpr int kRoundTrips = 10;

std::string g_corpus;

const std::vector<std::string> kDesk = {"A_z3_by_z2", "B_z2sq_by_swap", "C_dual_s3_by_conj", "D_dual_s3_trivial"};
const std::vector<std::string> kAll = {"A_z3_by_z2",     "B_z2sq_by_swap", "C_dual_s3_by_conj", "D_dual_s3_trivial",
                                       "E_z3sq_by_z2sq", "F_d4_by_inner",  "A_raw"};

std::unique_ptr<SemidirectInstance> load(const std::string& name) {
  return load_instance(g_corpus + "/" + name + ".json");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<RepParameter> parameters(const SemidirectInstance& inst, int x, const Subgroup& sub) {
  const Corep& u = inst.base_irreps()[x];
  ProjectiveRep V = covariant_projective(inst, u, sub);
  std::vector<RepParameter> out;
  for (auto& v : irreducible_projreps(inst.lambda(), sub, inverse(V.cocycle), inst.seed)) out.push_back({u, V, v, sub});
  return out;
}

// Every parameter over every subgroup of the isotropy family (and the trivial subgroup) fixing its point.
std::vector<RepParameter> all_parameters(const SemidirectInstance& inst) {
  std::set<Subgroup> fam = general_isotropy_family(inst.irr_action());
  fam.insert(trivial_subgroup(*inst.lambda()));
  std::vector<RepParameter> out;
  for (const auto& sub : fam)
    for (int x = 0; x < static_cast<int>(inst.base_irreps().size()); ++x)
      if (is_subset(sub, stabilizer(inst.irr_action(), x)))
        for (auto& p : parameters(inst, x, sub)) out.push_back(std::move(p));
  return out;
}

std::vector<int> sorted_dims(const std::vector<ClassifiedIrr>& cl) {
  std::vector<int> d;
  for (const auto& c : cl) d.push_back(c.dim);
  std::sort(d.begin(), d.end());
  return d;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Mat random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ() * Mat::Identity(n, n);
}

struct Result {
  bool ok = true;
  std::string detail;
};

Result c1_axioms() {
  std::ostringstream os;
  Result r;
  for (const auto& n : kDesk) {
    auto t0 = std::chrono::steady_clock::now();
    auto inst = load(n);
    double worst = verify_axioms(*inst->full()->hopf).worst();
    double t = seconds_since(t0);
    r.ok = r.ok && worst < kAxiomTol && t < kAxiomSeconds;
    os << n << " residual " << worst << " in " << t << "s; ";
  }
  r.detail = os.str();
  return r;
}

Result c2_haar() {
  Result r;
  double worst = 0.0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    const auto& p = *inst->full()->hopf;
    const auto& b = *inst->base();
    const int m = inst->lambda()->order;
    Vec closed(p.dim);
    for (int k = 0; k < m; ++k) closed.segment(k * b.dim, b.dim) = b.haar / double(m);
    worst = std::max(worst, (haar_solve(p) - closed).cwiseAbs().maxCoeff());
  }
  r.ok = worst < kHaarTol;
  std::ostringstream os;
  os << "max deviation " << worst;
  r.detail = os.str();
  return r;
}

Result c3_kac() {
  Result r;
  for (const auto& n : kAll) {
    auto inst = load(n);
    bool a = is_kac(*inst->full()->hopf), b = is_kac(*inst->base());
    r.ok = r.ok && a == b;
    r.detail += n + (a == b ? " same; " : " differs; ");
  }
  return r;
}

Result c4_dims() {
  Result r;
  const std::vector<std::pair<std::string, std::vector<int>>> expect = {
      {"A_z3_by_z2", {1, 1, 2}}, {"B_z2sq_by_swap", {1, 1, 1, 1, 2}}, {"C_dual_s3_by_conj", {1, 1, 1, 1, 2, 2}}};
  for (const auto& [n, dims] : expect) {
    auto t0 = std::chrono::steady_clock::now();
    auto inst = load(n);
    auto got = sorted_dims(classify(*inst));  // matched against the dual-algebra blocks inside
    double t = seconds_since(t0);
    r.ok = r.ok && got == dims && t < kClassifySeconds;
    r.detail += n + " " + join(got) + "; ";
  }
  return r;
}

Result c5_peter_weyl() {
  Result r;
  for (const auto& n : kAll) {
    auto inst = load(n);
    long long s = 0;
    for (const auto& c : classify(*inst)) s += static_cast<long long>(c.dim) * c.dim;
    long long want = static_cast<long long>(inst->base()->dim) * inst->lambda()->order;
    r.ok = r.ok && s == want;
    r.detail += n + " " + std::to_string(s) + "/" + std::to_string(want) + "; ";
  }
  return r;
}

Result c6_characters() {
  Result r;
  double trace = 0.0, coset = 0.0;
  int count = 0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    for (const auto& p : all_parameters(*inst)) {
      auto prod = inst->product(p.lambda0);
      Corep u = csr_corep(*inst, p);
      InducedCharacter ch = induced_character(*prod, u);
      trace = std::max(trace, (ch.full - character(induce(*prod, u).result)).cwiseAbs().maxCoeff());
      coset = std::max(coset, (ch.full - ch.coset).cwiseAbs().maxCoeff());
      ++count;
    }
  }
  r.ok = trace < kCharTol && coset < kCosetTol;
  std::ostringstream os;
  os << count << " triples, trace deviation " << trace << ", coset deviation " << coset;
  r.detail = os.str();
  return r;
}

Result c7_intertwiners() {
  Result r;
  std::mt19937_64 rng(20240601);
  int pairs = 0, bad = 0;
  std::vector<std::pair<std::unique_ptr<SemidirectInstance>, std::vector<RepParameter>>> pools;
  for (const auto& n : kAll) {
    auto inst = load(n);
    auto ps = all_parameters(*inst);
    pools.emplace_back(std::move(inst), std::move(ps));
  }
  while (pairs < kRandomPairs) {
    auto& [inst, ps] = pools[rng() % pools.size()];
    const auto& a = ps[rng() % ps.size()];
    const auto& b = ps[rng() % ps.size()];
    auto pa = inst->product(a.lambda0), pb = inst->product(b.lambda0);
    Corep ua = csr_corep(*inst, a), ub = csr_corep(*inst, b);
    int formula = ind_mor_dim_formula(*pa, ua, *pb, ub);
    int direct = mor_dim(induce(*pa, ua).result, induce(*pb, ub).result);
    bad += formula != direct;
    ++pairs;
  }
  r.ok = bad == 0;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
  return r;
}

Result c8_mackey() {
  Result r;
  int total = 0, reducible = 0, bad = 0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    for (const auto& p : all_parameters(*inst)) {
      auto prod = inst->product(p.lambda0);
      Corep u = csr_corep(*inst, p);
      Corep w = induce(*prod, u).result;
      bool direct = mor_dim(w, w) == 1;
      bad += mackey_irreducible(*prod, u) != direct;
      reducible += !direct;
      ++total;
    }
  }
  r.ok = bad == 0 && reducible > 0;
  r.detail = std::to_string(total) + " parameters (" + std::to_string(reducible) + " not distinguished), " +
             std::to_string(bad) + " mismatches";
  return r;
}

Result c9_fusion() {
  Result r;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& n : kDesk) {
    auto inst = load(n);
    auto cl = classify(*inst);
    FusionTable t = fusion(*inst, cl);
    r.ok = r.ok && t.agree();
    r.detail += n + (t.agree() ? " agree; " : " DISAGREE; ");
    if (n == "A_z3_by_z2") {
      int two = 0;
      while (cl[two].dim != 2) ++two;
      // 2 (x) 2 contains every irrep once
      bool ok = true;
      for (size_t a = 0; a < cl.size(); ++a) ok = ok && t.formula[a][two][two] == 1;
      r.ok = r.ok && ok;
      r.detail += std::string("2x2=1+sgn+2 ") + (ok ? "yes; " : "no; ");
    }
  }
  double s = seconds_since(t0);
  r.ok = r.ok && s < kFusionSeconds;
  r.detail += std::to_string(s) + "s";
  return r;
}

Result c10_conjugation() {
  Result r;
  int total = 0, bad = 0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    const auto& hf = *inst->full()->hopf;
    auto cl = classify(*inst);
    for (const auto& c : cl) {
      Vec wbar = character(conjugate(c.induced).ubar);
      RepParameter pb = conjugate_parameter(*inst, c.param);
      Vec psi = character(induce(*inst->product(pb.lambda0), csr_corep(*inst, pb)).result);
      bad += round_int(hf.h(hf.mul(hf.adj(wbar), psi)), "conjugation pairing") != 1;
      ++total;
    }
  }
  r.ok = bad == 0;
  r.detail = std::to_string(total) + " irreps, " + std::to_string(bad) + " mismatches";
  return r;
}

Result c11_projective() {
  Result r;
  int pairs = 0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    for (const auto& orb : orbits(inst->irr_action())) {
      Subgroup l0 = stabilizer(inst->irr_action(), orb.front());
      ProjectiveRep V = covariant_projective(*inst, inst->base_irreps()[orb.front()], l0);
      for (const Cochain2& w : {V.cocycle, inverse(V.cocycle)}) {
        auto vs = irreducible_projreps(inst->lambda(), l0, w, inst->seed);
        int s = 0;
        for (const auto& v : vs) s += v.dim * v.dim;
        bool gram = true;
        for (size_t i = 0; i < vs.size(); ++i)
          for (size_t j = 0; j < vs.size(); ++j) gram = gram && proj_mor_dim(vs[i], vs[j]) == (i == j ? 1 : 0);
        r.ok = r.ok && gram && s == l0.order();
        ++pairs;
      }
    }
  }
  r.detail = std::to_string(pairs) + " (subgroup, cocycle) pairs";
  return r;
}

Result c12_reduction() {
  Result r;
  std::mt19937_64 rng(20240601);
  int rounds = 0, bad = 0;
  for (const auto& n : kAll) {
    auto inst = load(n);
    const auto& lam = inst->lambda();
    for (const auto& c : classify(*inst)) {
      const RepParameter& p = c.param;
      // ordinary multiplicity reps: v (x) V1 stays irreducible when V1 is one-dimensional
      for (const auto& V1 : irreducible_projreps(lam, p.lambda0, trivial_cochain2(lam, p.lambda0), inst->seed)) {
        if (V1.dim != 1) continue;
        const int d0 = p.u.dim;
        Mat q = random_unitary(d0, rng);
        GRParameter g{conjugate_by(p.u, q), transport(tensor(V1, p.V), q), p.v, p.lambda0};
        validate_parameter(*inst, g, false);
        auto red = reduce_grp(*inst, g, p.u, p.V);
        RepParameter target{p.u, p.V, tensor(p.v, V1), p.lambda0};
        bad += !red || param_mor_dim(*inst, *red, target) != 1;
        ++rounds;
      }
    }
  }
  r.ok = bad == 0 && rounds >= kRoundTrips;
  r.detail = std::to_string(rounds) + " constructions, " + std::to_string(bad) + " failures";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  g_corpus = argc > 1 ? argv[1] : QM_CORPUS;
  const std::vector<std::function<Result()>> criteria = {c1_axioms,      c2_haar,        c3_kac,
                                                         c4_dims,        c5_peter_weyl,  c6_characters,
                                                         c7_intertwiners, c8_mackey,     c9_fusion,
                                                         c10_conjugation, c11_projective, c12_reduction};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu: %s  %s\n", i + 1, r.ok ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    failed += !r.ok;
  }
  return failed == 0 ? 0 : 1;
}

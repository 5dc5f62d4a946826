#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmackey/errors.hpp"
#include "qmackey/instance_io.hpp"
#include "qmackey/mackey_fusion.hpp"

using nlohmann::json;
using namespace qm;

namespace {

struct Options {
  std::string format = "human";
  long long seed = -1;
  double tol_build = 1e-12, tol_verify = 1e-9, tol_accept = 1e-6;
  int jobs = 1;
  std::string file;
  std::string subgroup, param;
};

double clean(double x) {
  double r = std::round(x * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;
}

json cjson(cplx z) { return json::array({clean(z.real()), clean(z.imag())}); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(cjson(v(i)));
  return a;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string cfmt(cplx z) {
  double re = clean(z.real()), im = clean(z.imag());
  char buf[64];
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.6g", re);
  else
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  return buf;
}

std::vector<int> generators(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  for (int r : h.elems)
    if (!cur.contains(r)) {
      gens.push_back(r);
      cur = generated_subgroup(g, gens);
    }
  return gens;
}

std::string list_str(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

std::unique_ptr<SemidirectInstance> load(const Options& o) {
  auto inst = load_instance(o.file);
  if (o.seed >= 0) inst->seed = static_cast<std::uint64_t>(o.seed);
  return inst;
}

void emit(const Options& o, const json& doc, const std::string& human) {
  if (o.format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

json axioms_json(const AxiomReport& r) {
  json j = json::object();
  for (auto& [n, v] : r.residuals) j[n] = v;
  return j;
}

std::string axioms_human(const char* title, const AxiomReport& r) {
  std::string s = std::string(title) + "\n";
  for (auto& [n, v] : r.residuals) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-34s %.3e  %s\n", n.c_str(), v, v <= tol().verify ? "ok" : "FAIL");
    s += buf;
  }
  return s;
}

int cmd_check(const Options& o) {
  InstanceSpec spec = parse_instance_file(o.file);
  AxiomReport base = verify_axioms(*spec.base);
  json doc = {{"command", "check"}, {"instance", spec.name}, {"base_axioms", axioms_json(base)}};
  std::string human = "instance " + spec.name + "\n" + axioms_human("base algebra", base);
  if (!base.ok) {
    doc["ok"] = false;
    emit(o, doc, human + "result: FAIL\n");
    return 1;
  }
  auto inst = make_instance(spec);
  if (o.seed >= 0) inst->seed = static_cast<std::uint64_t>(o.seed);
  const auto& prod = *inst->full()->hopf;
  AxiomReport pr = verify_axioms(prod);
  double haar = (haar_solve(prod) - prod.haar).cwiseAbs().maxCoeff();
  bool kb = is_kac(*inst->base()), kp = is_kac(prod);
  bool ok = pr.ok && haar <= tol().build && kb == kp;
  doc["product_axioms"] = axioms_json(pr);
  doc["product_dim"] = prod.dim;
  doc["haar_closed_form_residual"] = haar;
  doc["kac"] = {{"base", kb}, {"product", kp}};
  doc["ok"] = ok;
  human += axioms_human("semidirect product", pr);
  human += "  product dimension " + std::to_string(prod.dim) + "\n";
  human += "  Haar state vs closed form        " + fmt(haar) + "\n";
  human += std::string("  Kac type: base ") + (kb ? "yes" : "no") + ", product " + (kp ? "yes" : "no") + "\n";
  human += std::string("result: ") + (ok ? "PASS" : "FAIL") + "\n";
  emit(o, doc, human);
  return ok ? 0 : 1;
}

int cmd_irr(const Options& o) {
  auto inst = load(o);
  auto cl = classify(*inst);
  const auto& g = *inst->lambda();
  json rows = json::array();
  std::string human = "instance " + inst->name() + ": " + std::to_string(cl.size()) + " irreducible representations\n";
  human += "label  orbit  L0 gens      |L0|  cocycle   dim u  dim v  dim\n";
  for (size_t i = 0; i < cl.size(); ++i) {
    const auto& c = cl[i];
    auto gens = generators(g, c.param.lambda0);
    rows.push_back({{"label", "W" + std::to_string(i)},
                    {"orbit_rep", c.orbit_rep},
                    {"lambda0", c.param.lambda0.elems},
                    {"lambda0_generators", gens},
                    {"cocycle_trivial", c.cocycle_trivial},
                    {"dim_u", c.param.u.dim},
                    {"dim_v", c.param.v.dim},
                    {"dim", c.dim}});
    char buf[160];
    std::snprintf(buf, sizeof buf, "W%-4zu  %-5d  %-11s  %-4d  %-8s  %-5d  %-5d  %d\n", i, c.orbit_rep,
                  list_str(gens).c_str(), c.param.lambda0.order(), c.cocycle_trivial ? "trivial" : "nontriv",
                  c.param.u.dim, c.param.v.dim, c.dim);
    human += buf;
  }
  long long total = 0;
  for (const auto& c : cl) total += static_cast<long long>(c.dim) * c.dim;
  json doc = {{"command", "irr"}, {"instance", inst->name()}, {"irreps", rows}, {"sum_dim_squared", total},
              {"product_dim", inst->full()->hopf->dim}};
  human += "sum of squared dimensions " + std::to_string(total) + " = dim " + std::to_string(inst->full()->hopf->dim) + "\n";
  emit(o, doc, human);
  return 0;
}

int cmd_fuse(const Options& o) {
  auto inst = load(o);
  auto cl = classify(*inst);
  FusionTable t = fusion(*inst, cl, o.jobs);
  const int n = static_cast<int>(cl.size());
  json coeffs = json::array();
  std::string human = "instance " + inst->name() + ": fusion rules W_j x W_k = sum_i N W_i\n";
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::string line = "W" + std::to_string(j) + " x W" + std::to_string(k) + " =";
      bool first = true;
      for (int i = 0; i < n; ++i) {
        int v = t.formula[i][j][k];
        if (v == 0) continue;
        coeffs.push_back({i, j, k, v});
        line += std::string(first ? " " : " + ") + (v > 1 ? std::to_string(v) + " " : "") + "W" + std::to_string(i);
        first = false;
      }
      human += line + "\n";
    }
  int agreeing = 1 + (t.brute == t.formula) + (t.dual == t.formula);
  std::string report = std::to_string(agreeing) + "/3 methods agree";
  json doc = {{"command", "fuse"},
              {"instance", inst->name()},
              {"labels", n},
              {"coefficients", coeffs},
              {"agreement", report},
              {"methods", {{"formula", true}, {"brute_force", t.brute == t.formula}, {"dual_algebra", t.dual == t.formula}}},
              {"frobenius_identity", t.frobenius_ok}};
  human += report + (t.frobenius_ok ? ", Frobenius identity holds\n" : ", Frobenius identity FAILS\n");
  emit(o, doc, human);
  return t.agree() ? 0 : 2;
}

int cmd_induce(const Options& o) {
  auto inst = load(o);
  const auto& g = *inst->lambda();
  Subgroup l0 = o.subgroup.empty() ? trivial_subgroup(g) : make_subgroup(g, parse_ints(o.subgroup));
  int ui = 0, vi = 0;
  {
    std::stringstream ss(o.param);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "--param expects u=<i>,v=<j>");
      std::string k = tok.substr(0, eq);
      int val = parse_ints(tok.substr(eq + 1)).at(0);
      if (k == "u") ui = val;
      else if (k == "v") vi = val;
      else throw Error(ErrorKind::ParseError, "unknown parameter key '" + k + "'");
    }
  }
  const auto& irr = inst->base_irreps();
  if (ui < 0 || ui >= static_cast<int>(irr.size())) throw Error(ErrorKind::ValidationError, "u index out of range");
  ProjectiveRep V = covariant_projective(*inst, irr[ui], l0);
  auto vs = irreducible_projreps(inst->lambda(), l0, inverse(V.cocycle), inst->seed);
  if (vi < 0 || vi >= static_cast<int>(vs.size())) throw Error(ErrorKind::ValidationError, "v index out of range");
  RepParameter p{irr[ui], V, vs[vi], l0};
  validate_parameter(*inst, p, true);
  ProductPtr pp = inst->product(l0);
  Corep u = csr_corep(*inst, p);
  InducedRep ind = induce(*pp, u);
  InducedCharacter ch = induced_character(*pp, u);
  double diff = (ch.full - character(ind.result)).cwiseAbs().maxCoeff();
  if (diff > tol().verify) throw Error(ErrorKind::FormulaMismatch, "induced character differs from the trace by " + fmt(diff));
  bool direct = mor_dim(ind.result, ind.result) == 1;
  bool mackey = mackey_irreducible(*pp, u);
  if (direct != mackey) throw Error(ErrorKind::OracleDisagreement, "Mackey criterion disagrees with the direct check");
  json doc = {{"command", "induce"},
              {"instance", inst->name()},
              {"lambda0", l0.elems},
              {"u", ui},
              {"v", vi},
              {"dim", ind.result.dim},
              {"character", vec_json(ch.full)},
              {"irreducible", direct},
              {"mackey_criterion", mackey}};
  std::string human = "induced from L0 = " + list_str(l0.elems) + " with u=" + std::to_string(ui) +
                      ", v=" + std::to_string(vi) + ": dim " + std::to_string(ind.result.dim) + "\ncharacter:";
  for (Eigen::Index i = 0; i < ch.full.size(); ++i) human += " " + cfmt(ch.full(i));
  human += std::string("\nirreducible: ") + (direct ? "yes" : "no") + " (Mackey criterion agrees)\n";
  emit(o, doc, human);
  return 0;
}

int cmd_conj(const Options& o) {
  auto inst = load(o);
  auto cl = classify(*inst);
  auto inv = conjugation_involution(*inst, cl);
  const auto& hf = *inst->full()->hopf;
  json rows = json::array();
  std::string human = "instance " + inst->name() + ": conjugation\n";
  bool ok = true;
  for (size_t i = 0; i < cl.size(); ++i) {
    RepParameter pb = conjugate_parameter(*inst, cl[i].param);
    Vec cb = character(induce(*inst->product(pb.lambda0), csr_corep(*inst, pb)).result);
    Vec wb = character(conjugate(cl[i].induced).ubar);
    long long m = round_int(hf.h(hf.mul(hf.adj(wb), cb)), "conjugate parameter check");
    ok = ok && m == 1;
    rows.push_back({{"label", "W" + std::to_string(i)}, {"conjugate", "W" + std::to_string(inv[i])}, {"parameter_check", m == 1}});
    human += "  conj(W" + std::to_string(i) + ") = W" + std::to_string(inv[i]) + (m == 1 ? "" : "  [parameter route disagrees]") + "\n";
  }
  json doc = {{"command", "conj"}, {"instance", inst->name()}, {"involution", rows}, {"ok", ok}};
  emit(o, doc, human);
  return ok ? 0 : 2;
}

int cmd_oracle(const Options& o) {
  auto inst = load(o);
  const auto& hf = *inst->full()->hopf;
  DualBlocks b = dual_blocks(hf, inst->seed);
  Cube nn = dual_fusion(hf, b);
  const int n = static_cast<int>(b.dims.size());
  json coeffs = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (nn[i][j][k]) coeffs.push_back({i, j, k, nn[i][j][k]});
  json doc = {{"command", "oracle"}, {"instance", inst->name()}, {"dims", b.dims}, {"coefficients", coeffs}};
  std::string human = "instance " + inst->name() + ": dual algebra blocks\n  dims:";
  for (int d : b.dims) human += " " + std::to_string(d);
  human += "\n  nonzero fusion coefficients (i j k N): " + std::to_string(coeffs.size()) + "\n";
  for (const auto& c : coeffs) human += "    " + c.dump() + "\n";
  emit(o, doc, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of semidirect products of finite quantum groups by finite groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--seed", o.seed, "Seed for randomized decompositions (default: from the instance file)");
  app.add_option("--tol-build", o.tol_build, "Tolerance for exact-by-construction identities");
  app.add_option("--tol-verify", o.tol_verify, "Tolerance for axiom and invariant checks");
  app.add_option("--tol-accept", o.tol_accept, "Tolerance for scalar extraction");
  app.add_option("--jobs", o.jobs, "Worker threads for fusion")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::map<std::string, int (*)(const Options&)> cmds = {{"check", cmd_check}, {"irr", cmd_irr},   {"fuse", cmd_fuse},
                                                         {"induce", cmd_induce}, {"conj", cmd_conj}, {"oracle", cmd_oracle}};
  std::map<std::string, const char*> help = {{"check", "Verify the Hopf axioms of the base and of the product"},
                                             {"irr", "Classify irreducible representations"},
                                             {"fuse", "Fusion rules with the three-way agreement report"},
                                             {"induce", "Induce one parameter and report its character"},
                                             {"conj", "Conjugation involution on the classified irreps"},
                                             {"oracle", "Dual-algebra dimensions and fusion only"}};
  for (auto& [name, fn] : cmds) {
    auto* sub = app.add_subcommand(name, help[name]);
    sub->add_option("file", o.file, "Instance file")->required();
    if (name == "induce") {
      sub->add_option("--subgroup", o.subgroup, "Comma-separated elements of L0");
      sub->add_option("--param", o.param, "u=<base irrep index>,v=<projective irrep index>");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  tol().build = o.tol_build;
  tol().verify = o.tol_verify;
  tol().accept = o.tol_accept;
  if (o.seed >= 0) tol().seed = static_cast<std::uint64_t>(o.seed);

  for (auto& [name, fn] : cmds) {
    if (!app.got_subcommand(name)) continue;
    try {
      return fn(o);
    } catch (const Error& e) {
      int code = e.is_oracle_failure() ? 2 : 1;
      if (o.format == "structured")
        std::cout << json{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}.dump(2) << "\n";
      std::cerr << "error: " << e.what() << "\n";
      return code;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}

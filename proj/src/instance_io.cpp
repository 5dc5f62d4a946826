#include "qmackey/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmackey/errors.hpp"

namespace qm {

using nlohmann::json;

namespace {

cplx scalar(const json& x) {
  if (x.is_number()) return {x.get<double>(), 0.0};
  if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number())
    return {x[0].get<double>(), x[1].get<double>()};
  throw Error(ErrorKind::ParseError, "expected a number or [re, im], got " + x.dump());
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return obj.at(key);
}

int as_int(const json& x, const char* what) {
  if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
  return x.get<int>();
}

int index_in(const json& x, int bound, const char* what) {
  int v = as_int(x, what);
  if (v < 0 || v >= bound) throw Error(ErrorKind::ParseError, std::string(what) + " index " + std::to_string(v) + " out of range");
  return v;
}

FiniteGroup parse_group(const json& g, const char* what) {
  const int n = as_int(field(g, "order"), "order");
  const json& t = field(g, "table");
  if (n <= 0 || !t.is_array() || static_cast<int>(t.size()) != n)
    throw Error(ErrorKind::ParseError, std::string(what) + ": table must have 'order' rows");
  std::vector<std::vector<int>> table(n);
  for (int i = 0; i < n; ++i) {
    if (!t[i].is_array() || static_cast<int>(t[i].size()) != n)
      throw Error(ErrorKind::ParseError, std::string(what) + ": row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) table[i].push_back(index_in(t[i][j], n, "table entry"));
  }
  return FiniteGroup::from_table(table);
}

Vec parse_vec(const json& v, int d, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != d)
    throw Error(ErrorKind::ParseError, std::string(what) + " must have length " + std::to_string(d));
  Vec out(d);
  for (int i = 0; i < d; ++i) out(i) = scalar(v[i]);
  return out;
}

Mat parse_sparse(const json& v, int d, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a list of [row, col, x]");
  Mat m = Mat::Zero(d, d);
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::ParseError, std::string(what) + " entries are [row, col, x]");
    m(index_in(e[0], d, what), index_in(e[1], d, what)) += scalar(e[2]);
  }
  return m;
}

HopfPtr parse_raw(const json& b) {
  auto h = std::make_shared<HopfData>();
  const int d = as_int(field(b, "dim"), "dim");
  if (d <= 0) throw Error(ErrorKind::ParseError, "dim must be positive");
  h->dim = d;
  h->left.assign(d, Mat::Zero(d, d));
  h->comult.assign(d, Mat::Zero(d, d));
  for (const auto& e : field(b, "mult")) {
    if (!e.is_array() || e.size() != 4) throw Error(ErrorKind::ParseError, "mult entries are [i, j, c, x]");
    h->left[index_in(e[0], d, "mult")](index_in(e[2], d, "mult"), index_in(e[1], d, "mult")) += scalar(e[3]);
  }
  for (const auto& e : field(b, "comult")) {
    if (!e.is_array() || e.size() != 4) throw Error(ErrorKind::ParseError, "comult entries are [i, j, k, x]");
    h->comult[index_in(e[0], d, "comult")](index_in(e[1], d, "comult"), index_in(e[2], d, "comult")) += scalar(e[3]);
  }
  h->unit = parse_vec(field(b, "unit"), d, "unit");
  h->counit = parse_vec(field(b, "counit"), d, "counit");
  h->antipode = parse_sparse(field(b, "antipode"), d, "antipode");
  h->star = parse_sparse(field(b, "star"), d, "star");
  h->finalize();
  if (b.contains("haar")) {
    h->haar = parse_vec(b.at("haar"), d, "haar");
  } else {
    h->haar = haar_solve(*h);
  }
  h->has_haar = true;
  return h;
}

}  // namespace

InstanceSpec parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  InstanceSpec s;
  try {
    s.name = j.value("name", std::string("unnamed"));
    s.kind = field(j, "kind").get<std::string>();
    if (j.contains("seed")) {
      s.seed = j.at("seed").get<std::uint64_t>();
      s.has_seed = true;
    }
    s.lambda = std::make_shared<FiniteGroup>(parse_group(field(j, "lambda"), "lambda"));
    const json& act = field(j, "action");
    if (!act.is_array() || static_cast<int>(act.size()) != s.lambda->order)
      throw Error(ErrorKind::ParseError, "action must list one entry per element of lambda");
    if (s.kind == "function_algebra" || s.kind == "group_algebra") {
      s.base_group = std::make_shared<FiniteGroup>(parse_group(field(j, "base"), "base"));
      s.base = s.kind == "function_algebra" ? function_algebra(*s.base_group) : group_algebra(*s.base_group);
      for (const auto& p : act) {
        if (!p.is_array() || static_cast<int>(p.size()) != s.base_group->order)
          throw Error(ErrorKind::ParseError, "each action entry must be a permutation of the base group");
        std::vector<int> perm;
        for (const auto& x : p) perm.push_back(index_in(x, s.base_group->order, "action"));
        s.perms.push_back(perm);
      }
    } else if (s.kind == "raw_hopf") {
      s.base = parse_raw(field(j, "base"));
      for (const auto& m : act) s.matrices.push_back(parse_sparse(m, s.base->dim, "action"));
    } else {
      throw Error(ErrorKind::ParseError, "unknown kind '" + s.kind + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return s;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

std::unique_ptr<SemidirectInstance> make_instance(const InstanceSpec& s) {
  AxiomReport rep = verify_axioms(*s.base);
  if (!rep.ok) {
    std::string msg = "base algebra fails the Hopf axioms:";
    for (auto& [n, r] : rep.residuals)
      if (!(r <= tol().verify)) msg += " " + n + "=" + std::to_string(r);
    throw Error(ErrorKind::ValidationError, msg);
  }
  std::vector<Mat> alpha;
  if (s.kind == "function_algebra")
    alpha = action_function_algebra(*s.base, *s.base_group, *s.lambda, s.perms);
  else if (s.kind == "group_algebra")
    alpha = action_group_algebra(*s.base, *s.base_group, *s.lambda, s.perms);
  else
    alpha = action_raw(*s.base, *s.lambda, s.matrices);
  auto inst = std::make_unique<SemidirectInstance>(s.name, s.base, s.lambda, std::move(alpha));
  if (s.has_seed) inst->seed = s.seed;
  return inst;
}

std::unique_ptr<SemidirectInstance> load_instance(const std::string& path) {
  return make_instance(parse_instance_file(path));
}

}  // namespace qm

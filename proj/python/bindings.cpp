#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qmackey/errors.hpp"
#include "qmackey/instance_io.hpp"
#include "qmackey/mackey_fusion.hpp"

namespace py = pybind11;
using namespace qm;

namespace {

struct PyInstance {
  std::unique_ptr<SemidirectInstance> inst;
  std::optional<std::vector<ClassifiedIrr>> irrs;

  const std::vector<ClassifiedIrr>& classified() {
    if (!irrs) {
      py::gil_scoped_release release;
      irrs = classify(*inst);
    }
    return *irrs;
  }
};

py::dict residuals(const AxiomReport& r) {
  py::dict d;
  for (auto& [n, v] : r.residuals) d[py::str(n)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Representation theory of semidirect products of finite quantum groups";
  static py::exception<Error> exc(m, "QMackeyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(exc.ptr())(e.what());
      err.attr("kind") = kind_name(e.kind());
      err.attr("oracle_failure") = e.is_oracle_failure();
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  py::class_<PyInstance>(m, "Instance")
      .def_static("load", [](const std::string& path) { return PyInstance{load_instance(path), std::nullopt}; },
                  py::arg("path"))
      .def_property_readonly("name", [](const PyInstance& p) { return p.inst->name(); })
      .def_property_readonly("base_dim", [](const PyInstance& p) { return p.inst->base()->dim; })
      .def_property_readonly("lambda_order", [](const PyInstance& p) { return p.inst->lambda()->order; })
      .def_property_readonly("product_dim", [](const PyInstance& p) { return p.inst->full()->hopf->dim; })
      .def("check", [](PyInstance& p) {
        const auto& prod = *p.inst->full()->hopf;
        py::dict d;
        d["base"] = residuals(verify_axioms(*p.inst->base()));
        AxiomReport pr = verify_axioms(prod);
        d["product"] = residuals(pr);
        d["haar_residual"] = (haar_solve(prod) - prod.haar).cwiseAbs().maxCoeff();
        d["kac"] = py::make_tuple(is_kac(*p.inst->base()), is_kac(prod));
        d["ok"] = pr.ok;
        return d;
      })
      .def("classify", [](PyInstance& p) {
        py::list out;
        for (const auto& c : p.classified()) {
          py::dict d;
          d["dim"] = c.dim;
          d["orbit_rep"] = c.orbit_rep;
          d["lambda0"] = c.param.lambda0.elems;
          d["cocycle_trivial"] = c.cocycle_trivial;
          d["dim_u"] = c.param.u.dim;
          d["dim_v"] = c.param.v.dim;
          out.append(d);
        }
        return out;
      })
      .def("dims", [](PyInstance& p) {
        std::vector<int> d;
        for (const auto& c : p.classified()) d.push_back(c.dim);
        return d;
      })
      .def("oracle_dims", [](PyInstance& p) { return dual_blocks(*p.inst->full()->hopf, p.inst->seed).dims; })
      .def("fusion", [](PyInstance& p, int jobs) {
        const auto& cl = p.classified();
        FusionTable t;
        {
          py::gil_scoped_release release;
          t = fusion(*p.inst, cl, jobs);
        }
        py::dict d;
        d["formula"] = t.formula;
        d["brute"] = t.brute;
        d["dual"] = t.dual;
        d["frobenius_ok"] = t.frobenius_ok;
        d["agree"] = t.agree();
        return d;
      }, py::arg("jobs") = 1)
      .def("conjugation", [](PyInstance& p) { return conjugation_involution(*p.inst, p.classified()); })
      .def("induce", [](PyInstance& p, std::vector<int> subgroup, int u, int v) {
        const auto& g = *p.inst->lambda();
        Subgroup l0 = make_subgroup(g, std::move(subgroup));
        const auto& irr = p.inst->base_irreps();
        ProjectiveRep V = covariant_projective(*p.inst, irr.at(u), l0);
        auto vs = irreducible_projreps(p.inst->lambda(), l0, inverse(V.cocycle), p.inst->seed);
        RepParameter par{irr.at(u), V, vs.at(v), l0};
        Corep c = csr_corep(*p.inst, par);
        InducedRep ind = induce(*p.inst->product(l0), c);
        py::dict d;
        d["dim"] = ind.result.dim;
        d["irreducible"] = mor_dim(ind.result, ind.result) == 1;
        d["mackey"] = mackey_irreducible(*p.inst->product(l0), c);
        return d;
      }, py::arg("subgroup"), py::arg("u"), py::arg("v") = 0);
}

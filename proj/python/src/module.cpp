#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xlk/pipelines.hpp"

namespace py = pybind11;
using namespace xlk;

namespace {

// Reports cross the boundary as JSON text; the package decodes them.
RunConfig config_from(const std::string& text) {
  RunConfig c = text.empty() ? RunConfig{} : RunConfig::from_json(Json::parse(text));
  c.validate();
  return c;
}

BraidWord braid_from(const std::string& word, int strands) { return BraidWord::parse(word, strands); }

Json certify_named(const std::string& name, const RunConfig& c) {
  if (name == "10_98") return certify_10_98(c);
  if (name == "10_99") return certify_10_99(c);
  if (name == "10_123") return certify_10_123(c);
  if (name == "parabolic") return certify_parabolic(c);
  throw Error(ErrorKind::Domain, "unknown instance " + name);
}

}  // namespace

PYBIND11_MODULE(_xlk, m) {
  m.doc() = "character variety certificates";
  m.attr("__version__") = XLK_VERSION;

  py::register_exception<Error>(m, "XlkError", PyExc_RuntimeError);

  m.def("default_config", [] { return RunConfig{}.to_json().dump(); });
  m.def("data_dir", &data_dir);

  m.def("trace_action", [](const std::string& braid) { return trace_action_report(braid_from(braid, 3)).dump(); },
        py::arg("braid"));
  m.def("quotient_claim",
        [](const std::string& braid, const std::string& cfg) {
          return quotient_claim_report(braid_from(braid, 3), config_from(cfg)).dump();
        },
        py::arg("braid"), py::arg("config") = "");
  m.def("riley",
        [](const std::string& tb, const std::vector<double>& ms) {
          std::vector<Complex> zs(ms.begin(), ms.end());
          return riley_report(tb, zs).dump();
        },
        py::arg("two_bridge"), py::arg("m") = std::vector<double>{});
  m.def("u_points",
        [](const std::string& braid, const std::string& cfg) {
          return u_points_report(braid_from(braid, 3), config_from(cfg)).dump();
        },
        py::arg("braid"), py::arg("config") = "");
  m.def("hypothesis",
        [](const std::string& braid, int strands, const std::string& involution, const std::string& cfg) {
          return hypothesis_report(braid_from(braid, strands), Involution::parse(involution, strands),
                                   config_from(cfg)).dump();
        },
        py::arg("braid"), py::arg("strands") = 3, py::arg("involution") = "reflect", py::arg("config") = "");
  m.def("turks_head",
        [](int p, int q, bool certify, const std::string& cfg) {
          return turks_head_report(p, q, certify, config_from(cfg)).dump();
        },
        py::arg("p"), py::arg("q"), py::arg("certify") = false, py::arg("config") = "");

  m.def("certify",
        [](const std::string& name, const std::string& cfg) {
          RunConfig c = config_from(cfg);
          py::gil_scoped_release nogil;
          return emit_certificate(certify_named(name, c));
        },
        py::arg("name"), py::arg("config") = "");
  m.def("verify",
        [](const std::string& text) {
          Json cert = Json::parse(text);
          VerifyReport r;
          {
            py::gil_scoped_release nogil;
            r = verify_certificate(cert);
          }
          return py::make_tuple(r.ok, r.problems);
        },
        py::arg("certificate"));
  m.def("passed", [](const std::string& text) { return certificate_passed(Json::parse(text)); },
        py::arg("certificate"));
}

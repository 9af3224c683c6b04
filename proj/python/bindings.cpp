#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oortlab/commands.hpp"
#include "oortlab/constructors.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/group_spec.hpp"
#include "oortlab/serialize.hpp"
#include "oortlab/verdict.hpp"

namespace py = pybind11;
using namespace oortlab;

namespace {

std::vector<std::vector<Point>> generator_images(const Group& g) {
  std::vector<std::vector<Point>> out;
  for (const auto& x : g.generators()) out.emplace_back(x.images().begin(), x.images().end());
  return out;
}

// Raises the CLI's error text as ValueError, or returns stdout text and the exit code.
py::tuple unwrap(const CommandOutput& o) {
  if (o.exit_code == exit_code::kInputError || o.exit_code == exit_code::kCapExceeded) {
    throw py::value_error(o.err);
  }
  return py::make_tuple(o.out, o.exit_code);
}

}  // namespace

PYBIND11_MODULE(_oortlab, m) {
  m.doc() = "Permutation-group engine and O-group verdicts";

  // Later registrations are tried first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "OortlabError");
  py::register_exception<CapExceeded>(m, "CapExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base);

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("generators", &generator_images, "Generator image lists (0-based points)")
      .def("contains", [](const Group& g, const std::vector<Point>& images) {
        return g.contains(Permutation(images));
      })
      .def("__repr__", [](const Group& g) {
        return "<Group order=" + std::to_string(g.order()) + " degree=" + std::to_string(g.degree()) + ">";
      });

  m.def("build", [](const std::string& spec) { return build(spec); }, py::arg("spec"));
  m.def("canonical_spec", [](const std::string& spec) { return to_string(parse_group_spec(spec)); },
        py::arg("spec"));

  m.def(
      "verdict_json",
      [](const Group& g, std::uint64_t p, const std::string& route) {
        py::gil_scoped_release release;
        OortVerdict v = route == "def" ? is_o_group_by_definition(g, p) : is_o_group_by_criterion(g, p);
        return verdict_json("", g.order(), v, 0.0, -1);
      },
      py::arg("group"), py::arg("p"), py::arg("route") = "crit");

  m.def(
      "construct_json", [](const std::string& spec) { return unwrap(cmd_construct(spec)); },
      py::arg("spec"));
  m.def(
      "check_json",
      [](const std::string& spec, std::uint64_t p, const std::string& route) {
        RouteChoice r = parse_route(route);
        CommandOutput o;
        {
          py::gil_scoped_release release;
          o = cmd_check(spec, p, r);
        }
        return unwrap(o);
      },
      py::arg("spec"), py::arg("p"), py::arg("route") = "both");
  m.def(
      "audit_json",
      [](const std::string& spec, std::uint64_t p) {
        CommandOutput o;
        {
          py::gil_scoped_release release;
          o = cmd_audit(spec, p);
        }
        return unwrap(o);
      },
      py::arg("spec"), py::arg("p"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "ordlat/formula.hpp"
#include "ordlat/galois.hpp"
#include "ordlat/grid.hpp"
#include "ordlat/presets.hpp"
#include "ordlat/verify.hpp"
#include "ordlat/workspace.hpp"

namespace py = pybind11;
using namespace ordlat;

namespace {

std::vector<Tuple> extension_list(const Relation& r) {
  return std::vector<Tuple>(r.extension.begin(), r.extension.end());
}

// infinity surfaces as float('inf') so comparisons behave naturally
py::object diff_py(const FiniteStructure& s, int a, int b) {
  ExtendedInt d = diff(s, a, b);
  if (d.is_finite()) return py::int_(d.value());
  return py::float_(std::numeric_limits<double>::infinity());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "definability lattice engine for finite linear orders and grids";

  py::register_exception<Error>(m, "EngineError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_property_readonly("images", &Permutation::images)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& p, int i) {
        if (i < 0 || i >= p.size()) throw Error("point out of range");
        return p(i);
      })
      .def("apply", &Permutation::apply, py::arg("tuple"))
      .def("inverse", &Permutation::inverse)
      .def("__mul__", [](const Permutation& p, const Permutation& q) {
        return compose(p, q);
      })
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__lt__", [](const Permutation& p, const Permutation& q) { return p < q; })
      .def("__hash__", [](const Permutation& p) {
        size_t h = 0;
        for (int x : p.images()) h = h * 1000003u + static_cast<size_t>(x);
        return h;
      })
      .def("__repr__", [](const Permutation& p) {
        return "Permutation(" + format_permutation(p) + ")";
      });

  py::class_<PermutationGroup>(m, "PermutationGroup")
      .def_property_readonly("order", &PermutationGroup::order)
      .def_property_readonly("members", &PermutationGroup::members)
      .def("__len__", &PermutationGroup::order)
      .def("__contains__", &PermutationGroup::contains)
      .def("subgroup_of", &PermutationGroup::subgroup_of)
      .def("__eq__", [](const PermutationGroup& a, const PermutationGroup& b) {
        return a == b;
      })
      .def("__repr__", [](const PermutationGroup& g) {
        return "PermutationGroup(order=" + std::to_string(g.order()) + ")";
      });

  py::class_<Relation>(m, "Relation")
      .def_readonly("name", &Relation::name)
      .def_readonly("arity", &Relation::arity)
      .def_property_readonly("tuples", &extension_list)
      .def("__contains__", &Relation::contains)
      .def("__len__", [](const Relation& r) { return r.extension.size(); })
      .def("__repr__", [](const Relation& r) {
        return "Relation(" + r.name + "/" + std::to_string(r.arity) + ", " +
               std::to_string(r.extension.size()) + " tuples)";
      });

  py::class_<FiniteStructure>(m, "Structure")
      .def_static("linear", &FiniteStructure::linear, py::arg("n"))
      .def_static(
          "grid",
          [](int m_, int h) { return FiniteStructure::grid(m_, h); },
          py::arg("m"), py::arg("h"))
      .def_property_readonly("size", &FiniteStructure::size)
      .def_property_readonly("is_grid", &FiniteStructure::is_grid)
      .def_property_readonly("verticals",
                             [](const FiniteStructure& s) { return s.grid_shape().verticals; })
      .def_property_readonly("height",
                             [](const FiniteStructure& s) { return s.grid_shape().height; })
      .def("point", &FiniteStructure::point, py::arg("v"), py::arg("z"))
      .def("point_name", &FiniteStructure::point_name, py::arg("i"))
      .def("add_preset",
           [](FiniteStructure& s, const std::string& name, const std::string& preset,
              int n) {
             Relation r = make_preset(s, parse_preset_name(preset), n);
             r.name = name;
             s.add_relation(std::move(r));
           },
           py::arg("name"), py::arg("preset"), py::arg("n") = 1)
      .def("add_formula",
           [](FiniteStructure& s, const std::string& name, const std::string& text) {
             Relation r = evaluate(parse(text), s);
             r.name = name;
             s.add_relation(std::move(r));
           },
           py::arg("name"), py::arg("text"))
      .def("relation", &FiniteStructure::relation, py::arg("name"))
      .def("relation_names", [](const FiniteStructure& s) {
        std::vector<std::string> names;
        for (const auto& [name, rel] : s.relations()) names.push_back(name);
        return names;
      });

  py::class_<PermClass>(m, "PermClass")
      .def_readonly("systemic", &PermClass::systemic)
      .def_readonly("positive", &PermClass::positive)
      .def_readonly("negative", &PermClass::negative)
      .def_readonly("shift", &PermClass::shift)
      .def_readonly("vertical_shift", &PermClass::vertical_shift)
      .def("__repr__", [](const PermClass& c) {
        auto flag = [](bool b) { return b ? "yes" : "no"; };
        return std::string("PermClass(systemic=") + flag(c.systemic) +
               ", positive=" + flag(c.positive) + ", negative=" + flag(c.negative) +
               ", shift=" + flag(c.shift) + ", vertical_shift=" + flag(c.vertical_shift) +
               ")";
      });

  py::class_<Witness>(m, "Witness")
      .def_readonly("permutation", &Witness::permutation)
      .def_readonly("preserved", &Witness::preserved)
      .def_readonly("broken", &Witness::broken)
      .def_readonly("tuple", &Witness::tuple)
      .def("__repr__", [](const Witness& w) {
        return "Witness(perm=" + format_permutation(w.permutation) + ", breaks=" +
               w.broken + ")";
      });

  py::class_<HasseDiagram>(m, "HasseDiagram")
      .def_property_readonly("labels",
                             [](const HasseDiagram& d) { return d.labels; })
      .def_property_readonly("orders",
                             [](const HasseDiagram& d) {
                               std::vector<size_t> orders;
                               for (const auto& n : d.nodes) orders.push_back(n.group.order());
                               return orders;
                             })
      .def_property_readonly("edges", [](const HasseDiagram& d) { return d.edges; })
      .def("to_dot", [](const HasseDiagram& d) { return to_dot(d); });

  m.def("compose", &compose, py::arg("p"), py::arg("q"));
  m.def("invert", &invert, py::arg("p"));
  m.def("generate_group", &generate_group, py::arg("n"), py::arg("generators"));

  m.def("diff", &diff_py, py::arg("s"), py::arg("a"), py::arg("b"));
  m.def("classify", &classify, py::arg("s"), py::arg("p"));
  m.def("initiate", &initiate, py::arg("s"), py::arg("p"));
  m.def("lift", &lift, py::arg("s"), py::arg("vertical_perm"), py::arg("reverse"));
  m.def("lift_uniform", &lift_uniform, py::arg("s"), py::arg("vertical_perm"),
        py::arg("reverse"));
  m.def("m_indistinguishable", &m_indistinguishable, py::arg("s"), py::arg("a"),
        py::arg("b"), py::arg("m"));
  m.def(
      "boundary",
      [](const FiniteStructure& s, const std::string& rel, std::optional<int> cap,
         int jobs) -> std::optional<int> {
        int limit = cap.value_or(s.grid_shape().height - 1);
        return boundary(s, s.relation(rel), limit, jobs);
      },
      py::arg("s"), py::arg("relation"), py::arg("cap") = py::none(), py::arg("jobs") = 1);
  m.def("place_blocks", &place_blocks, py::arg("s"), py::arg("blocks"),
        py::arg("verticals"), py::arg("gap"));
  m.def(
      "section_classify",
      [](const Permutation& q) {
        std::vector<std::pair<int, std::string>> out;
        for (const SectionMatch& match : section_classify(q)) {
          out.emplace_back(match.section.split, match.condition_i ? "i" : "ii");
        }
        return out;
      },
      py::arg("q"));

  m.def(
      "preserves",
      [](const Permutation& p, const Relation& r) { return preserves(p, r); },
      py::arg("p"), py::arg("relation"));
  m.def(
      "breaking_tuple",
      [](const Permutation& p, const Relation& r) { return breaking_tuple(p, r); },
      py::arg("p"), py::arg("relation"));
  m.def(
      "aut_group",
      [](const FiniteStructure& s, const std::vector<std::string>& names, int jobs) {
        return make_space(s, names, jobs).group;
      },
      py::arg("s"), py::arg("relations"), py::arg("jobs") = 1);
  m.def(
      "aut_group_exhaustive",
      [](const FiniteStructure& s, const std::vector<std::string>& names) {
        std::vector<Relation> rels;
        for (const std::string& name : names) rels.push_back(s.relation(name));
        return aut_group_exhaustive(s, rels);
      },
      py::arg("s"), py::arg("relations"));
  m.def(
      "definable",
      [](const FiniteStructure& s, const std::string& target,
         const std::vector<std::string>& base, int jobs) -> std::optional<Witness> {
        return definable(s, s.relation(target), base, jobs);
      },
      py::arg("s"), py::arg("target"), py::arg("base"), py::arg("jobs") = 1);
  m.def(
      "hasse",
      [](const FiniteStructure& s, const std::vector<std::vector<std::string>>& sets,
         int jobs) {
        std::vector<DefinabilitySpace> spaces;
        for (const auto& names : sets) spaces.push_back(make_space(s, names, jobs));
        return hasse(std::move(spaces));
      },
      py::arg("s"), py::arg("generator_sets"), py::arg("jobs") = 1);
  m.def(
      "strictness_witnesses",
      [](const FiniteStructure& s, const HasseDiagram& d) {
        return strictness_witnesses(s, d);
      },
      py::arg("s"), py::arg("diagram"));

  m.def(
      "parse_formula",
      [](const std::string& text) { return print(parse(text)); },
      py::arg("text"), "parse a definition and return its canonical form");

  m.def(
      "verify_paper",
      [](int jobs) {
        VerifyOptions options;
        options.jobs = jobs;
        VerifyReport report = run_verify(options);
        return py::make_tuple(report.all_pass(), report.text());
      },
      py::arg("jobs") = 1, "run the built-in verification suite");
}

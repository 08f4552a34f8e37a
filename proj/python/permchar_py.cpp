#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permchar/catalog.hpp"
#include "permchar/cli.hpp"
#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"
#include "permchar/group_file.hpp"
#include "permchar/report.hpp"
#include "permchar/sweep.hpp"
#include "permchar/theorems.hpp"

namespace py = pybind11;
using namespace permchar;

namespace {

// Accepts either a Permutation or a cycle-notation string.
Permutation as_element(const PermGroup& g, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return perm_from_cycles(obj.cast<std::string>(), g.degree());
  return obj.cast<Permutation>();
}

// Accepts a Subgroup or the subgroup-argument string form ("(1 2);(1 2 3)").
SubgroupHandle as_subgroup(const PermGroup& g, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_subgroup_arg(obj.cast<std::string>(), g);
  return obj.cast<SubgroupHandle>();
}

std::vector<std::int64_t> values(const PermutationCharacter& chi) {
  return {chi.values().begin(), chi.values().end()};
}

std::vector<Permutation> permutations(std::span<const Permutation> s) { return {s.begin(), s.end()}; }

Format format_of(const std::string& name) { return parse_format(name); }

}  // namespace

PYBIND11_MODULE(_permchar, m) {
  m.doc() = "Permutation groups, coset actions and permutation characters";

  static py::exception<Error> error_type(m, "PermcharError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("line") = e.line();
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](std::vector<Point> images) { return perm_from_images(std::move(images)); }),
           py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("degree"))
      .def_static("from_cycles", [](const std::string& text, std::size_t degree) { return perm_from_cycles(text, degree); },
                  py::arg("text"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); })
      .def_property_readonly("order", &Permutation::element_order)
      .def("is_identity", &Permutation::is_identity)
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def("__call__", [](const Permutation& p, Point x) {
        if (x >= p.degree()) throw py::index_error("point out of range");
        return p(x);
      })
      .def("__mul__", [](const Permutation& p, const Permutation& q) { return compose(p, q); })
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__lt__", [](const Permutation& p, const Permutation& q) { return p < q; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); })
      .def("__str__", [](const Permutation& p) { return to_cycle_string(p); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + to_cycle_string(p) + "')"; });

  py::class_<SubgroupHandle>(m, "Subgroup")
      .def_property_readonly("order", &SubgroupHandle::order)
      .def_property_readonly("generators", [](const SubgroupHandle& s) { return permutations(s.generators()); })
      .def_property_readonly("label", &SubgroupHandle::label)
      .def("elements", &SubgroupHandle::elements)
      .def("__contains__", [](const SubgroupHandle& s, const Permutation& p) { return s.contains(p); })
      .def("__len__", &SubgroupHandle::order)
      .def("__eq__", [](const SubgroupHandle& a, const SubgroupHandle& b) { return a == b; })
      .def("__repr__", [](const SubgroupHandle& s) {
        return "Subgroup(<" + s.label() + ">, order " + std::to_string(s.order()) + ")";
      });

  py::class_<PermGroup>(m, "Group")
      .def_static("catalog", [](const std::string& name, std::size_t cap) { return catalog_lookup(name, cap); },
                  py::arg("name"), py::arg("order_cap") = kDefaultOrderCap)
      .def_static("from_generators",
                  [](std::size_t degree, const std::vector<std::string>& gens, std::string name, std::size_t cap) {
                    std::vector<Permutation> perms;
                    for (const auto& g : gens) perms.push_back(perm_from_cycles(g, degree));
                    return group_from_generators(degree, std::move(perms), cap, std::move(name));
                  },
                  py::arg("degree"), py::arg("generators"), py::arg("name") = "",
                  py::arg("order_cap") = kDefaultOrderCap)
      .def_static("parse", [](const std::string& text, std::size_t cap) { return parse_group_file(text, cap); },
                  py::arg("text"), py::arg("order_cap") = kDefaultOrderCap)
      .def_property_readonly("name", &PermGroup::name)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def_property_readonly("generators", [](const PermGroup& g) { return permutations(g.generators()); })
      .def("elements", [](const PermGroup& g) { return permutations(g.elements()); })
      .def("classes",
           [](const PermGroup& g) {
             std::vector<std::vector<Permutation>> out;
             for (const auto& cls : g.classes()) {
               auto& members = out.emplace_back();
               for (ElementIndex x : cls.members) members.push_back(g.element(x));
             }
             return out;
           })
      .def("stabilizer_chain_order", [](const PermGroup& g) { return order_by_stabilizer_chain(g); })
      .def("__contains__", [](const PermGroup& g, const Permutation& p) { return contains(g, p); })
      .def("__len__", &PermGroup::order)
      .def("subgroup", [](const PermGroup& g, const std::string& text) { return parse_subgroup_arg(text, g); },
           py::arg("generators"))
      .def("subgroups", [](const PermGroup& g, std::size_t cap) { return subgroups(g, cap); },
           py::arg("cap") = kDefaultSweepCap)
      .def("normal_subgroups", [](const PermGroup& g, std::size_t cap) { return normal_subgroups(g, cap); },
           py::arg("cap") = kDefaultSweepCap)
      .def("is_normal", [](const PermGroup& g, const py::object& s) { return is_normal(g, as_subgroup(g, s)); })
      .def("to_file", [](const PermGroup& g) { return render_group_file(g); })
      .def("__repr__", [](const PermGroup& g) { return describe_group(g); });

  m.def("catalog_names", [](std::size_t max_order) {
    std::vector<std::string> out;
    for (const CatalogEntry* e : catalog_selection(max_order)) out.push_back(e->name);
    return out;
  }, py::arg("max_order") = std::numeric_limits<std::size_t>::max());

  m.def("perm_character",
        [](const PermGroup& g, const py::object& u) { return values(perm_character(g, as_subgroup(g, u))); },
        py::arg("group"), py::arg("u"), "Values of 1_U^G on the conjugacy classes, in class order.");
  m.def("character_value",
        [](const PermGroup& g, const py::object& u, const py::object& x) {
          return character_value(perm_character(g, as_subgroup(g, u)), as_element(g, x));
        },
        py::arg("group"), py::arg("u"), py::arg("g"));
  m.def("frobenius_value",
        [](const PermGroup& g, const py::object& u, const py::object& x) {
          return frobenius_character_value(g, as_subgroup(g, u), g.index_of(as_element(g, x)));
        },
        py::arg("group"), py::arg("u"), py::arg("g"));
  m.def("coset_image",
        [](const PermGroup& g, const py::object& u, const py::object& x) {
          return coset_action(g, as_subgroup(g, u)).image(as_element(g, x));
        },
        py::arg("group"), py::arg("u"), py::arg("g"), "The permutation induced by g on the right cosets of U.");

  py::class_<LemmaCheck>(m, "LemmaCheck")
      .def_readonly("g", &LemmaCheck::g)
      .def_readonly("lhs", &LemmaCheck::lhs)
      .def_readonly("rhs_numerator", &LemmaCheck::rhs_numerator)
      .def_readonly("n_order", &LemmaCheck::n_order)
      .def_readonly("holds", &LemmaCheck::holds)
      .def_property_readonly("rhs", [](const LemmaCheck& c) { return c.rhs().to_string(); })
      .def_property_readonly("fixed_n_orbits",
                             [](const LemmaCheck& c) -> std::optional<std::int64_t> {
                               if (!c.route) return std::nullopt;
                               return c.route->fixed_n_orbits;
                             })
      .def_property_readonly("nonsplit_orbits", [](const LemmaCheck& c) -> std::optional<std::int64_t> {
        if (!c.route) return std::nullopt;
        return c.route->nonsplit_orbits;
      });

  py::class_<FgsCheck>(m, "FgsCheck")
      .def_readonly("g", &FgsCheck::g)
      .def_readonly("h", &FgsCheck::h)
      .def_readonly("r", &FgsCheck::r)
      .def_readonly("holds", &FgsCheck::holds)
      .def_property_readonly("average", [](const FgsCheck& c) { return c.average().to_string(); });

  py::class_<TheoremCheck>(m, "TheoremCheck")
      .def_readonly("hypothesis_holds", &TheoremCheck::hypothesis_holds)
      .def_readonly("conclusion_holds", &TheoremCheck::conclusion_holds)
      .def_readonly("vacuous", &TheoremCheck::vacuous)
      .def("violated", &TheoremCheck::violated);

  m.def("check_lemma",
        [](const PermGroup& g, const py::object& u, const py::object& n, const py::object& element, bool pointwise,
           bool via_fgs) {
          const SubgroupHandle us = as_subgroup(g, u);
          const SubgroupHandle ns = as_subgroup(g, n);
          if (element.is_none()) {
            if (!via_fgs) return check_lemma_all(g, us, ns, pointwise);
            std::vector<LemmaCheck> out;
            for (const auto& cls : g.classes()) {
              out.push_back(check_lemma_via_fgs(g, us, ns, g.element(cls.representative)));
            }
            return out;
          }
          const Permutation x = as_element(g, element);
          return std::vector<LemmaCheck>{via_fgs ? check_lemma_via_fgs(g, us, ns, x) : check_lemma_avg(g, us, ns, x)};
        },
        py::arg("group"), py::arg("u"), py::arg("n"), py::arg("g") = py::none(), py::arg("pointwise") = false,
        py::arg("via_fgs") = false);
  m.def("check_fgs",
        [](const PermGroup& g, const py::object& u, const py::object& n, const py::object& element) {
          return check_fgs(coset_action(g, as_subgroup(g, u)), as_subgroup(g, n), as_element(g, element));
        },
        py::arg("group"), py::arg("u"), py::arg("n"), py::arg("g"),
        "Orbit-splitting check for H = <N, g> acting on the right cosets of U.");
  m.def("check_theorem",
        [](const PermGroup& g, const py::object& u, const py::object& v, const py::object& n) {
          return check_theorem(g, as_subgroup(g, u), as_subgroup(g, v), as_subgroup(g, n));
        },
        py::arg("group"), py::arg("u"), py::arg("v"), py::arg("n"));
  m.def("falsify_klingen",
        [](const PermGroup& g, const py::object& u, const py::object& n) -> py::object {
          const auto w = falsify_klingen_step(g, as_subgroup(g, u), as_subgroup(g, n));
          if (!w) return py::none();
          py::dict d;
          d["sigma"] = w->sigma;
          d["un_value"] = w->un_value;
          d["u_value"] = w->u_value;
          return d;
        },
        py::arg("group"), py::arg("u"), py::arg("n"), "Least sigma with 1_UN(sigma) > 0 and 1_U(sigma) = 0, or None.");
  m.def("gassmann_pairs",
        [](const PermGroup& g, std::size_t cap) {
          py::list out;
          for (const auto& p : gassmann_pairs(g, cap)) out.append(py::make_tuple(p.u, p.v, p.character));
          return out;
        },
        py::arg("group"), py::arg("search_cap") = kDefaultGassmannCap);

  m.def("sweep_json",
        [](std::size_t max_order, const std::vector<std::string>& include, unsigned threads) {
          std::vector<PermGroup> universe = catalog_universe(max_order);
          for (const auto& name : include) universe.push_back(catalog_lookup(name));
          SweepOptions opts;
          opts.threads = threads;
          SweepReport report;
          {
            py::gil_scoped_release release;
            report = sweep(universe, opts);
          }
          return render_report(report, Format::Json);
        },
        py::arg("max_order") = 24, py::arg("include") = std::vector<std::string>{}, py::arg("threads") = 1,
        "Runs the sweep and returns the JSON report.");

  m.def("render_lemma",
        [](const std::vector<LemmaCheck>& checks, const std::string& format) {
          return render_report(checks, format_of(format));
        },
        py::arg("checks"), py::arg("format") = "json");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<std::string> full{"permchar"};
          full.insert(full.end(), args.begin(), args.end());
          std::ostringstream out, err;
          const int code = run_cli(full, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a CLI invocation in-process; returns (exit_code, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "artin/cli.hpp"
#include "artin/cover.hpp"
#include "artin/coxeter.hpp"
#include "artin/engine.hpp"
#include "artin/generate.hpp"
#include "artin/structure.hpp"

namespace py = pybind11;
using namespace artin;

namespace {

// Python talks JSON text at the boundary; no json object marshalling
PresentationGraph graph_from_any(const std::string& text) {
  auto t = text.find_first_not_of(" \t\r\n");
  if (t != std::string::npos && (text[t] == '{' || text[t] == '['))
    return PresentationGraph::from_json_text(text);
  return PresentationGraph::parse(text);
}

VertexSet subset(const PresentationGraph& g,
                 const std::vector<std::string>& names) {
  return VertexSet::from_names(g, names);
}

py::dict profile_dict(const ClassProfile& p) {
  py::dict d;
  d["spherical"] = p.spherical;
  d["affine"] = p.affine;
  d["fc"] = p.fc;
  d["even"] = p.even;
  d["two_dimensional"] = p.two_dimensional;
  d["large"] = p.large;
  d["xl"] = p.xl;
  d["xxl"] = p.xxl;
  d["raag"] = p.raag;
  d["free_graph"] = p.free_graph;
  d["two_two_free_two_dim"] = p.two_two_free_two_dim;
  d["dimension"] = p.dimension;
  return d;
}

EngineOptions options_from(const std::vector<std::string>& disabled,
                           int budget) {
  EngineOptions opt;
  opt.disabled.insert(disabled.begin(), disabled.end());
  opt.splitting_budget = budget;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_artin, m) {
  m.doc() = "certificates for Artin groups from labeled presentation graphs";

  py::class_<PresentationGraph>(m, "Graph")
      .def_static("parse", &graph_from_any, py::arg("text"),
                  "parse the text or JSON graph format")
      .def_property_readonly("vertices", &PresentationGraph::names)
      .def("label",
           [](const PresentationGraph& g, const std::string& u,
              const std::string& v) -> py::object {
             auto m_uv = g.label(g.index_checked(u), g.index_checked(v));
             if (!m_uv) return py::none();
             return py::int_(*m_uv);
           },
           py::arg("u"), py::arg("v"), "edge label, None for infinity")
      .def("to_text", &PresentationGraph::to_text)
      .def("to_json", &PresentationGraph::to_json_text)
      .def("__eq__", [](const PresentationGraph& a,
                        const PresentationGraph& b) { return a == b; })
      .def("__len__", &PresentationGraph::size)
      .def("__repr__", [](const PresentationGraph& g) {
        std::ostringstream os;
        os << "Graph(" << g.size() << " vertices, " << g.edge_count()
           << " edges)";
        return os.str();
      });

  m.def("classify", [](const PresentationGraph& g) {
    return profile_dict(class_profile(g));
  });
  m.def("decomposition", [](const PresentationGraph& g) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& c : spherical_decomposition(g))
      out.emplace_back(c.type.name(), c.component.names(g));
    return out;
  });
  m.def("is_spherical",
        [](const PresentationGraph& g) { return is_spherical(g); });
  m.def("irreducible_factors", [](const PresentationGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : irreducible_factors(g)) out.push_back(f.names(g));
    return out;
  });
  m.def(
      "splittings",
      [](const PresentationGraph& g, const std::string& mode) {
        SplitMode sm = mode == "pairs"     ? SplitMode::NonadjacentPairs
                       : mode == "min-sep" ? SplitMode::MinimalSeparators
                       : mode == "all"     ? SplitMode::All
                                           : throw Error("unknown mode '" + mode + "'");
        auto list = enumerate_visual_splittings(g, sm);
        py::list out;
        for (const auto& s : list.items) {
          py::dict d;
          d["omega"] = s.omega.names(g);
          d["gamma1"] = s.gamma1.names(g);
          d["gamma2"] = s.gamma2.names(g);
          out.append(d);
        }
        return out;
      },
      py::arg("graph"), py::arg("mode") = "min-sep");
  m.def(
      "is_2convex",
      [](const PresentationGraph& g, const std::vector<std::string>& omega) {
        return is_2convex(g, subset(g, omega));
      },
      py::arg("graph"), py::arg("omega"));

  m.def(
      "certify_ah",
      [](const PresentationGraph& g, const std::vector<std::string>& disabled,
         int budget) {
        return certify_ah(g, options_from(disabled, budget)).to_json_text();
      },
      py::arg("graph"), py::arg("disabled") = std::vector<std::string>{},
      py::arg("budget") = 10000,
      "JSON certificate for acylindrical hyperbolicity");
  m.def(
      "certify_wm",
      [](const PresentationGraph& g, const std::vector<std::string>& names,
         const std::vector<std::string>& disabled, int budget) {
        auto opt = options_from(disabled, budget);
        auto cert = names.empty()
                        ? certify_wm_conjecture(g, opt)
                        : certify_wm_subgroup(g, subset(g, names), opt);
        return cert.to_json_text();
      },
      py::arg("graph"), py::arg("subset") = std::vector<std::string>{},
      py::arg("disabled") = std::vector<std::string>{},
      py::arg("budget") = 10000,
      "JSON certificate for weak malnormality");
  m.def(
      "certify_ic",
      [](const PresentationGraph& g, const std::vector<std::string>& disabled,
         int budget) -> py::object {
        auto cert = knows_ic(g, options_from(disabled, budget));
        if (!cert) return py::none();
        return py::str(cert->to_json_text());
      },
      py::arg("graph"), py::arg("disabled") = std::vector<std::string>{},
      py::arg("budget") = 10000,
      "JSON certificate when the intersection property is known, else None");

  m.def("gen", [](const std::string& family, int n, int label,
                  std::uint64_t seed) {
          LabelSpec spec;
          spec.uniform = label;
          spec.seed = seed;
          if (family.rfind("catalog:", 0) == 0)
            return gen_catalog(family.substr(8));
          if (family == "path") return gen_path(n, spec);
          if (family == "cycle") return gen_cycle(n, spec);
          if (family == "complete") return gen_complete(n, spec);
          if (family == "wheel") return gen_wheel(n, spec, spec);
          throw Error("unknown family '" + family + "'");
        },
        py::arg("family"), py::arg("n") = 0, py::arg("label") = 3,
        py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = artin::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run the command line in-process: (exit, out, err)");

  // translators run newest-first: register the base before the derived type
  py::register_exception<Error>(m, "ArtinError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
}

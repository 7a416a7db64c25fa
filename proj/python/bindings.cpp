#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shortcut_forge/decompose.hpp"
#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/oracle.hpp"
#include "shortcut_forge/pipeline.hpp"

namespace py = pybind11;
namespace sf = shortcut_forge;

namespace {

using PyEdges = std::vector<std::pair<sf::Vertex, sf::Vertex>>;

sf::EdgeList to_edges(const PyEdges& in) {
  sf::EdgeList out;
  out.reserve(in.size());
  for (const auto& [u, v] : in) out.push_back({u, v});
  return out;
}

PyEdges from_edges(const sf::EdgeList& in) {
  PyEdges out;
  out.reserve(in.size());
  for (const auto& e : in) out.emplace_back(e.from, e.to);
  return out;
}

sf::SolveParams params(std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed) {
  sf::SolveParams p;
  p.s = s;
  p.d = d;
  p.alpha_d = alpha_d;
  p.seed = seed;
  return p;
}

py::dict report_dict(const sf::VerifyReport& r) {
  py::dict out;
  out["valid"] = r.valid;
  out["reason"] = r.reason;
  if (r.worst_pair) {
    out["worst_pair"] = py::make_tuple(r.worst_pair->from, r.worst_pair->to);
  } else {
    out["worst_pair"] = py::none();
  }
  out["worst_dist"] = r.worst_dist == sf::kUnreachable ? py::object(py::none()) : py::object(py::int_(r.worst_dist));
  out["size"] = r.size;
  return out;
}

py::dict solve_dict(const sf::SolveReport& r, std::size_t s) {
  py::dict out;
  out["edges"] = from_edges(r.shortcut.edges);
  out["regime"] = r.regime;
  out["beta"] = r.beta;
  out["f1_size"] = r.f1_size;
  out["f2_size"] = r.f2_size;
  out["f1_cap"] = r.f1_cap;
  out["f2_cap"] = r.f2_cap;
  out["cap"] = r.cap();
  out["retries"] = r.retries;
  out["alpha_s"] = r.alpha_s(s);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shortcut sets and transitive-closure spanners for directed graphs";

  static py::exception<sf::Error> error(m, "ShortcutForgeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sf::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(sf::to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<sf::DiGraph>(m, "DiGraph")
      .def(py::init([](std::size_t n, const PyEdges& edges) {
             const auto list = to_edges(edges);
             return sf::DiGraph(n, list);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &sf::DiGraph::num_vertices)
      .def_property_readonly("m", &sf::DiGraph::num_edges)
      .def_property_readonly("edges", [](const sf::DiGraph& g) { return from_edges(g.edges()); })
      .def("reaches", &sf::DiGraph::reaches, py::arg("u"), py::arg("v"))
      .def("is_acyclic", &sf::DiGraph::is_acyclic)
      .def("closure_edges", [](const sf::DiGraph& g) { return from_edges(sf::closure_edges(g)); })
      .def("__repr__", [](const sf::DiGraph& g) {
        return "DiGraph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("gen_random_dag", &sf::gen_random_dag, py::arg("n"), py::arg("edge_prob"), py::arg("seed") = 0);
  m.def("gen_path", &sf::gen_path, py::arg("n"));
  m.def("gen_layered", &sf::gen_layered, py::arg("n"), py::arg("layers"), py::arg("edge_prob"), py::arg("seed") = 0);
  m.def("gen_planted_cycles", &sf::gen_planted_cycles, py::arg("n"), py::arg("edge_prob"), py::arg("cycles"),
        py::arg("max_cycle_len"), py::arg("seed") = 0);

  m.def("transitive_reduction", &sf::transitive_reduction, py::arg("g"));
  m.def("diameter", [](const sf::DiGraph& g, const PyEdges& extra) { return sf::diameter(g, to_edges(extra)); },
        py::arg("g"), py::arg("extra") = PyEdges{});
  m.def("scc_condense", [](const sf::DiGraph& g) {
    const auto c = sf::scc_condense(g);
    py::dict out;
    out["dag"] = c.dag;
    out["component_of"] = c.component_of;
    out["representative"] = c.representative;
    return out;
  });
  m.def("verify_shortcut",
        [](const sf::DiGraph& g, const PyEdges& f, std::size_t bound) { return report_dict(sf::verify_shortcut(g, to_edges(f), bound)); },
        py::arg("g"), py::arg("edges"), py::arg("bound"));
  m.def("verify_tc_spanner",
        [](const sf::DiGraph& g, const PyEdges& h, std::size_t bound) { return report_dict(sf::verify_tc_spanner(g, to_edges(h), bound)); },
        py::arg("g"), py::arg("edges"), py::arg("bound"));

  m.def("chain_antichain_decompose", [](const sf::DiGraph& g, std::size_t k) {
    const auto d = sf::chain_antichain_decompose(g, k);
    return py::make_tuple(d.chains, d.antichains);
  }, py::arg("g"), py::arg("k"));
  m.def("path_two_shortcut",
        [](const sf::DiGraph& g, const std::vector<sf::Vertex>& chain) { return from_edges(sf::path_two_shortcut(g, chain)); },
        py::arg("g"), py::arg("chain"));

  m.def("approx_shortcut_dag",
        [](const sf::DiGraph& g, std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed) {
          return solve_dict(sf::approx_shortcut_dag(g, params(s, d, alpha_d, seed)), s);
        },
        py::arg("g"), py::arg("s"), py::arg("d"), py::arg("alpha_d") = 1, py::arg("seed") = 0);
  m.def("approx_shortcut",
        [](const sf::DiGraph& g, std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed) {
          const auto r = sf::approx_shortcut(g, params(s, d, alpha_d, seed));
          py::dict out;
          out["edges"] = from_edges(r.shortcut.edges);
          out["bound"] = r.bound;
          out["components"] = r.components;
          out["overhead"] = r.overhead();
          return out;
        },
        py::arg("g"), py::arg("s"), py::arg("d"), py::arg("alpha_d") = 1, py::arg("seed") = 0);
  m.def("approx_tc_spanner",
        [](const sf::DiGraph& g, std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed) {
          return from_edges(sf::approx_tc_spanner(g, params(s, d, alpha_d, seed)).spanner);
        },
        py::arg("g"), py::arg("s"), py::arg("d"), py::arg("alpha_d") = 1, py::arg("seed") = 0);
  m.def("shortcut_from_tcspanner",
        [](const sf::DiGraph& g, std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed) {
          return from_edges(sf::shortcut_from_tcspanner(g, params(s, d, alpha_d, seed)).edges);
        },
        py::arg("g"), py::arg("s"), py::arg("d"), py::arg("alpha_d") = 1, py::arg("seed") = 0);

  m.def("min_shortcut_exact", [](const sf::DiGraph& g, std::size_t d) {
    const auto r = sf::min_shortcut_exact(g, d);
    return py::make_tuple(r.size, from_edges(r.edges));
  }, py::arg("g"), py::arg("d"));
  m.def("min_tc_spanner_exact", [](const sf::DiGraph& g, std::size_t d) {
    const auto r = sf::min_tc_spanner_exact(g, d);
    return py::make_tuple(r.size, from_edges(r.edges));
  }, py::arg("g"), py::arg("d"));
  m.def("exists_shortcut", [](const sf::DiGraph& g, std::size_t s, std::size_t d) { return sf::exists_shortcut(g, s, d); },
        py::arg("g"), py::arg("s"), py::arg("d"));
}

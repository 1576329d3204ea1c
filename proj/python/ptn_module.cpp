// Python bindings for the main operations: graph6 round trips, canonical
// forms, planarity, forbidden-pattern detection, bounds, the extremal search,
// the extremal constructions, and the embedding audits. Structured results
// cross the boundary as plain dicts converted from the library's JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "json.hpp"
#include "ptn/audit.hpp"
#include "ptn/bounds.hpp"
#include "ptn/canonical.hpp"
#include "ptn/constructions.hpp"
#include "ptn/graph6.hpp"
#include "ptn/planarity.hpp"
#include "ptn/random_planar.hpp"
#include "ptn/search.hpp"
#include "ptn/theta.hpp"

namespace py = pybind11;
using namespace ptn;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::null:
      return py::none();
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      py::list l;
      for (const auto& el : j) l.append(json_to_py(el));
      return l;
    }
    case nlohmann::ordered_json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = json_to_py(it.value());
      return d;
    }
    default:
      return py::none();
  }
}

Graph small_from_g6(const std::string& s) { return graph6_decode_small(s); }

BoundaryEmbedding construct_by_tag(const std::string& family, int k) {
  if (family == "theta4") return theta4_extremal(k);
  if (family == "theta5") return theta5_extremal(k);
  throw std::invalid_argument("constructions exist for theta4 and theta5 only");
}

}  // namespace

PYBIND11_MODULE(ptnpy, m) {
  m.doc() = "planar Turan numbers for theta graphs: search, constructions, audits";

  m.def("known_families", [] { return ForbiddenFamily::known_tags(); });

  m.def("canonical_g6", [](const std::string& s) { return canonical_g6(small_from_g6(s)); },
        py::arg("g6"));

  m.def("is_planar", [](const std::string& s) { return is_planar(small_from_g6(s)); }, py::arg("g6"));

  m.def(
      "find_forbidden",
      [](const std::string& s, const std::string& family) -> py::object {
        Graph g = small_from_g6(s);
        auto w = find_forbidden(g, ForbiddenFamily::from_tag(family));
        if (!w) return py::none();
        py::dict d;
        d["member"] = w->member;
        d["vertices"] = w->vertices;
        d["cycle"] = w->cycle;
        if (w->chord_u >= 0) d["chord"] = py::make_tuple(w->chord_u, w->chord_v);
        return d;
      },
      py::arg("g6"), py::arg("family"));

  m.def(
      "is_family_free",
      [](const std::string& s, const std::string& family) {
        return is_family_free(small_from_g6(s), ForbiddenFamily::from_tag(family));
      },
      py::arg("g6"), py::arg("family"));

  m.def(
      "bound",
      [](const std::string& family, long long n) {
        py::dict d;
        d["value"] = bound_value(family, n).str();
        d["floor"] = bound_floor(family, n);
        return d;
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "ex_planar",
      [](int n, const std::string& family, int threads, bool force) {
        SearchOptions opt;
        opt.threads = threads;
        opt.force = force;
        return json_to_py(extremal_result_json(ex_planar(n, ForbiddenFamily::from_tag(family), opt)));
      },
      py::arg("n"), py::arg("family"), py::arg("threads") = 1, py::arg("force") = false);

  m.def(
      "enumerate_planar_free",
      [](int n, const std::string& family) {
        std::vector<std::string> out;
        enumerate_planar_free(n, ForbiddenFamily::from_tag(family),
                              [&](const Graph& g) { out.push_back(canonical_g6(g)); });
        return out;
      },
      py::arg("n"), py::arg("family"));

  m.def(
      "construct",
      [](const std::string& family, int k, const std::string& format) -> std::string {
        BoundaryEmbedding b = construct_by_tag(family, k);
        if (format == "graph6") return graph6_encode(b.emb.g);
        if (format == "rotation") {
          RotationAnnotations ann;
          ann.outer_cycle = b.boundary;
          return emit_rotation_text(b.emb, ann);
        }
        throw std::invalid_argument("format must be graph6 or rotation");
      },
      py::arg("family"), py::arg("k"), py::arg("format") = "graph6");

  m.def(
      "construction_certificate",
      [](const std::string& family, int k) {
        BoundaryEmbedding b = construct_by_tag(family, k);
        return json_to_py(certificate_json(check_extremal_certificate(b.emb, family)));
      },
      py::arg("family"), py::arg("k"));

  m.def("named_graph", [](const std::string& name) -> std::string {
    if (name == "fig3") return graph6_encode(widen(fig3_graph()));
    if (name == "k5minus") return graph6_encode(widen(k5_minus_graph()));
    throw std::invalid_argument("named graphs: fig3, k5minus");
  });

  m.def(
      "audit_observation1",
      [](const std::string& s) {
        Graph g = small_from_g6(s);
        PlanarityResult pr = test_planarity(g);
        if (!pr.planar) throw std::invalid_argument("graph is not planar: " + pr.note);
        return json_to_py(audit_report_json(audit_observation1(pr.embedding)));
      },
      py::arg("g6"));

  m.def(
      "audit_inequalities",
      [](const std::string& s, const std::string& family) {
        Graph g = small_from_g6(s);
        PlanarityResult pr = test_planarity(g);
        if (!pr.planar) throw std::invalid_argument("graph is not planar: " + pr.note);
        return json_to_py(
            audit_report_json(audit_theorem_inequalities(pr.embedding, ForbiddenFamily::from_tag(family))));
      },
      py::arg("g6"), py::arg("family"));

  m.def(
      "random_planar_g6",
      [](int n, unsigned long long seed) {
        std::mt19937_64 rng(seed);
        return graph6_encode(widen(random_planar_embedding(n, rng).g));
      },
      py::arg("n"), py::arg("seed") = 20260817ull);
}

// Python bindings for the core operations: root data, Weyl elements,
// Demazure characters, weight polytopes and the face reduction rule.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demazure/json_io.hpp"

namespace py = pybind11;
using namespace demazure;

namespace {

// Root data are immutable and there are finitely many types, so the module
// hands out references into a per-process cache. WeylElt and polytope
// objects hold pointers into it and never dangle. Calls are serialized by
// the GIL.
RootDatum& cached_datum(const std::string& type) {
  static std::map<std::string, std::unique_ptr<RootDatum>> cache;
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_unique<RootDatum>(CartanType::parse(type))).first;
  return *it->second;
}

Coweight coweight_from_py(const RootDatum& d, const std::vector<std::string>& coords) {
  Coweight c;
  c.coords.reserve(coords.size());
  for (const auto& s : coords) c.coords.push_back(Rat::parse(s));
  if (static_cast<int>(c.coords.size()) != d.rank())
    throw std::invalid_argument("coweight: wrong length");
  return c;
}

std::vector<std::string> coweight_to_py(const Coweight& c) {
  std::vector<std::string> out;
  for (const Rat& r : c.coords) out.push_back(r.str());
  return out;
}

py::dict character_to_py(const Character& ch) {
  py::dict out;
  for (const auto& [coords, mult] : ch.terms()) out[py::tuple(py::cast(coords))] = mult;
  return out;
}

}  // namespace

PYBIND11_MODULE(pydemazure, m) {
  m.doc() = "Demazure characters, weight polytopes and the face reduction rule";

  py::class_<RootDatum, std::unique_ptr<RootDatum, py::nodelete>>(m, "RootDatum")
      .def(py::init([](const std::string& type) { return &cached_datum(type); }),
           py::arg("type"))
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("type", [](const RootDatum& d) { return d.type().str(); })
      .def_property_readonly("cartan_matrix", &RootDatum::cartan_matrix)
      .def_property_readonly("num_positive_roots",
                             [](const RootDatum& d) { return d.positive_roots().size(); })
      .def("positive_roots_simple",
           [](const RootDatum& d) {
             std::vector<IntVec> out;
             for (const Root& r : d.positive_roots()) out.push_back(r.simple);
             return out;
           })
      .def("identity", [](const RootDatum& d) { return WeylElt::identity(d); })
      .def("from_word",
           [](const RootDatum& d, const std::vector<int>& word) {
             return WeylElt::from_word(d, word);
           },
           py::arg("word"))
      .def("pair",
           [](const RootDatum& d, const IntVec& weight, const std::vector<std::string>& coweight) {
             return d.pair(Weight{weight}, coweight_from_py(d, coweight)).str();
           },
           py::arg("weight"), py::arg("coweight"))
      .def("reflect_weight",
           [](const RootDatum& d, int i, const IntVec& w) { return d.reflect(i, Weight{w}).coords; })
      .def("levi_simples",
           [](const RootDatum& d, const std::vector<std::string>& eta) {
             return d.levi_subsystem(coweight_from_py(d, eta)).simples;
           })
      .def("ambient_coords",
           [](const RootDatum& d, const IntVec& w) {
             std::vector<double> out;
             for (const Rat& r : d.ambient_coords(Weight{w})) out.push_back(r.to_double());
             return out;
           })
      .def("__repr__", [](const RootDatum& d) { return "RootDatum(" + d.type().str() + ")"; });

  py::class_<WeylElt>(m, "WeylElt")
      .def_property_readonly("word", [](const WeylElt& w) { return w.word(); })
      .def_property_readonly("length", &WeylElt::length)
      .def("__mul__", [](const WeylElt& a, const WeylElt& b) { return a * b; })
      .def("inverse", &WeylElt::inverse)
      .def("apply", [](const WeylElt& w, const IntVec& mu) { return w.apply(Weight{mu}).coords; })
      .def("__eq__", [](const WeylElt& a, const WeylElt& b) { return a == b; })
      .def("__hash__",
           [](const WeylElt& w) {
             std::size_t h = 0;
             for (Int c : w.canonical()) h = h * 1000003u + static_cast<std::size_t>(c + 512);
             return h;
           })
      .def("__repr__", [](const WeylElt& w) { return "<WeylElt " + w.str() + ">"; })
      .def("__str__", &WeylElt::str);

  m.def("bruhat_leq", &bruhat_leq, py::arg("x"), py::arg("w"));
  m.def("demazure_product", &demazure_product, py::arg("v"), py::arg("w"));
  m.def("lower_interval", &lower_interval, py::arg("w"));
  m.def("all_elements", &all_elements, py::arg("datum"), py::arg("max_group") = 1152);
  m.def("min_length_reps",
        [](const RootDatum& d, const std::vector<std::string>& eta, std::size_t max_group) {
          return min_length_reps(d, coweight_from_py(d, eta), max_group);
        },
        py::arg("datum"), py::arg("eta"), py::arg("max_group") = 1152);

  m.def("demazure_character",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w) {
          return character_to_py(demazure_character(d, Weight{lambda}, w));
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"),
        "Demazure character as a dict {weight tuple: multiplicity}");

  py::class_<DemazurePolytope>(m, "DemazurePolytope")
      .def_property_readonly("vertex_candidates",
                             [](const DemazurePolytope& p) {
                               std::vector<IntVec> out;
                               for (const Weight& v : p.vertex_candidates()) out.push_back(v.coords);
                               return out;
                             })
      .def("contains",
           [](const DemazurePolytope& p, const IntVec& mu) { return p.contains(Weight{mu}); })
      .def("on_face",
           [](const DemazurePolytope& p, const IntVec& mu, const WeylElt& v,
              const std::vector<std::string>& eta) {
             return p.on_face(Weight{mu}, FaceLabel{v, coweight_from_py(p.datum(), eta)});
           },
           py::arg("mu"), py::arg("v"), py::arg("eta"))
      .def("lattice_points",
           [](const DemazurePolytope& p) {
             std::vector<IntVec> out;
             for (const Weight& mu : p.lattice_points()) out.push_back(mu.coords);
             return out;
           })
      .def("face_lattice_points",
           [](const DemazurePolytope& p, const WeylElt& v, const std::vector<std::string>& eta) {
             std::vector<IntVec> out;
             for (const Weight& mu :
                  p.face_lattice_points(FaceLabel{v, coweight_from_py(p.datum(), eta)}))
               out.push_back(mu.coords);
             return out;
           },
           py::arg("v"), py::arg("eta"));

  m.def("build_polytope",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w) {
          return DemazurePolytope::build(d, Weight{lambda}, w);
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"));

  m.def("reduction_data",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w, const WeylElt& v,
           const std::vector<std::string>& eta) {
          const ReductionData rd =
              reduction_data(d, Weight{lambda}, w, FaceLabel{v, coweight_from_py(d, eta)});
          py::dict out;
          out["q_word"] = rd.q.word();
          out["w_L_word"] = rd.w_L.word();
          out["lambda_L"] = rd.lambda_L.coords;
          out["levi_simples"] = rd.levi_simples;
          out["u_L_word"] = rd.u_L.word();
          out["lambda_std"] = rd.lambda_std.coords;
          return out;
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"), py::arg("v"), py::arg("eta"));

  m.def("verify_theorem",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w, const WeylElt& v,
           const std::vector<std::string>& eta) {
          const VerificationReport rep =
              verify_theorem(d, Weight{lambda}, w, FaceLabel{v, coweight_from_py(d, eta)});
          py::list rows;
          for (const auto& row : rep.rows) {
            py::dict r;
            r["weight"] = row.mu.coords;
            r["m_w"] = row.m_w;
            r["m_q"] = row.m_q;
            r["m_L"] = row.m_L;
            rows.append(r);
          }
          py::dict out;
          out["rows"] = rows;
          out["flags"] = rep.flags();
          out["q_word"] = rep.q_word;
          out["ok"] = rep.ok();
          out["seconds"] = rep.seconds;
          return out;
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"), py::arg("v"), py::arg("eta"));

  m.def("connecting_multiplicity_check",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w, const WeylElt& v,
           const std::vector<std::string>& eta) {
          return connecting_multiplicity_check(d, Weight{lambda}, w,
                                               FaceLabel{v, coweight_from_py(d, eta)});
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"), py::arg("v"), py::arg("eta"));

  m.def("saturation_check",
        [](const RootDatum& d, const IntVec& lambda, const WeylElt& w) {
          return saturation_check(d, Weight{lambda}, w);
        },
        py::arg("datum"), py::arg("lam"), py::arg("w"));

  m.def("fundamental_coweight",
        [](const RootDatum& d, int i) { return coweight_to_py(d.fundamental_coweight(i)); },
        py::arg("datum"), py::arg("i"));
}

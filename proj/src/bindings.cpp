#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainface/face.hpp"
#include "chainface/io.hpp"
#include "chainface/linalg.hpp"
#include "chainface/oracle.hpp"
#include "chainface/scheduler.hpp"

namespace py = pybind11;
namespace cf = chainface;

namespace {

// Chains cross the boundary as plain lists of element labels.
cf::Chain to_chain(const cf::Poset& P, const std::vector<int>& elems) {
  cf::Chain c = cf::chain_from_set(P, elems);
  if (!cf::is_maximal_chain(P, c))
    throw cf::WitnessError("not a maximal chain of the poset");
  return c;
}

cf::ChainFamily to_family(const cf::Poset& P,
                          const std::vector<std::vector<int>>& chains) {
  std::vector<cf::Chain> cs;
  for (const auto& e : chains) cs.push_back(to_chain(P, e));
  return cf::ChainFamily(std::move(cs));
}

std::vector<std::vector<int>> from_family(const cf::ChainFamily& F) {
  std::vector<std::vector<int>> out;
  for (const auto& c : F) out.push_back(c.elems);
  return out;
}

std::vector<std::string> rat_strings(const cf::RatVec& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(cf::rat_str(q));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "faces of maximal chain polytopes: crown structures, closures, "
            "face lattices, exact rational LP oracles, and PERT/CPM "
            "criticality";

  py::register_exception<cf::CycleError>(m, "CycleError");
  py::register_exception<cf::LabelError>(m, "LabelError");
  py::register_exception<cf::WitnessError>(m, "WitnessError");
  py::register_exception<cf::EqualChainsError>(m, "EqualChainsError");
  py::register_exception<cf::NotApplicableError>(m, "NotApplicableError");
  py::register_exception<cf::CapExceededError>(m, "CapExceededError");
  py::register_exception<cf::NotClosedError>(m, "NotClosedError");
  py::register_exception<cf::NotNestedError>(m, "NotNestedError");
  py::register_exception<cf::MissingWeightError>(m, "MissingWeightError");
  py::register_exception<cf::ParseError>(m, "ParseError");

  py::class_<cf::Poset>(m, "Poset")
      .def_property_readonly("size", &cf::Poset::size)
      .def_property_readonly("covers", &cf::Poset::covers)
      .def("leq", &cf::Poset::leq)
      .def("less", &cf::Poset::less)
      .def("comparable", &cf::Poset::comparable)
      .def("minimal_elements", &cf::Poset::minimal_elements)
      .def("maximal_elements", &cf::Poset::maximal_elements)
      .def("__repr__", [](const cf::Poset& P) {
        return "Poset(p=" + std::to_string(P.size()) + ", covers=" +
               std::to_string(P.covers().size()) + ")";
      });

  m.def("build_poset", &cf::build_poset, py::arg("p"), py::arg("covers"));
  m.def("grid_poset", &cf::grid_poset, py::arg("m"), py::arg("n"));
  m.def("read_poset", [](const std::string& path) {
    return cf::read_poset_file(path);
  });
  m.def("parse_poset", [](const std::string& text) {
    std::istringstream in(text);
    return cf::read_poset(in);
  });
  m.def("write_poset", &cf::write_poset);

  m.def("maximal_chains", [](const cf::Poset& P) {
    return from_family(cf::maximal_chains(P));
  });

  m.def(
      "compose",
      [](const std::string& kind, const cf::Poset& a, const cf::Poset& b) {
        cf::ComposeKind k;
        if (kind == "disjoint_union")
          k = cf::ComposeKind::DisjointUnion;
        else if (kind == "ordinal_sum")
          k = cf::ComposeKind::OrdinalSum;
        else if (kind == "direct_product")
          k = cf::ComposeKind::DirectProduct;
        else
          throw cf::ParseError("unknown composition: " + kind);
        auto r = cf::compose(k, a, b);
        py::dict d;
        d["poset"] = r.poset;
        d["map1"] = r.map1;
        d["map2"] = r.map2;
        d["product_map"] = r.product_map;
        return d;
      },
      py::arg("kind"), py::arg("p1"), py::arg("p2"));

  m.def(
      "interval",
      [](const cf::Poset& P, const std::string& kind, std::optional<int> lo,
         std::optional<int> hi) {
        cf::IntervalKind k;
        if (kind == "open")
          k = cf::IntervalKind::Open;
        else if (kind == "closed")
          k = cf::IntervalKind::Closed;
        else if (kind == "down_closed")
          k = cf::IntervalKind::DownClosed;
        else if (kind == "up_closed")
          k = cf::IntervalKind::UpClosed;
        else
          throw cf::ParseError("unknown interval kind: " + kind);
        return cf::interval(P, k, lo, hi);
      },
      py::arg("poset"), py::arg("kind"), py::arg("lo"), py::arg("hi"));

  m.def("classify_structure",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          auto r = cf::classify_structure(P, to_family(P, fam));
          py::dict d;
          d["verdict"] = cf::verdict_name(r.verdict);
          py::list crowns;
          for (const auto& fc : r.crowns) {
            py::dict c;
            c["rho"] = fc.crown.rho;
            c["alphas"] = fc.crown.alphas;
            c["betas"] = fc.crown.betas;
            c["complete"] = fc.complete;
            c["missing"] = from_family(cf::ChainFamily(fc.missing));
            crowns.append(c);
          }
          d["crowns"] = crowns;
          py::list stars;
          for (const auto& fs : r.stars) {
            py::dict s;
            s["pairs"] = py::make_tuple(fs.star.a1, fs.star.b1, fs.star.a2,
                                        fs.star.b2);
            s["gammas"] = fs.star.gammas();
            s["complete"] = fs.complete;
            s["missing"] = from_family(cf::ChainFamily(fs.missing));
            stars.append(s);
          }
          d["stars"] = stars;
          return d;
        });

  m.def("face_class",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          auto fc = cf::face_class(P, to_family(P, fam));
          py::dict d;
          d["tag"] = cf::face_tag_name(fc.tag);
          if (fc.dim)
            d["dim"] = *fc.dim;
          else
            d["dim"] = py::none();
          return d;
        });

  m.def("star_step",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          return from_family(cf::star_step(P, to_family(P, fam)));
        });
  m.def("closure",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          return from_family(cf::closure(P, to_family(P, fam)));
        });
  m.def("closure_trace",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          std::vector<std::vector<std::vector<int>>> out;
          for (const auto& step : cf::closure_trace(P, to_family(P, fam)))
            out.push_back(from_family(step));
          return out;
        });

  m.def("is_edge", [](const cf::Poset& P, const std::vector<int>& c1,
                      const std::vector<int>& c2) {
    return cf::is_edge(P, to_chain(P, c1), to_chain(P, c2));
  });
  m.def("rectangle_completion",
        [](const cf::Poset& P, const std::vector<int>& c1,
           const std::vector<int>& c2) {
          auto [a, b] = cf::rectangle_completion(P, to_chain(P, c1),
                                                 to_chain(P, c2));
          return py::make_tuple(a.elems, b.elems);
        });

  m.def("polytope_dim", &cf::polytope_dim);
  m.def("f_vector", &cf::f_vector, py::arg("poset"), py::arg("max_chains") = 20);
  m.def(
      "face_lattice",
      [](const cf::Poset& P, int max_chains) {
        auto L = cf::face_lattice(P, max_chains);
        py::dict d;
        py::list faces;
        for (std::size_t i = 0; i < L.faces.size(); ++i) {
          py::dict f;
          f["chains"] = from_family(L.faces[i]);
          f["dim"] = L.dims[i];
          faces.append(f);
        }
        d["faces"] = faces;
        d["covers"] = L.covers;
        return d;
      },
      py::arg("poset"), py::arg("max_chains") = 20);
  m.def("is_covering_in_k",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& f1,
           const std::vector<std::vector<int>>& f2) {
          return cf::is_covering_in_K(P, to_family(P, f1), to_family(P, f2));
        });
  m.def("grid_flag", [](int m, int n) {
    auto g = cf::grid_flag(m, n);
    py::dict d;
    d["m"] = g.m;
    d["n"] = g.n;
    d["dim"] = g.dim;
    py::list stages;
    for (const auto& st : g.stages) {
      py::dict s;
      s["x"] = st.x;
      s["y"] = st.y;
      s["s_set"] = st.s_set;
      s["family"] = from_family(st.family);
      stages.append(s);
    }
    d["stages"] = stages;
    return d;
  });

  m.def("affine_rank_of_families",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          std::vector<cf::RatVec> pts;
          for (const auto& c : to_family(P, fam))
            pts.push_back(cf::incidence(P, c));
          return cf::affine_rank(pts);
        });
  m.def("face_oracle",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam)
            -> std::optional<std::vector<std::string>> {
          auto w = cf::face_oracle(P, to_family(P, fam));
          if (!w) return std::nullopt;
          return rat_strings(*w);
        });
  m.def("minimal_face_oracle",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam) {
          return from_family(cf::minimal_face_oracle(P, to_family(P, fam)));
        });

  m.def("eft", [](const cf::Poset& P,
                  const std::map<int, std::string>& weights) {
    std::map<int, cf::Rat> w;
    for (const auto& [k, v] : weights) w[k] = cf::rat_parse(v);
    return cf::rat_str(cf::eft(P, cf::ActivityWeights(P, w)));
  });
  m.def("critical_chains", [](const cf::Poset& P,
                              const std::map<int, std::string>& weights) {
    std::map<int, cf::Rat> w;
    for (const auto& [k, v] : weights) w[k] = cf::rat_parse(v);
    auto rep = cf::critical_chains(P, cf::ActivityWeights(P, w));
    py::dict d;
    d["eft"] = cf::rat_str(rep.eft);
    d["critical"] = from_family(rep.critical);
    py::dict totals;
    for (const auto& [c, t] : rep.totals) {
      std::string key;
      for (std::size_t i = 0; i < c.elems.size(); ++i)
        key += (i ? "," : "") + std::to_string(c.elems[i]);
      totals[py::str(key)] = cf::rat_str(t);
    }
    d["totals"] = totals;
    return d;
  });
  m.def("multicritical",
        [](const cf::Poset& P, const std::vector<std::vector<int>>& fam)
            -> std::optional<std::map<int, std::string>> {
          auto w = cf::multicritical(P, to_family(P, fam));
          if (!w) return std::nullopt;
          std::map<int, std::string> out;
          for (int x = 1; x <= P.size(); ++x) out[x] = cf::rat_str(w->at(x));
          return out;
        });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singquandle/corpus.hpp"
#include "singquandle/diagram.hpp"
#include "singquandle/formula.hpp"
#include "singquandle/io.hpp"
#include "singquandle/polynomial.hpp"
#include "singquandle/presentation.hpp"

namespace py = pybind11;

namespace {

sq::ElementId id(std::uint32_t x) { return sq::ElementId{x}; }

std::vector<std::vector<std::uint32_t>> table_rows(const sq::OperationTable& t) {
  std::vector<std::vector<std::uint32_t>> out(t.order());
  for (std::uint32_t x = 0; x < t.order(); ++x) {
    for (std::uint32_t y = 0; y < t.order(); ++y) out[x].push_back(t.at(x, y));
  }
  return out;
}

py::dict terms_of(const sq::SqPolynomial& p) {
  py::dict out;
  for (const auto& [m, c] : p.terms()) {
    const auto& e = m.exponents;
    out[py::make_tuple(e[0], e[1], e[2], e[3], e[4], e[5])] = py::int_(py::str(c.str()));
  }
  return out;
}

sq::ElementSet to_set(const std::vector<std::uint32_t>& xs) {
  sq::ElementSet out;
  for (std::uint32_t x : xs) out.insert(id(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite oriented singquandles and coloring invariants of singular links";

  static py::exception<sq::Error> error(m, "SingquandleError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sq::Error& e) {
      py::object kind = py::str(std::string(sq::to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(kind, e.what()).ptr());
    }
  });

  py::class_<sq::FiniteSingquandle>(m, "Singquandle")
      .def_property_readonly("order", &sq::FiniteSingquandle::order)
      .def("star", [](const sq::FiniteSingquandle& q, std::uint32_t x,
                      std::uint32_t y) { return q.star(id(x), id(y)).index; })
      .def("bar", [](const sq::FiniteSingquandle& q, std::uint32_t x,
                     std::uint32_t y) { return q.bar(id(x), id(y)).index; })
      .def("r1", [](const sq::FiniteSingquandle& q, std::uint32_t x,
                    std::uint32_t y) { return q.r1(id(x), id(y)).index; })
      .def("r2", [](const sq::FiniteSingquandle& q, std::uint32_t x,
                    std::uint32_t y) { return q.r2(id(x), id(y)).index; })
      .def("table", [](const sq::FiniteSingquandle& q, const std::string& op) {
        if (op == "star") return table_rows(q.table(sq::Operation::star));
        if (op == "bar") return table_rows(q.table(sq::Operation::bar));
        if (op == "R1") return table_rows(q.table(sq::Operation::r1));
        if (op == "R2") return table_rows(q.table(sq::Operation::r2));
        throw py::value_error("operation must be one of star, bar, R1, R2");
      })
      .def("label", [](const sq::FiniteSingquandle& q, std::uint32_t x) { return q.label(id(x)); })
      .def("element", [](const sq::FiniteSingquandle& q, const std::string& label) {
        return sq::element_by_label(q, label).index;
      })
      .def("profile", [](const sq::FiniteSingquandle& q, std::uint32_t x) {
        return sq::profile(q, id(x)).as_array();
      })
      .def("to_text", &sq::write_singquandle_tables)
      .def("__eq__", [](const sq::FiniteSingquandle& a, const sq::FiniteSingquandle& b) {
        return a == b;
      })
      .def("__repr__", [](const sq::FiniteSingquandle& q) {
        return "<Singquandle of order " + std::to_string(q.order()) + ">";
      });

  m.def("from_tables", [](std::vector<std::vector<std::uint32_t>> star,
                          std::vector<std::vector<std::uint32_t>> r1,
                          std::vector<std::vector<std::uint32_t>> r2) {
    return sq::table_singquandle(static_cast<std::uint32_t>(star.size()), star, r1, r2);
  }, py::arg("star"), py::arg("r1"), py::arg("r2"));

  m.def("validate", [](std::vector<std::vector<std::uint32_t>> star,
                       std::vector<std::vector<std::uint32_t>> r1,
                       std::vector<std::vector<std::uint32_t>> r2) {
    const sq::ValidationReport report =
        sq::validate(static_cast<std::uint32_t>(star.size()), star, r1, r2);
    std::vector<std::pair<std::string, std::vector<std::uint32_t>>> out;
    for (const sq::Violation& v : report.violations) {
      std::vector<std::uint32_t> witness;
      for (sq::ElementId x : v.witness) witness.push_back(x.index);
      out.emplace_back(std::string(sq::to_string(v.axiom)), witness);
    }
    return out;
  }, "Axiom violations as (axiom, witness) pairs; empty when valid.");

  m.def("affine", &sq::affine_singquandle, py::arg("n"), py::arg("t"), py::arg("s"));
  m.def("parse_singquandle", &sq::parse_singquandle, py::arg("text"));
  m.def("load_singquandle", &sq::corpus::load_singquandle, py::arg("corpus_id"));

  m.def("sqp", [](const sq::FiniteSingquandle& q) { return sq::render(sq::sqp(q)); });
  m.def("sqp_terms", [](const sq::FiniteSingquandle& q) { return terms_of(sq::sqp(q)); },
        "Exponent tuple (s1,t1,s2,t2,s3,t3) -> coefficient.");
  m.def("ssqp", [](const sq::FiniteSingquandle& q, const std::vector<std::uint32_t>& subset) {
    return sq::render(sq::ssqp(q, to_set(subset)));
  });
  m.def("closure", [](const sq::FiniteSingquandle& q, const std::vector<std::uint32_t>& seed) {
    std::vector<std::uint32_t> out;
    for (sq::ElementId x : sq::closure(q, to_set(seed))) out.push_back(x.index);
    return out;
  });
  m.def("are_isomorphic", [](const sq::FiniteSingquandle& a, const sq::FiniteSingquandle& b) {
    const sq::IsoResult r = sq::are_isomorphic(a, b);
    std::vector<std::uint32_t> witness;
    for (sq::ElementId x : r.witness) witness.push_back(x.index);
    return std::make_pair(std::string(sq::to_string(r.outcome)), witness);
  }, "Returns (outcome, witness); the witness is empty unless isomorphic.");

  py::class_<sq::SingPresentation>(m, "Presentation")
      .def_property_readonly("generators", &sq::SingPresentation::generators)
      .def_property_readonly("name", &sq::SingPresentation::name)
      .def_property_readonly("relation_count",
                             [](const sq::SingPresentation& p) { return p.relations().size(); })
      .def("__str__", &sq::render_presentation);

  m.def("parse_presentation", &sq::parse_presentation, py::arg("text"));
  m.def("pd_to_presentation", [](const std::string& text) {
    return sq::pd_to_presentation(sq::parse_pd(text));
  }, py::arg("pd_text"));
  m.def("load_link", &sq::corpus::load_link, py::arg("corpus_id"));

  m.def("colorings", [](const sq::SingPresentation& pres, const sq::FiniteSingquandle& q) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const sq::Homomorphism& h : sq::enumerate_homs(pres, q)) {
      std::vector<std::uint32_t> row;
      for (sq::ElementId x : h.images) row.push_back(x.index);
      out.push_back(std::move(row));
    }
    return out;
  }, py::call_guard<py::gil_scoped_release>());
  m.def("phi", [](const sq::SingPresentation& pres, const sq::FiniteSingquandle& q) {
    return sq::render_phi(sq::phi_ssqp(pres, q));
  }, py::call_guard<py::gil_scoped_release>());

  m.def("corpus_ids", []() {
    std::vector<std::string> out;
    for (const sq::corpus::CorpusEntry& e : sq::corpus::entries()) out.push_back(e.id);
    return out;
  });
}

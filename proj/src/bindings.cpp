#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tradeforge/anf.hpp"
#include "tradeforge/canon.hpp"
#include "tradeforge/construct.hpp"
#include "tradeforge/enumerate.hpp"
#include "tradeforge/gf2span.hpp"
#include "tradeforge/io.hpp"

namespace py = pybind11;
namespace tf = tradeforge;

namespace {

tf::SignedTrade make_trade(int v, const std::vector<std::pair<tf::Block, std::int64_t>>& terms) {
  return tf::SignedTrade::from_terms(v, terms);
}

tf::Unitrade make_unitrade(int v, const std::vector<tf::Block>& blocks) {
  return tf::Unitrade::from_blocks(v, blocks);
}

}  // namespace

PYBIND11_MODULE(tradeforge, m) {
  m.doc() = "trade enumeration and construction toolkit";

  py::class_<tf::SignedTrade>(m, "SignedTrade")
      .def(py::init(&make_trade), py::arg("v"), py::arg("terms"))
      .def_readonly("v", &tf::SignedTrade::v)
      .def_readonly("coeffs", &tf::SignedTrade::coeffs)
      .def_property_readonly("is_void", &tf::SignedTrade::is_void)
      .def_property_readonly("is_simple", &tf::SignedTrade::is_simple)
      .def("__eq__", [](const tf::SignedTrade& a, const tf::SignedTrade& b) { return a == b; })
      .def("__repr__", [](const tf::SignedTrade& t) { return tf::to_json(t); });

  py::class_<tf::Unitrade>(m, "Unitrade")
      .def(py::init(&make_unitrade), py::arg("v"), py::arg("blocks"))
      .def_readonly("v", &tf::Unitrade::v)
      .def_readonly("blocks", &tf::Unitrade::blocks)
      .def("__eq__", [](const tf::Unitrade& a, const tf::Unitrade& b) { return a == b; })
      .def("__repr__", [](const tf::Unitrade& u) { return tf::to_json(u); });

  m.def("is_trade", &tf::is_trade, py::arg("trade"), py::arg("t"));
  m.def("is_unitrade", &tf::is_unitrade, py::arg("unitrade"), py::arg("t"));
  m.def("volume", [](const tf::SignedTrade& t) { return tf::stats(t).volume; });
  m.def("foundation", [](const tf::SignedTrade& t) { return tf::foundation(t); });
  m.def("replication", &tf::replication, py::arg("trade"), py::arg("alpha"), py::arg("beta") = 0);
  m.def("shift", &tf::shift);
  m.def("projection", &tf::projection);
  m.def("reduce", &tf::reduce);
  m.def("is_degenerate", &tf::is_degenerate);
  m.def("unitrade_of", &tf::unitrade_of);
  m.def("affine_rank", [](const tf::Unitrade& u) { return tf::affine_rank(u); });
  m.def("degree", [](const tf::Unitrade& u) { return tf::degree(tf::anf_from_set(u)); });
  m.def("kasami_classify", [](const tf::Unitrade& u, int t) {
    const tf::KasamiClass k = tf::kasami_classify(u, t);
    return py::make_tuple(tf::to_string(k.tag), k.i, k.expected_afrk, k.volume);
  });
  m.def("canonical_key", [](const tf::SignedTrade& t) { return py::bytes(tf::canonical_key(t)); });
  m.def("aut_size", &tf::aut_size);
  m.def("are_equivalent", &tf::are_equivalent);
  m.def("spectrum_trade", [](int t, int i, const std::string& family) {
    return tf::spectrum_trade(
        t, i, family == "ii" ? tf::SpectrumFamily::FormII : tf::SpectrumFamily::FormIII);
  });
  m.def("split_unitrade", [](const tf::Unitrade& u, int t) -> py::object {
    const tf::SplitResult r = tf::split_unitrade(u, t);
    if (r.status == tf::SplitStatus::Found) return py::cast(r.trade);
    if (r.status == tf::SplitStatus::None) return py::none();
    throw std::runtime_error("split search budget exceeded");
  });
  m.def(
      "class_counts",
      [](int t, int v, std::int64_t vol_cap) {
        tf::Enumerator en;
        const tf::ClassTable& table = en.level({t, v, vol_cap});
        py::dict out;
        for (std::int64_t vol = 0; vol <= vol_cap; ++vol) {
          const tf::CellCounts c = table.cell(vol);
          if (c.all)
            out[py::int_(vol)] =
                py::make_tuple(c.all, c.nondegenerate, c.simple, c.nondegenerate_simple);
        }
        return out;
      },
      py::arg("t"), py::arg("v"), py::arg("vol_cap"));
  m.def("trade_to_json", [](const tf::SignedTrade& t) { return tf::to_json(t); });
  m.def("trade_from_json", &tf::trade_from_json);
}

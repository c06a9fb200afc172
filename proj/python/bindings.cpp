#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diaghook/abacus.hpp"
#include "diaghook/bisequence.hpp"
#include "diaghook/diagonal_formula.hpp"
#include "diaghook/partition.hpp"

namespace py = pybind11;
using namespace diaghook;

namespace {

using Parts = std::vector<Int>;

std::vector<Partition> to_partitions(const std::vector<Parts>& xs) {
  std::vector<Partition> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

std::vector<Parts> to_lists(const std::vector<Partition>& xs) {
  std::vector<Parts> out;
  for (const auto& x : xs) out.push_back(x.vector());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Diagonal hook lengths of symmetric partitions from p-core and p-quotient";

  static py::exception<Error> error(m, "DiaghookError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("conjugate", [](const Parts& parts) { return conjugate(Partition(parts)).vector(); }, py::arg("partition"));
  m.def("is_symmetric", [](const Parts& parts) { return is_symmetric(Partition(parts)); }, py::arg("partition"));
  m.def(
      "diagonal_hooks",
      [](const Parts& parts) {
        std::vector<std::tuple<Int, Int, Int>> out;
        for (const auto& h : diagonal_hooks_oracle(Partition(parts))) out.emplace_back(h.leg, h.arm, h.length);
        return out;
      },
      py::arg("partition"), "(leg, arm, length) of each diagonal hook, read off the Young diagram");
  m.def("delta_oracle", [](const Parts& parts) { return delta_oracle(Partition(parts)).lengths(); },
        py::arg("partition"));
  m.def(
      "d_of",
      [](const Parts& parts) {
        const auto d = d_of(Partition(parts));
        return std::make_pair(d.legs(), d.arms());
      },
      py::arg("partition"));
  m.def("symmetric_from_delta", [](const Parts& delta) { return symmetric_from_delta(DeltaSet(delta)).vector(); },
        py::arg("delta"));
  m.def("partitions",
        [](Int n, bool symmetric_only) { return to_lists(enumerate_partitions(n, symmetric_only)); }, py::arg("n"),
        py::arg("symmetric_only") = false);

  m.def("p_core", [](const Parts& parts, Int p) { return p_core(Partition(parts), p).vector(); },
        py::arg("partition"), py::arg("p"));
  m.def("p_quotient", [](const Parts& parts, Int p) { return to_lists(p_quotient(Partition(parts), p)); },
        py::arg("partition"), py::arg("p"));
  m.def(
      "core_and_quotient",
      [](const Parts& parts, Int p) {
        const auto cq = core_and_quotient(Partition(parts), p);
        return std::make_pair(cq.core.vector(), to_lists(cq.quotient));
      },
      py::arg("partition"), py::arg("p"));
  m.def(
      "from_core_and_quotient",
      [](const Parts& core, const std::vector<Parts>& quotient, Int p) {
        return from_core_and_quotient(Partition(core), to_partitions(quotient), p).vector();
      },
      py::arg("core"), py::arg("quotient"), py::arg("p"));
  m.def("is_p_core", [](const Parts& parts, Int p) { return is_p_core(Partition(parts), p); }, py::arg("partition"),
        py::arg("p"));
  m.def(
      "is_symmetric_p_core",
      [](const Parts& parts, Int p) { return is_symmetric_p_core(d_of(Partition(parts)), p); },
      py::arg("partition"), py::arg("p"), "Diagonal packing criterion (partition must be symmetric)");
  m.def("render_ascii", [](const Parts& parts, Int p) { return render_ascii(Partition(parts), p); },
        py::arg("partition"), py::arg("p"));

  m.def(
      "delta_empty_core",
      [](const std::vector<Parts>& quotient, Int p) {
        return delta_empty_core(to_partitions(quotient), p).lengths();
      },
      py::arg("quotient"), py::arg("p"));
  m.def(
      "delta_general",
      [](const Parts& core, const std::vector<Parts>& quotient, Int p) {
        return delta_general(Partition(core), to_partitions(quotient), p).lengths();
      },
      py::arg("core"), py::arg("quotient"), py::arg("p"));
}

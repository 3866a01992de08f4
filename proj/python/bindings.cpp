#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetinv/commands.hpp"
#include "jetinv/errors.hpp"

namespace py = pybind11;
using namespace jetinv;

namespace {

CommandOptions options_from(const py::dict& kwargs) {
  CommandOptions opt;
  for (const auto& [key, value] : kwargs) {
    const auto name = key.cast<std::string>();
    if (value.is_none()) continue;
    if (name == "scalar") opt.scalar = value.cast<std::string>();
    else if (name == "tol") opt.tol = value.cast<double>();
    else if (name == "seed") opt.seed = value.cast<std::uint64_t>();
    else if (name == "chart") opt.chart = value.cast<std::vector<int>>();
    else if (name == "at") opt.at = value.cast<std::vector<std::string>>();
    else if (name == "order") opt.order = value.cast<int>();
    else if (name == "kind") opt.kind = value.cast<std::string>();
    else if (name == "n") opt.n = value.cast<int>();
    else if (name == "m") opt.m = value.cast<int>();
    else if (name == "r") opt.r = value.cast<int>();
    else throw ParseError("unknown option '" + name + "'");
  }
  return opt;
}

std::string run(const std::string& command, const std::vector<std::string>& documents, const py::dict& kwargs) {
  const CommandOptions opt = options_from(kwargs);
  std::vector<Json> docs;
  for (const auto& text : documents) docs.push_back(parse_json(text));
  py::gil_scoped_release release;
  return run_command(command, docs, opt).dump();
}

}  // namespace

PYBIND11_MODULE(_jetinv, m) {
  m.doc() = "Jets, the differential group action and its invariants";

  auto& base = py::register_exception<Error>(m, "JetinvError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DomainError>(m, "DomainError", base);

  m.def("run", &run, py::arg("command"), py::arg("documents"), py::arg("options") = py::dict(),
        "Run a command on JSON documents and return the JSON result");
  m.def(
      "selftest",
      [](std::optional<std::uint64_t> seed) {
        SelftestReport report;
        {
          py::gil_scoped_release release;
          report = run_selftest(seed);
        }
        return py::make_tuple(report.passed, report.text);
      },
      py::arg("seed") = py::none(), "Run the oracle and property suites; returns (passed, report)");
}

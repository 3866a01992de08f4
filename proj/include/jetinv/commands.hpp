#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetinv/document.hpp"
#include "jetinv/scalar.hpp"

namespace jetinv {

struct CommandOptions {
  std::optional<std::string> scalar;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::vector<int> chart;
  std::vector<std::string> at;
  int order = -1;
  std::string kind = "velocity";
  int n = 1;
  int m = 1;
  int r = 2;
};

struct SelftestReport {
  std::string text;
  bool passed = false;
};

const std::vector<std::string>& document_commands();
std::size_t command_arity(const std::string& command);

ScalarMode resolve_mode(const std::optional<std::string>& requested, const std::vector<Json>& docs);
Tolerance tolerance_from(const std::optional<double>& tol);

Json run_command(const std::string& command, const std::vector<Json>& docs, const CommandOptions& opt);
SelftestReport run_selftest(std::optional<std::uint64_t> seed);

}  // namespace jetinv

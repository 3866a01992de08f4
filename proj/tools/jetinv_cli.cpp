#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jetinv/commands.hpp"
#include "jetinv/errors.hpp"

using namespace jetinv;

namespace {

enum Exit { ok = 0, parse_failure = 1, domain_failure = 2, internal_failure = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<Json> load_documents(const std::vector<std::string>& paths) {
  int from_stdin = 0;
  std::vector<Json> docs;
  for (const auto& path : paths) {
    if (path == "-" && ++from_stdin > 1) throw ParseError("stdin can supply only one document");
    docs.push_back(parse_json(read_input(path)));
  }
  return docs;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw ParseError("cannot write '" + out + "'");
  file << text << '\n';
}

int fail(int code, std::string_view error, const std::string& detail) {
  std::cerr << Json{{"error", std::string(error)}, {"detail", detail}}.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jets, the differential group action and its invariants"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  CommandOptions opt;
  std::string out;
  std::vector<std::string> inputs;
  app.add_option("--scalar", opt.scalar, "rational (default) or float");
  app.add_option("--tol", opt.tol, "comparison and regularity tolerance in float mode");
  app.add_option("--out", out, "write the result to this file");
  app.add_option("--seed", opt.seed, "random seed");

  auto with_inputs = [&](CLI::App* sub, std::size_t count) {
    sub->add_option("inputs", inputs, "documents (path or - for stdin)")->required()->expected(static_cast<int>(count));
    return sub;
  };
  auto* invariants = with_inputs(app.add_subcommand("invariants", "invariant coordinates of a regular velocity"), 1);
  invariants->add_option("--chart", opt.chart, "target components forming the chart, e.g. 1,3")->delimiter(',');
  with_inputs(app.add_subcommand("compose", "jet of a o b"), 2);
  with_inputs(app.add_subcommand("invert", "inverse group jet"), 1);
  with_inputs(app.add_subcommand("act", "right action of a group jet on a velocity"), 2);
  with_inputs(app.add_subcommand("orbit-check", "decide whether two velocities lie in one orbit"), 2);
  auto* transform = with_inputs(app.add_subcommand("transform", "apply a chart change to a velocity or contact element"), 2);
  transform->add_option("--chart", opt.chart, "target chart for contact elements")->delimiter(',');
  auto* prolong_cmd = with_inputs(app.add_subcommand("prolong", "r-jet of a polynomial map at a point"), 1);
  prolong_cmd->add_option("--at", opt.at, "evaluation point, comma separated")->delimiter(',');
  prolong_cmd->add_option("--order", opt.order, "jet order")->required();
  auto* random = app.add_subcommand("random", "random regular velocity or invertible group jet");
  random->add_option("--kind", opt.kind, "velocity or group");
  random->add_option("--n", opt.n);
  random->add_option("--m", opt.m);
  random->add_option("--r", opt.r);
  auto* dim = app.add_subcommand("dim", "number of Grassmann coordinates m*C(n+r,n)+n");
  dim->add_option("--n", opt.n)->required();
  dim->add_option("--m", opt.m)->required();
  dim->add_option("--r", opt.r)->required();
  app.add_subcommand("selftest", "run the oracle and property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(parse_failure, "parse", e.what());
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    if (command == "selftest") {
      const auto report = run_selftest(opt.seed);
      emit(out, report.text);
      return report.passed ? ok : internal_failure;
    }
    emit(out, run_command(command, load_documents(inputs), opt).dump());
    return ok;
  } catch (const ParseError& e) {
    return fail(parse_failure, to_string(e.code()), e.what());
  } catch (const DomainError& e) {
    return fail(domain_failure, to_string(e.code()), e.what());
  } catch (const InternalError& e) {
    return fail(internal_failure, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(internal_failure, "internal", e.what());
  }
}

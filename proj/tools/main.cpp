// Batch front-end over the zcross C API: runs JSON scenarios or bundled
// demos and prints the report as a table or as JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zcross/zcross.h"

namespace {

bool is_demo(const std::string& name) {
  auto demos = nlohmann::json::parse(zcross_demos_json());
  for (const auto& d : demos)
    if (d.at("name").get<std::string>() == name) return true;
  return false;
}

int run_command(const std::string& target, std::optional<long long> window, bool as_json,
                bool oracle_only, std::uint64_t seed, unsigned root_bound,
                const std::string& output_path) {
  nlohmann::json options;
  options["oracle_only"] = oracle_only;
  options["seed"] = seed;
  options["root_bound"] = root_bound;
  if (window) options["window"] = *window;
  std::string options_text = options.dump();

  zcross_report* report = nullptr;
  zcross_status status;
  if (is_demo(target)) {
    status = zcross_run_demo(target.c_str(), options_text.c_str(), &report);
  } else {
    std::ifstream in(target);
    if (!in) {
      std::cerr << "zcross: cannot open scenario file or unknown demo \"" << target << "\"\n";
      return ZCROSS_ERROR_VALIDATION;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    status = zcross_run_scenario(text.c_str(), options_text.c_str(), &report);
  }

  if (status != ZCROSS_OK) {
    std::cerr << "zcross: " << zcross_last_error() << "\n";
    return status;
  }

  std::string body = as_json ? zcross_report_json(report) : zcross_report_text(report);
  zcross_report_free(report);
  if (output_path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "zcross: cannot write to \"" << output_path << "\"\n";
      return ZCROSS_ERROR_VALIDATION;
    }
    out << body;
  }
  return 0;
}

int demos_command(bool as_json) {
  if (as_json) {
    std::cout << zcross_demos_json() << "\n";
    return 0;
  }
  auto demos = nlohmann::json::parse(zcross_demos_json());
  for (const auto& d : demos)
    std::cout << d.at("name").get<std::string>() << "\n    "
              << d.at("description").get<std::string>() << "\n";
  return 0;
}

int show_command(const std::string& name) {
  char* text = nullptr;
  zcross_status status = zcross_demo_scenario_json(name.c_str(), &text);
  if (status != ZCROSS_OK) {
    std::cerr << "zcross: " << zcross_last_error() << "\n";
    return status;
  }
  std::cout << text << "\n";
  zcross_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(zcross_version()) +
               " - crossed products of function algebras by Z, exactly"};
  app.require_subcommand(1);

  std::string target;
  std::optional<long long> window;
  bool as_json = false;
  bool oracle_only = false;
  std::uint64_t seed = 1;
  unsigned root_bound = 64;
  std::string output_path;

  CLI::App* run = app.add_subcommand("run", "run a scenario file or a bundled demo");
  run->add_option("target", target, "scenario JSON file or demo name")->required();
  run->add_option("--window", window, "degree window for commutant/center tables");
  run->add_flag("--json", as_json, "emit the machine-readable report");
  run->add_flag("--oracle-only", oracle_only, "skip theorem routes, report oracle results only");
  run->add_option("--seed", seed, "seed for the randomized spot checks");
  run->add_option("--root-bound", root_bound,
                  "bound for the non-root-of-unity certificate (default 64)");
  run->add_option("--output", output_path, "write the report to a file instead of stdout");

  bool demos_json = false;
  CLI::App* demos = app.add_subcommand("demos", "list the bundled demos");
  demos->add_flag("--json", demos_json, "list as JSON");

  std::string show_name;
  CLI::App* show = app.add_subcommand("show", "print the scenario JSON of a bundled demo");
  show->add_option("name", show_name, "demo name")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return run_command(target, window, as_json, oracle_only, seed, root_bound, output_path);
  if (demos->parsed()) return demos_command(demos_json);
  return show_command(show_name);
}

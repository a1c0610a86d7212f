#ifndef ZCROSS_SCENARIO_HPP
#define ZCROSS_SCENARIO_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossed.hpp"
#include "fourier.hpp"

namespace zcross {

using Json = nlohmann::ordered_json;

// A batch analysis request: either a dynamical system with generators for the
// coefficient algebra, or a cyclic group with a dual map (the fourier route).
struct Scenario {
  enum class Kind { Dynamical, DualGroup };

  std::string name;
  Kind kind = Kind::Dynamical;

  // Dynamical
  std::shared_ptr<const DynSystem> system;
  std::vector<QVec> generators;

  // DualGroup
  unsigned group_modulus = 0;
  std::vector<size_t> dual_map;

  std::optional<long long> window;
  std::vector<std::string> analysis;  // empty = everything applicable
};

struct RunOptions {
  std::optional<long long> window;
  bool oracle_only = false;
  std::uint64_t seed = 1;
  unsigned root_bound = 64;
  // Randomized spot checks per report section (commuting pairs, Gelfand
  // product preservation).
  unsigned sample_pairs = 20;
};

// Throws Error(SchemaError) on malformed input.
Scenario parse_scenario(const Json& doc);
Scenario parse_scenario_text(const std::string& text);
RunOptions parse_options_text(const std::string& text);

const std::vector<std::string>& demo_names();
// Scenario JSON for a bundled demo; SchemaError for unknown names.
Json demo_scenario(const std::string& name);

// Runs every requested analysis and returns the machine-readable report.
// Oracle/theorem mismatches and falsified invariants surface as
// Error(InternalInvariantViolation) with a counterexample dump; they are
// never absorbed into the report.
Json run_scenario(const Scenario& scenario, const RunOptions& options);

// Human-readable rendering, derived from the report JSON only.
std::string render_text(const Json& report);

}  // namespace zcross

#endif

#pragma once

// Scenario runner behind the `verify` command line tool.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "queerhom/superalgebra.hpp"

namespace qh {

inline constexpr const char* kToolVersion = "queerhom 1.0.0";
inline constexpr std::size_t kDefaultBudget = 1000000;

/// Raised for inputs a scenario cannot run on (exit status 2).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioOptions {
  std::string algebra = "builtin:base-field";  // builtin:TAG or a JSON file
  std::vector<unsigned> n;                     // empty: the scenario's default list
  std::optional<FieldSpec> field;              // unset: file scalars, else Q
  std::size_t budget = kDefaultBudget;         // cap on dim Lambda^3
  std::optional<std::uint64_t> precheck_prime; // extra F_p rows for h2-main / psq-central
};

enum class Status { pass, fail, skip };
const char* status_name(Status s);

struct CheckRow {
  std::string id;
  Status status = Status::pass;
  std::string expected, computed, note;
  std::string field;
};

struct Report {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> input;
  std::vector<CheckRow> rows;
  std::vector<std::pair<std::string, double>> timings;
  std::vector<std::string> notes;
  /// Set when the input misses a requirement of the scenario (field or
  /// algebra class); the affected rows are SKIP and the exit status is 2.
  std::string unmet_requirement;

  /// PASS iff every non-SKIP row passes; SKIP when every row was skipped.
  Status overall() const;
};

/// Parses an algebra description; the `scalars` entry is overridden by
/// `field` when given and must agree with it.  Throws std::invalid_argument.
SuperAlgebra parse_algebra_json(const std::string& text, std::optional<FieldSpec> field = {});
SuperAlgebra load_algebra(const std::string& path, std::optional<FieldSpec> field = {});

const std::vector<std::string>& scenario_names();
/// Throws PreconditionError for unknown scenarios, unusable inputs or unmet
/// field requirements.
Report run_scenario(const std::string& name, const ScenarioOptions& options);

/// Canonical JSON with sorted keys.
std::string report_json(const Report& report);
void emit_report(const Report& report, const std::string& path);
int exit_code(const Report& report);

}  // namespace qh

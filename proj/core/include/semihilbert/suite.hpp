#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semihilbert/bounds.hpp"
#include "semihilbert/context.hpp"
#include "semihilbert/generators.hpp"

namespace semihilbert {

struct SuiteConfig {
  /// Registry ids; empty selects every entry.
  std::vector<std::string> bounds;
  std::size_t trials = 500;
  std::vector<std::size_t> dims{2, 3, 4, 5};
  std::uint64_t seed = 0;
  double rank_deficient_frac = 0.25;
  double tol_abs = 1e-7;
  double tol_rel = 1e-7;
  /// Target A-seminorm scale of generated operands.
  double scale = 1.0;
};

/// Throws ConfigError for unknown ids, empty dims, dimensions below 2 or a
/// fraction outside [0, 1].
void validate(const SuiteConfig& config);

/// One generated trial. Everything is derived from (config.seed, bound id,
/// dim, trial index) so any trial can be regenerated on its own.
struct Instance {
  std::string bound_id;
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  WeightSpec weight_spec;
  AContext ctx;
  std::vector<ComplexMatrix> operands;
  /// Operand generator label, e.g. "general_adjointable" or "a_nilpotent".
  std::string generator;
};

/// Trial `trial` is rank-deficient iff ⌊(trial+1)·frac⌋ > ⌊trial·frac⌋.
bool rank_deficient_trial(std::size_t trial, double frac);

Instance make_instance(const SuiteConfig& config, std::string_view bound_id, std::size_t dim,
                       std::size_t trial);

struct GeneratorStats {
  std::size_t trials = 0;
  double min_slack = 0.0;
};

struct SummaryRow {
  std::string bound_id;
  Variant variant = Variant::NotApplicable;
  std::string side;
  bool asserted = true;
  std::size_t trials = 0;
  std::size_t holds = 0;
  double min_slack = 0.0;
  std::uint64_t worst_seed = 0;
  std::string worst_generator;
  std::map<std::string, GeneratorStats> by_generator;
};

struct Violation {
  std::string bound_id;
  Variant variant = Variant::NotApplicable;
  std::string side;
  bool asserted = true;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::size_t rank = 0;
  std::string generator;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

struct SuiteReport {
  SuiteConfig config;
  /// One row per (bound, variant, side) in registry order.
  std::vector<SummaryRow> summary;
  std::vector<Violation> violations;
  /// Not part of the JSON report, which must be reproducible byte for byte.
  double wall_seconds = 0.0;

  bool has_asserted_violations() const;
};

/// Runs every selected bound on config.trials instances per dimension,
/// serially and in a fixed order.
SuiteReport run_suite(const SuiteConfig& config);

std::string report_to_json(const SuiteReport& report);
std::string report_to_csv(const SuiteReport& report);

}  // namespace semihilbert

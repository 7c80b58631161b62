#include "semihilbert/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "semihilbert/errors.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/semiop.hpp"

namespace semihilbert {

namespace {

constexpr int kMaxAttempts = 100;

using OK = OperandKind;

struct Plan {
  std::string label;
  /// Rank-deficient weights get rank ≥ 2 when the dimension allows it.
  bool wants_rank_two = false;
  std::vector<OK> kinds;
  bool apq_zero_pair = false;
  bool selfadjoint_plus_positive = false;
};

Plan uniform_plan(OK kind, std::size_t count) {
  Plan p;
  p.label = std::string(to_string(kind));
  p.kinds.assign(count, kind);
  p.wants_rank_two = kind == OK::ANilpotent;
  return p;
}

Plan plan_for(std::string_view id, std::size_t trial) {
  const BoundInfo& info = find_bound(id);
  const std::size_t count = info.operand_names.size();
  if (id == "E-AT2") return uniform_plan(OK::ANilpotent, 1);
  if (id == "E-ASELF" || id == "E-POWER" || id == "I-POSSS") {
    return uniform_plan(OK::ASelfadjoint, 1);
  }
  if (id == "E-LPOS" || id == "I-EQ109") return uniform_plan(OK::APositive, 2);
  if (id == "E-WEAK") {
    Plan p;
    p.label = "a_unitary+general_adjointable";
    p.kinds = {OK::AUnitary, OK::GeneralAdjointable};
    return p;
  }
  if (id == "I-REFINE") {
    static constexpr OK cycle[] = {OK::GeneralAdjointable, OK::ANilpotent, OK::ASelfadjoint};
    return uniform_plan(cycle[trial % 3], 1);
  }
  if (id == "I-LM5" && trial % 4 == 3) return uniform_plan(OK::ANilpotent, 4);
  if (id == "I-COR") {
    Plan p;
    p.label = "pair_apq_zero";
    p.wants_rank_two = true;
    p.apq_zero_pair = true;
    return p;
  }
  if (id == "I-LEM5NORM") {
    Plan p;
    p.label = "a_selfadjoint+a_positive_shift";
    p.selfadjoint_plus_positive = true;
    return p;
  }
  return uniform_plan(OK::GeneralAdjointable, count);
}

WeightSpec choose_weight(std::size_t dim, std::size_t trial, bool rank_deficient,
                         bool wants_rank_two, std::uint64_t seed) {
  WeightSpec spec;
  spec.dim = dim;
  if (rank_deficient && dim >= 2) {
    Rng rng(derive_seed(seed, "rank", 0, 0));
    const std::size_t lo = (wants_rank_two && dim >= 3) ? 2 : 1;
    spec.rank = rng.integer(lo, dim - 1);
    spec.kind = rng.uniform() < 0.5 ? WeightKind::Diagonal : WeightKind::RandomRankDeficient;
    return spec;
  }
  switch (trial % 5) {
    case 0:
      spec.kind = WeightKind::Identity;
      break;
    case 1:
      spec.kind = WeightKind::Diagonal;
      break;
    default:
      spec.kind = WeightKind::RandomFullRank;
      break;
  }
  return spec;
}

std::vector<ComplexMatrix> make_operands(const Plan& plan, const AContext& ctx, std::uint64_t seed,
                                         double scale) {
  std::vector<ComplexMatrix> ops;
  if (plan.apq_zero_pair) {
    auto [p, q] = gen_apq_zero_pair(ctx, derive_seed(seed, "operand", 0, 0), scale);
    ops.push_back(std::move(p));
    ops.push_back(std::move(q));
    return ops;
  }
  if (plan.selfadjoint_plus_positive) {
    const ComplexMatrix s = gen_operand(ctx, OK::ASelfadjoint, derive_seed(seed, "operand", 0, 0), scale);
    const ComplexMatrix d = gen_operand(ctx, OK::APositive, derive_seed(seed, "operand", 1, 0), scale);
    ops.push_back(s + d);
    ops.push_back(s);
    return ops;
  }
  for (std::size_t i = 0; i < plan.kinds.size(); ++i) {
    ops.push_back(gen_operand(ctx, plan.kinds[i], derive_seed(seed, "operand", i, 0), scale));
  }
  return ops;
}

Instance make_attempt(const SuiteConfig& config, std::string_view bound_id, std::size_t dim,
                      std::size_t trial, int attempt) {
  std::uint64_t seed = derive_seed(config.seed, bound_id, dim, trial);
  if (attempt > 0) seed = splitmix64(seed + static_cast<std::uint64_t>(attempt));
  const Plan plan = plan_for(bound_id, trial);
  const WeightSpec spec =
      choose_weight(dim, trial, rank_deficient_trial(trial, config.rank_deficient_frac),
                    plan.wants_rank_two, seed);
  Tolerances tol;
  tol.bound_abs = config.tol_abs;
  tol.bound_rel = config.tol_rel;
  AContext ctx = new_context(gen_weight(spec, derive_seed(seed, "weight", 0, 0)), tol);
  std::vector<ComplexMatrix> ops = make_operands(plan, ctx, seed, config.scale);
  return Instance{std::string(bound_id), dim, trial, seed, spec, std::move(ctx), std::move(ops),
                  plan.label};
}

std::vector<std::string> selected_bounds(const SuiteConfig& config) {
  std::vector<std::string> out;
  for (const BoundInfo& info : list_bounds()) {
    const bool wanted =
        config.bounds.empty() ||
        std::find(config.bounds.begin(), config.bounds.end(), info.id) != config.bounds.end();
    if (wanted) out.emplace_back(info.id);
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void validate(const SuiteConfig& config) {
  for (const std::string& id : config.bounds) find_bound(id);
  if (config.dims.empty()) throw Error(ErrorKind::ConfigError, "no dimensions selected");
  for (std::size_t d : config.dims) {
    if (d < 2) throw Error(ErrorKind::ConfigError, "dimensions must be at least 2");
  }
  if (!(config.rank_deficient_frac >= 0.0 && config.rank_deficient_frac <= 1.0)) {
    throw Error(ErrorKind::ConfigError, "rank-deficient fraction must lie in [0, 1]");
  }
  if (!(config.tol_abs >= 0.0) || !(config.tol_rel >= 0.0)) {
    throw Error(ErrorKind::ConfigError, "tolerances must be non-negative");
  }
  if (!(config.scale > 0.0) || !std::isfinite(config.scale)) {
    throw Error(ErrorKind::ConfigError, "scale must be positive and finite");
  }
}

bool rank_deficient_trial(std::size_t trial, double frac) {
  const double a = std::floor(static_cast<double>(trial) * frac);
  const double b = std::floor(static_cast<double>(trial + 1) * frac);
  return b > a;
}

Instance make_instance(const SuiteConfig& config, std::string_view bound_id, std::size_t dim,
                       std::size_t trial) {
  return make_attempt(config, bound_id, dim, trial, 0);
}

bool SuiteReport::has_asserted_violations() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.asserted; });
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  report.config.bounds = selected_bounds(config);

  for (const std::string& id : report.config.bounds) {
    std::map<std::tuple<Variant, std::string>, std::size_t> rows;
    for (std::size_t dim : config.dims) {
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        std::vector<BoundReport> results;
        std::optional<Instance> inst;
        for (int attempt = 0;; ++attempt) {
          try {
            inst = make_attempt(config, id, dim, trial, attempt);
            results = eval_bound(id, inst->ctx, inst->operands);
            break;
          } catch (const Error& e) {
            const bool retry = e.kind() == ErrorKind::PreconditionFailed ||
                               e.kind() == ErrorKind::GeneratorFailed;
            if (!retry) throw;
            if (attempt + 1 >= kMaxAttempts) {
              throw Error(ErrorKind::GeneratorFailed,
                          id + " dim " + std::to_string(dim) + " trial " + std::to_string(trial) +
                              ": " + e.detail());
            }
          }
        }
        for (const BoundReport& r : results) {
          const auto key = std::make_tuple(r.variant, r.side);
          auto it = rows.find(key);
          if (it == rows.end()) {
            SummaryRow row;
            row.bound_id = id;
            row.variant = r.variant;
            row.side = r.side;
            row.asserted = r.asserted;
            row.min_slack = std::numeric_limits<double>::infinity();
            it = rows.emplace(key, report.summary.size()).first;
            report.summary.push_back(std::move(row));
          }
          SummaryRow& row = report.summary[it->second];
          ++row.trials;
          if (r.holds) ++row.holds;
          const bool worse =
              std::isnan(r.slack) ? !std::isnan(row.min_slack) : r.slack < row.min_slack;
          if (worse) {
            row.min_slack = r.slack;
            row.worst_seed = inst->seed;
            row.worst_generator = inst->generator;
          }
          auto [g, fresh] = row.by_generator.try_emplace(inst->generator);
          if (fresh || r.slack < g->second.min_slack) g->second.min_slack = r.slack;
          ++g->second.trials;
          if (!r.holds) {
            report.violations.push_back(Violation{id, r.variant, r.side, r.asserted, inst->seed, dim,
                                                  trial, inst->ctx.rank(), inst->generator, r.lhs,
                                                  r.rhs, r.slack});
          }
        }
      }
    }
  }
  // I-LAST is derived from I-456 as stated; it is only asserted while that
  // variant shows no violation in the same run.
  const bool stated_456_failed =
      std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
        return v.bound_id == "I-456" && v.variant == Variant::AsStated;
      });
  if (stated_456_failed) {
    for (SummaryRow& row : report.summary) {
      if (row.bound_id == "I-LAST") row.asserted = false;
    }
    for (Violation& v : report.violations) {
      if (v.bound_id == "I-LAST") v.asserted = false;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const SuiteReport& report) {
  using nlohmann::ordered_json;
  const SuiteConfig& c = report.config;
  ordered_json doc;
  doc["config"] = {{"bounds", c.bounds},
                   {"trials", c.trials},
                   {"dims", c.dims},
                   {"seed", c.seed},
                   {"rank_deficient_frac", c.rank_deficient_frac},
                   {"tol_abs", c.tol_abs},
                   {"tol_rel", c.tol_rel},
                   {"scale", c.scale}};
  ordered_json summary = ordered_json::array();
  for (const SummaryRow& row : report.summary) {
    ordered_json gens = ordered_json::object();
    for (const auto& [name, stats] : row.by_generator) {
      gens[name] = {{"trials", stats.trials}, {"min_slack", stats.min_slack}};
    }
    summary.push_back({{"bound_id", row.bound_id},
                       {"variant", to_string(row.variant)},
                       {"side", row.side},
                       {"asserted", row.asserted},
                       {"trials", row.trials},
                       {"holds", row.holds},
                       {"min_slack", row.min_slack},
                       {"worst_seed", row.worst_seed},
                       {"worst_generator", row.worst_generator},
                       {"by_generator", std::move(gens)}});
  }
  doc["summary"] = std::move(summary);
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"bound_id", v.bound_id},
                          {"variant", to_string(v.variant)},
                          {"side", v.side},
                          {"asserted", v.asserted},
                          {"seed", v.seed},
                          {"dim", v.dim},
                          {"trial", v.trial},
                          {"rank", v.rank},
                          {"generator", v.generator},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"slack", v.slack}});
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "bound_id,variant,side,asserted,trials,holds,min_slack,worst_seed,worst_generator\n";
  for (const SummaryRow& row : report.summary) {
    out << row.bound_id << ',' << to_string(row.variant) << ',' << row.side << ','
        << (row.asserted ? "true" : "false") << ',' << row.trials << ',' << row.holds << ','
        << format_double(row.min_slack) << ',' << row.worst_seed << ',' << row.worst_generator
        << '\n';
  }
  return out.str();
}

}  // namespace semihilbert

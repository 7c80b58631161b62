#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semihilbert/bounds.hpp"
#include "semihilbert/context.hpp"
#include "semihilbert/errors.hpp"
#include "semihilbert/matrix_io.hpp"
#include "semihilbert/semiop.hpp"
#include "semihilbert/suite.hpp"

namespace sh = semihilbert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sh::Error(sh::ErrorKind::ConfigError, "cannot write " + path);
  out << text;
}

std::string join(const std::vector<std::string_view>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

int run_check(const sh::SuiteConfig& config, const std::string& out_path,
              const std::string& csv_path) {
  const sh::SuiteReport report = sh::run_suite(config);
  const std::string json = sh::report_to_json(report);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    write_text(out_path, json);
  }
  if (!csv_path.empty()) write_text(csv_path, sh::report_to_csv(report));

  std::size_t asserted = 0;
  std::size_t logged = 0;
  for (const sh::Violation& v : report.violations) (v.asserted ? asserted : logged)++;
  std::fprintf(stderr, "%zu summary rows, %zu asserted violations, %zu logged-only, %.2f s\n",
               report.summary.size(), asserted, logged, report.wall_seconds);
  return report.has_asserted_violations() ? kExitViolations : kExitOk;
}

int run_compute(const std::string& quantity, const std::string& weight, const std::string& op,
                const std::string& out_path) {
  const sh::AContext ctx = sh::new_context(sh::read_matrix(weight));
  const sh::ComplexMatrix t = sh::read_matrix(op);
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim()) {
    throw sh::Error(sh::ErrorKind::DimensionMismatch, "operator and weight shapes differ");
  }
  if (quantity == "sharp") {
    const std::string text = sh::matrix_to_json(sh::sharp(ctx, t));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
    }
    return kExitOk;
  }
  double value = 0.0;
  if (quantity == "a_norm") {
    value = sh::a_op_norm(ctx, t);
  } else if (quantity == "a_radius") {
    value = sh::a_numerical_radius(ctx, t);
  } else {
    value = sh::a_spectral_radius(ctx, t);
  }
  std::printf("%.17g\n", value);
  return kExitOk;
}

int run_classify(const std::string& weight, const std::string& op) {
  const sh::AContext ctx = sh::new_context(sh::read_matrix(weight));
  const sh::ComplexMatrix t = sh::read_matrix(op);
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim()) {
    throw sh::Error(sh::ErrorKind::DimensionMismatch, "operator and weight shapes differ");
  }
  const sh::OperatorClass c = sh::classify(ctx, t);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::printf("a_bounded: %s\n", flag(c.a_bounded));
  std::printf("a_adjointable: %s\n", flag(c.a_adjointable));
  std::printf("a_selfadjoint: %s\n", flag(c.a_selfadjoint));
  std::printf("a_positive: %s\n", flag(c.a_positive));
  std::printf("a_unitary: %s\n", flag(c.a_unitary));
  std::printf("member_tol: %.3g\npsd_tol: %.3g\n", c.member_tol, c.psd_tol);
  return kExitOk;
}

int run_list_bounds() {
  for (const sh::BoundInfo& info : sh::list_bounds()) {
    std::vector<std::string_view> operands;
    std::vector<std::string> owned;
    for (std::size_t i = 0; i < info.operand_names.size(); ++i) {
      owned.push_back(std::string(info.operand_names[i]) + ": " +
                      std::string(sh::to_string(info.requirements[i])));
    }
    for (const std::string& s : owned) operands.push_back(s);
    std::vector<std::string_view> variants;
    for (sh::Variant v : info.variants) variants.push_back(sh::to_string(v));
    std::printf("%s [%s] operands(%s) variants(%s)\n", std::string(info.id).c_str(),
                std::string(sh::to_string(info.kind)).c_str(), join(operands, ", ").c_str(),
                join(variants, ", ").c_str());
    if (!info.condition.empty()) {
      std::printf("    if %s\n", std::string(info.condition).c_str());
    }
    std::printf("    %s\n", std::string(info.statement).c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Hilbertian operator quantities and randomized bound verification"};
  app.require_subcommand(1);

  sh::SuiteConfig config;
  std::vector<std::string> bounds{"all"};
  std::string out_path;
  std::string csv_path;
  auto* check = app.add_subcommand("check", "Run a randomized verification campaign");
  check->add_option("--bounds", bounds, "Registry ids, comma separated, or 'all'")
      ->delimiter(',');
  check->add_option("--trials", config.trials, "Trials per bound and dimension")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--dims", config.dims, "Dimensions, comma separated")->delimiter(',');
  check->add_option("--seed", config.seed, "Master seed");
  check->add_option("--rank-deficient-frac", config.rank_deficient_frac,
                    "Fraction of trials with a singular weight")
      ->check(CLI::Range(0.0, 1.0));
  check->add_option("--tol-abs", config.tol_abs, "Absolute slack tolerance");
  check->add_option("--tol-rel", config.tol_rel, "Relative slack tolerance");
  check->add_option("--scale", config.scale, "A-seminorm scale of generated operands");
  check->add_option("--out", out_path, "JSON report path (stdout if omitted)");
  check->add_option("--csv", csv_path, "Optional CSV summary path");

  std::string quantity;
  std::string weight;
  std::string op;
  std::string compute_out;
  auto* compute = app.add_subcommand("compute", "Evaluate one quantity for a weight and operator");
  compute->add_option("--quantity", quantity, "a_norm, a_radius, a_spectral_radius or sharp")
      ->required()
      ->check(CLI::IsMember({"a_norm", "a_radius", "a_spectral_radius", "sharp"}));
  compute->add_option("--weight", weight, "Weight matrix JSON")->required();
  compute->add_option("--op", op, "Operator matrix JSON")->required();
  compute->add_option("--out", compute_out, "Output path for matrix results");

  auto* classify = app.add_subcommand("classify", "Print the operator class flags");
  classify->add_option("--weight", weight, "Weight matrix JSON")->required();
  classify->add_option("--op", op, "Operator matrix JSON")->required();

  auto* list = app.add_subcommand("list-bounds", "Print the bound registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      if (!(bounds.size() == 1 && bounds[0] == "all")) config.bounds = bounds;
      return run_check(config, out_path, csv_path);
    }
    if (compute->parsed()) return run_compute(quantity, weight, op, compute_out);
    if (classify->parsed()) return run_classify(weight, op);
    if (list->parsed()) return run_list_bounds();
  } catch (const sh::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semihilbert/context.hpp"
#include "semihilbert/matrix.hpp"

namespace semihilbert {

enum class BoundKind { Equality, Inequality };

/// Which reading of an ambiguous statement a report evaluates.
enum class Variant { NotApplicable, AsStated, AsProved };

std::string_view to_string(Variant v);
std::string_view to_string(BoundKind k);

/// Operand class demanded by a registry entry, checked before evaluation.
enum class Requirement { ABounded, AAdjointable, ASelfadjoint, APositive, AUnitary };

std::string_view to_string(Requirement r);

struct BoundInfo {
  std::string_view id;
  BoundKind kind;
  std::vector<std::string_view> operand_names;
  /// One per operand; A-selfadjoint and A-positive operands are also
  /// required to be A-bounded.
  std::vector<Requirement> requirements;
  /// Extra hypothesis relating the operands, empty if none.
  std::string_view condition;
  std::string_view statement;
  std::vector<Variant> variants;
  /// Variants whose reports are logged but never counted as violations.
  std::vector<Variant> logged_only;
};

/// The full registry in stable order: equalities, then inequalities.
const std::vector<BoundInfo>& list_bounds();
/// Throws ConfigError for an unknown id.
const BoundInfo& find_bound(std::string_view id);

struct BoundReport {
  std::string bound_id;
  Variant variant = Variant::NotApplicable;
  /// Which part of a multi-part statement (e.g. "lower", "n=3"); empty when
  /// the statement has a single part.
  std::string side;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs − lhs for inequalities, −|lhs − rhs| for equalities.
  double slack = 0.0;
  bool holds = false;
  bool asserted = true;
  std::string operands_digest;
  std::string notes;
};

/// slack ≥ −(tol_abs + tol_rel·max(|lhs|, |rhs|, 1)).
bool within_policy(double lhs, double rhs, double slack, double tol_abs, double tol_rel);

/// Hex FNV-1a over the raw entries of A and of every operand.
std::string operands_digest(const AContext& ctx, std::span<const ComplexMatrix> operands);

/// Evaluate an entry with the tolerance policy in ctx.tol(). Throws
/// PreconditionFailed naming the operand that is outside its class, and
/// ConfigError for an unknown id or an entry of the other kind.
std::vector<BoundReport> eval_equality(std::string_view id, const AContext& ctx,
                                       std::span<const ComplexMatrix> operands);
std::vector<BoundReport> eval_inequality(std::string_view id, const AContext& ctx,
                                         std::span<const ComplexMatrix> operands);
/// Dispatches on the entry's kind.
std::vector<BoundReport> eval_bound(std::string_view id, const AContext& ctx,
                                    std::span<const ComplexMatrix> operands);

}  // namespace semihilbert

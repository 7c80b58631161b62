#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "semihilbert/context.hpp"
#include "semihilbert/matrix.hpp"

namespace semihilbert {

enum class WeightKind { Identity, Diagonal, RandomFullRank, RandomRankDeficient };

std::string_view to_string(WeightKind k);

struct WeightSpec {
  std::size_t dim = 2;
  WeightKind kind = WeightKind::Identity;
  /// Used by Diagonal and RandomRankDeficient; 0 means full rank.
  std::size_t rank = 0;
};

/// Identity: I. Diagonal: entries U(0.5, 2) with dim − rank zeros at random
/// positions. Random kinds: G·G* with G of shape dim×rank, complex normal.
ComplexMatrix gen_weight(const WeightSpec& spec, std::uint64_t seed);

enum class OperandKind { GeneralAdjointable, ASelfadjoint, APositive, AUnitary, ANilpotent };

std::string_view to_string(OperandKind k);

/// A random operand of the requested class, rescaled so that
/// ‖T‖_A = scale·U(0.5, 2). A-unitary operands are not rescaled, and an
/// operand whose A-seminorm vanishes (a nilpotent on a rank-one weight) is
/// returned as is. Resamples on a failed class check; throws GeneratorFailed
/// after 100 attempts.
ComplexMatrix gen_operand(const AContext& ctx, OperandKind kind, std::uint64_t seed,
                          double scale = 1.0);

/// (P, Q), both A-adjointable, with A·P·Q♯ = 0: Q = u·w* with u, w ∈ R(A) and
/// P = M·(P_R − q̂q̂*) where q̂ spans A†w. P vanishes when rank(A) = 1.
std::pair<ComplexMatrix, ComplexMatrix> gen_apq_zero_pair(const AContext& ctx, std::uint64_t seed,
                                                          double scale = 1.0);

}  // namespace semihilbert

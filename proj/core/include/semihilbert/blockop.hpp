#pragma once

#include <vector>

#include "semihilbert/context.hpp"
#include "semihilbert/matrix.hpp"

namespace semihilbert {

/// The weight 𝔸 = diag(A, A) on H ⊕ H next to its base context.
struct BlockContext {
  AContext base;
  AContext bbA;
};

/// Lifts the base decomposition block-diagonally. With validate set, 𝔸 is
/// also decomposed from scratch and the derived matrices are compared;
/// a mismatch throws PreconditionFailed.
BlockContext make_block_context(const AContext& base, bool validate = false);

struct Block2x2 {
  ComplexMatrix P, Q, R, S;
  ComplexMatrix assembled;
};

/// Throws DimensionMismatch unless all four blocks share one square shape.
Block2x2 assemble(const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& r,
                  const ComplexMatrix& s);

/// ‖(P Q; R S)^♯ − (P♯ R♯; Q♯ S♯)‖_F with the left side computed on 𝔸.
/// Throws NotAdjointable.
double block_sharp_check(const BlockContext& bctx, const Block2x2& blk);

/// diag(−I, I), diag(I, −I) and (0 I; I 0).
std::vector<ComplexMatrix> proof_unitaries(const BlockContext& bctx);

}  // namespace semihilbert

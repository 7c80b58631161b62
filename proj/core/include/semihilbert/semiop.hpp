#pragma once

#include "semihilbert/context.hpp"
#include "semihilbert/matrix.hpp"

namespace semihilbert {

/// C = A^{1/2}·T·(A^{1/2})†, the operator T acts as on R(A^{1/2}).
/// ‖T‖_A, ω_A(T) and r_A(T) are the classical quantities of C.
struct CompressedOperator {
  ComplexMatrix c;
  AContext ctx;
};

struct OperatorClass {
  bool a_bounded = false;
  bool a_adjointable = false;
  bool a_selfadjoint = false;
  bool a_positive = false;
  bool a_unitary = false;
  double member_tol = 0.0;
  double psd_tol = 0.0;
};

/// ‖A^{1/2}T(I − P_R)‖_F ≤ tol.member·‖A^{1/2}‖_F·‖T‖_F, i.e. T maps N(A) into N(A).
bool is_a_bounded(const AContext& ctx, const ComplexMatrix& t);
/// ‖(I − P_R)T*A‖_F ≤ tol.member·‖T‖_F·‖A‖_F, i.e. R(T*A) ⊂ R(A).
bool is_a_adjointable(const AContext& ctx, const ComplexMatrix& t);
/// ‖AT − T*A‖_F ≤ tol.member·‖AT‖_F.
bool is_a_selfadjoint(const AContext& ctx, const ComplexMatrix& t);
/// A-selfadjoint and λ_min((AT + T*A)/2) ≥ −tol.psd·‖AT‖_F.
bool is_a_positive(const AContext& ctx, const ComplexMatrix& t);
/// T♯T = P_R and (T♯)♯T♯ = P_R.
bool is_a_unitary(const AContext& ctx, const ComplexMatrix& t);

/// T♯ = A†T*A. Throws NotAdjointable outside B_A.
ComplexMatrix sharp(const AContext& ctx, const ComplexMatrix& t);

/// Throws NotABounded.
CompressedOperator compress(const AContext& ctx, const ComplexMatrix& t);
double a_op_norm(const AContext& ctx, const ComplexMatrix& t);
double a_numerical_radius(const AContext& ctx, const ComplexMatrix& t);
/// Throws NotABounded or NoConvergence.
double a_spectral_radius(const AContext& ctx, const ComplexMatrix& t);

/// (T + T♯)/2 and (T − T♯)/(2i). Throw NotAdjointable.
ComplexMatrix re_a(const AContext& ctx, const ComplexMatrix& t);
ComplexMatrix im_a(const AContext& ctx, const ComplexMatrix& t);

OperatorClass classify(const AContext& ctx, const ComplexMatrix& t);

/// λ_min of the Hermitian part of A·T; nonnegative (up to noise) iff T ≥_A 0
/// for A-selfadjoint T.
double a_positivity_margin(const AContext& ctx, const ComplexMatrix& t);

}  // namespace semihilbert

#include "semihilbert/semiop.hpp"

#include <string>

#include "semihilbert/errors.hpp"
#include "semihilbert/linalg.hpp"

namespace semihilbert {

namespace {

void require_operator(const AContext& ctx, const ComplexMatrix& t) {
  if (t.rows() != ctx.dim() || t.cols() != ctx.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator must be " + std::to_string(ctx.dim()) + "x" +
                    std::to_string(ctx.dim()));
  }
}

ComplexMatrix off_range(const AContext& ctx) {
  return ComplexMatrix::identity(ctx.dim()) - ctx.projR();
}

bool close_to(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  return frobenius_norm(x - y) <= tol * std::max(1.0, frobenius_norm(y));
}

}  // namespace

bool is_a_bounded(const AContext& ctx, const ComplexMatrix& t) {
  require_operator(ctx, t);
  const double leak = frobenius_norm(ctx.sqrtA() * t * off_range(ctx));
  return leak <= ctx.tol().member * frobenius_norm(ctx.sqrtA()) * frobenius_norm(t);
}

bool is_a_adjointable(const AContext& ctx, const ComplexMatrix& t) {
  require_operator(ctx, t);
  const double leak = frobenius_norm(off_range(ctx) * t.adjoint() * ctx.A());
  return leak <= ctx.tol().member * frobenius_norm(t) * frobenius_norm(ctx.A());
}

bool is_a_selfadjoint(const AContext& ctx, const ComplexMatrix& t) {
  require_operator(ctx, t);
  const ComplexMatrix at = ctx.A() * t;
  return frobenius_norm(at - at.adjoint()) <= ctx.tol().member * frobenius_norm(at);
}

double a_positivity_margin(const AContext& ctx, const ComplexMatrix& t) {
  require_operator(ctx, t);
  return herm_eig(hermitian_part(ctx.A() * t), ctx.tol()).eigenvalues.front();
}

bool is_a_positive(const AContext& ctx, const ComplexMatrix& t) {
  if (!is_a_selfadjoint(ctx, t)) return false;
  const double scale = frobenius_norm(ctx.A() * t);
  return a_positivity_margin(ctx, t) >= -ctx.tol().psd * std::max(scale, 1.0);
}

bool is_a_unitary(const AContext& ctx, const ComplexMatrix& t) {
  if (!is_a_adjointable(ctx, t)) return false;
  const ComplexMatrix ts = sharp(ctx, t);
  if (!is_a_adjointable(ctx, ts)) return false;
  const double tol = ctx.tol().member;
  return close_to(ts * t, ctx.projR(), tol) && close_to(sharp(ctx, ts) * ts, ctx.projR(), tol);
}

ComplexMatrix sharp(const AContext& ctx, const ComplexMatrix& t) {
  if (!is_a_adjointable(ctx, t)) {
    throw Error(ErrorKind::NotAdjointable, "R(T*A) is not contained in R(A)");
  }
  return ctx.pinvA() * t.adjoint() * ctx.A();
}

CompressedOperator compress(const AContext& ctx, const ComplexMatrix& t) {
  if (!is_a_bounded(ctx, t)) {
    throw Error(ErrorKind::NotABounded, "T does not map N(A) into N(A)");
  }
  return {ctx.sqrtA() * t * ctx.pinv_sqrtA(), ctx};
}

double a_op_norm(const AContext& ctx, const ComplexMatrix& t) {
  return spectral_norm(compress(ctx, t).c, ctx.tol());
}

double a_numerical_radius(const AContext& ctx, const ComplexMatrix& t) {
  return numerical_radius(compress(ctx, t).c, ctx.tol());
}

double a_spectral_radius(const AContext& ctx, const ComplexMatrix& t) {
  return gelfand_spectral_radius(compress(ctx, t).c, ctx.tol());
}

ComplexMatrix re_a(const AContext& ctx, const ComplexMatrix& t) {
  return 0.5 * (t + sharp(ctx, t));
}

ComplexMatrix im_a(const AContext& ctx, const ComplexMatrix& t) {
  return Complex(0.0, -0.5) * (t - sharp(ctx, t));
}

OperatorClass classify(const AContext& ctx, const ComplexMatrix& t) {
  require_operator(ctx, t);
  OperatorClass out;
  out.member_tol = ctx.tol().member;
  out.psd_tol = ctx.tol().psd;
  out.a_bounded = is_a_bounded(ctx, t);
  out.a_adjointable = is_a_adjointable(ctx, t);
  out.a_selfadjoint = is_a_selfadjoint(ctx, t);
  out.a_positive = out.a_selfadjoint && is_a_positive(ctx, t);
  out.a_unitary = out.a_adjointable && is_a_unitary(ctx, t);
  return out;
}

}  // namespace semihilbert

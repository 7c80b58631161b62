#include "semihilbert/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "semihilbert/errors.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/semiop.hpp"

namespace semihilbert {

namespace {

constexpr int kMaxAttempts = 100;

ComplexMatrix complement(const AContext& ctx) {
  return ComplexMatrix::identity(ctx.dim()) - ctx.projR();
}

// Columns of V spanning R(A), in ascending eigenvalue order.
ComplexMatrix range_basis(const AContext& ctx) {
  const HermitianEigen& eig = ctx.eigen();
  const std::size_t n = ctx.dim();
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] > ctx.cutoff()) cols.push_back(k);
  }
  ComplexMatrix basis(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = eig.eigenvectors(i, cols[j]);
  }
  return basis;
}

// Modified Gram–Schmidt on a complex normal matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = rng.complex_normal_matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

ComplexMatrix hermitian(std::size_t n, Rng& rng) {
  return hermitian_part(rng.complex_normal_matrix(n, n));
}

// The N(A) part is invisible to every A-quantity; keeping it at the size of the
// R(A) part stops it from swamping products in floating point.
ComplexMatrix with_kernel_part(const AContext& ctx, const ComplexMatrix& range_part,
                               const ComplexMatrix& kernel_part) {
  if (ctx.rank() == ctx.dim()) return range_part;
  const double r = frobenius_norm(range_part);
  const double k = frobenius_norm(kernel_part);
  if (!(k > 0.0)) return range_part;
  return range_part + kernel_part * Complex(r / k);
}

ComplexMatrix draw(const AContext& ctx, OperandKind kind, Rng& rng) {
  const std::size_t n = ctx.dim();
  const ComplexMatrix& p = ctx.projR();
  const ComplexMatrix q = complement(ctx);
  switch (kind) {
    case OperandKind::GeneralAdjointable: {
      const ComplexMatrix g = rng.complex_normal_matrix(n, n);
      return with_kernel_part(ctx, p * g * p, q * g * q);
    }
    case OperandKind::ASelfadjoint: {
      const ComplexMatrix h = hermitian(n, rng);
      const ComplexMatrix junk = rng.complex_normal_matrix(n, n);
      return with_kernel_part(ctx, ctx.pinvA() * (p * h * p), q * junk * q);
    }
    case OperandKind::APositive: {
      const ComplexMatrix g = rng.complex_normal_matrix(n, n);
      const ComplexMatrix junk = rng.complex_normal_matrix(n, n);
      return with_kernel_part(ctx, ctx.pinvA() * (p * g * g.adjoint() * p), q * junk * q);
    }
    case OperandKind::AUnitary: {
      const ComplexMatrix basis = range_basis(ctx);
      const ComplexMatrix w = basis * random_unitary(basis.cols(), rng) * basis.adjoint();
      const ComplexMatrix junk = rng.complex_normal_matrix(n, n);
      return with_kernel_part(ctx, ctx.pinv_sqrtA() * w * ctx.sqrtA(), q * junk * q);
    }
    case OperandKind::ANilpotent: {
      const ComplexMatrix v = p * rng.complex_normal_matrix(n, 1);
      ComplexMatrix u = rng.complex_normal_matrix(n, 1);
      const Complex c = inner(u, v) / inner(v, v);
      u -= c * v;
      return u * v.adjoint();
    }
  }
  throw Error(ErrorKind::GeneratorFailed, "unknown operand kind");
}

bool accepted(const AContext& ctx, OperandKind kind, const ComplexMatrix& t) {
  if (!t.all_finite() || !is_a_adjointable(ctx, t)) return false;
  switch (kind) {
    case OperandKind::GeneralAdjointable:
      return true;
    case OperandKind::ASelfadjoint:
      return is_a_selfadjoint(ctx, t);
    case OperandKind::APositive:
      return is_a_positive(ctx, t);
    case OperandKind::AUnitary:
      return is_a_unitary(ctx, t);
    case OperandKind::ANilpotent:
      return frobenius_norm(ctx.A() * t * t) <=
             ctx.tol().member * frobenius_norm(ctx.A()) * std::pow(frobenius_norm(t), 2);
  }
  return false;
}

// Rescales t in place to ‖t‖_A = scale·U(0.5, 2); returns false if that is impossible.
bool normalize(const AContext& ctx, ComplexMatrix& t, double scale, Rng& rng, bool allow_zero) {
  const double target = scale * rng.uniform(0.5, 2.0);
  const double norm = a_op_norm(ctx, t);
  if (!(norm > 1e-12 * std::max(1.0, frobenius_norm(t)))) return allow_zero;
  t *= Complex(target / norm);
  return true;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return attempt == 0 ? seed : splitmix64(seed ^ static_cast<std::uint64_t>(attempt));
}

[[noreturn]] void give_up(std::string_view what) {
  throw Error(ErrorKind::GeneratorFailed,
              std::string(what) + ": no acceptable sample after " + std::to_string(kMaxAttempts) +
                  " attempts");
}

}  // namespace

std::string_view to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Identity:
      return "identity";
    case WeightKind::Diagonal:
      return "diagonal";
    case WeightKind::RandomFullRank:
      return "random_full_rank";
    case WeightKind::RandomRankDeficient:
      return "random_rank_deficient";
  }
  return "?";
}

std::string_view to_string(OperandKind k) {
  switch (k) {
    case OperandKind::GeneralAdjointable:
      return "general_adjointable";
    case OperandKind::ASelfadjoint:
      return "a_selfadjoint";
    case OperandKind::APositive:
      return "a_positive";
    case OperandKind::AUnitary:
      return "a_unitary";
    case OperandKind::ANilpotent:
      return "a_nilpotent";
  }
  return "?";
}

ComplexMatrix gen_weight(const WeightSpec& spec, std::uint64_t seed) {
  const std::size_t n = spec.dim;
  if (n == 0) throw Error(ErrorKind::ConfigError, "weight dimension must be positive");
  const std::size_t rank = spec.rank == 0 ? n : spec.rank;
  if (rank > n) throw Error(ErrorKind::ConfigError, "weight rank exceeds dimension");
  Rng rng(seed);
  switch (spec.kind) {
    case WeightKind::Identity:
      return ComplexMatrix::identity(n);
    case WeightKind::Diagonal: {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.integer(0, i)]);
      std::vector<double> values(n, 0.0);
      for (std::size_t k = 0; k < rank; ++k) values[order[k]] = rng.uniform(0.5, 2.0);
      return ComplexMatrix::diagonal(values);
    }
    case WeightKind::RandomFullRank:
    case WeightKind::RandomRankDeficient: {
      const std::size_t r = spec.kind == WeightKind::RandomFullRank ? n : rank;
      const ComplexMatrix g = rng.complex_normal_matrix(n, r);
      return hermitian_part(g * g.adjoint());
    }
  }
  throw Error(ErrorKind::ConfigError, "unknown weight kind");
}

ComplexMatrix gen_operand(const AContext& ctx, OperandKind kind, std::uint64_t seed, double scale) {
  const bool allow_zero = kind == OperandKind::ANilpotent;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(attempt_seed(seed, attempt));
    ComplexMatrix t = draw(ctx, kind, rng);
    if (kind != OperandKind::AUnitary && !normalize(ctx, t, scale, rng, allow_zero)) continue;
    if (accepted(ctx, kind, t)) return t;
  }
  give_up(to_string(kind));
}

std::pair<ComplexMatrix, ComplexMatrix> gen_apq_zero_pair(const AContext& ctx, std::uint64_t seed,
                                                          double scale) {
  const std::size_t n = ctx.dim();
  const ComplexMatrix& proj = ctx.projR();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(attempt_seed(seed, attempt));
    const ComplexMatrix u = proj * rng.complex_normal_matrix(n, 1);
    const ComplexMatrix w = proj * rng.complex_normal_matrix(n, 1);
    ComplexMatrix qhat = ctx.pinvA() * w;
    const double qn = vector_norm(qhat);
    if (!(qn > 0.0)) continue;
    qhat *= Complex(1.0 / qn);
    ComplexMatrix q = u * w.adjoint();
    ComplexMatrix p = rng.complex_normal_matrix(n, n) * (proj - qhat * qhat.adjoint());
    if (!normalize(ctx, q, scale, rng, false)) continue;
    if (ctx.rank() == 1) {
      p = ComplexMatrix(n, n);
    } else if (!normalize(ctx, p, scale, rng, false)) {
      continue;
    }
    if (!is_a_adjointable(ctx, p) || !is_a_adjointable(ctx, q)) continue;
    return {std::move(p), std::move(q)};
  }
  give_up("pair_apq_zero");
}

}  // namespace semihilbert

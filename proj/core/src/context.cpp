#include "semihilbert/context.hpp"

#include <cmath>
#include <string>

#include "semihilbert/errors.hpp"
#include "semihilbert/rng.hpp"

namespace semihilbert {

namespace {

void require_vector(const AContext& ctx, const ComplexMatrix& x, const char* name) {
  if (x.rows() != ctx.dim() || x.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(name) + " must be a column vector of length " +
                    std::to_string(ctx.dim()));
  }
}

}  // namespace

AContext AContext::from_eigen(ComplexMatrix a, HermitianEigen eigen, double cutoff,
                              const Tolerances& tol) {
  auto data = std::make_shared<Data>();
  const auto above = [cutoff](double lambda) { return lambda > cutoff; };
  data->sqrt_a = psd_function(eigen, [&](double l) { return above(l) ? std::sqrt(l) : 0.0; });
  data->pinv_a = psd_function(eigen, psd_maps::pinv(cutoff));
  data->pinv_sqrt_a = psd_function(eigen, psd_maps::pinv_sqrt(cutoff));
  data->proj_r = psd_function(eigen, [&](double l) { return above(l) ? 1.0 : 0.0; });
  for (double l : eigen.eigenvalues) data->rank += above(l) ? 1 : 0;
  data->a = std::move(a);
  data->eigen = std::move(eigen);
  data->cutoff = cutoff;
  data->tol = tol;
  return AContext(std::move(data));
}

AContext new_context(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square() || a.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "weight must be a non-empty square matrix");
  }
  if (!a.all_finite()) {
    throw Error(ErrorKind::NotHermitian, "weight has non-finite entries");
  }
  HermitianEigen eig = herm_eig(a, tol);
  const double lambda_max = std::max(0.0, eig.eigenvalues.back());
  if (eig.eigenvalues.front() < -tol.psd * lambda_max ||
      (lambda_max == 0.0 && eig.eigenvalues.front() < 0.0)) {
    throw Error(ErrorKind::NotPSD, "weight has eigenvalue " +
                                       std::to_string(eig.eigenvalues.front()));
  }
  for (double& l : eig.eigenvalues) l = std::max(l, 0.0);
  const double cutoff = rank_cutoff(eig.eigenvalues, tol);
  return AContext::from_eigen(hermitian_part(a), std::move(eig), cutoff, tol);
}

Complex semi_inner(const AContext& ctx, const ComplexMatrix& x, const ComplexMatrix& y) {
  require_vector(ctx, x, "x");
  require_vector(ctx, y, "y");
  return inner(ctx.A() * x, y);
}

double a_norm_vec(const AContext& ctx, const ComplexMatrix& x) {
  require_vector(ctx, x, "x");
  return vector_norm(ctx.sqrtA() * x);
}

std::vector<ComplexMatrix> sample_a_unit_sphere(const AContext& ctx, std::size_t k,
                                                std::uint64_t seed) {
  if (ctx.rank() == 0) {
    throw Error(ErrorKind::RankZero, "the A-unit sphere is empty for A = 0");
  }
  Rng rng(seed);
  std::vector<ComplexMatrix> out;
  out.reserve(k);
  while (out.size() < k) {
    const ComplexMatrix y = ctx.projR() * rng.complex_normal_matrix(ctx.dim(), 1);
    const double len = vector_norm(y);
    if (len == 0.0) continue;
    out.push_back(ctx.pinv_sqrtA() * y * Complex(1.0 / len));
  }
  return out;
}

}  // namespace semihilbert

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "semihilbert/matrix.hpp"
#include "semihilbert/tolerances.hpp"

namespace semihilbert {

/// Eigen-decomposition M = V·diag(λ)·V* of a Hermitian matrix.
/// Eigenvalues are ascending; columns of V are the matching eigenvectors.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi. Throws NotHermitian when ‖M − M*‖_F > tol.herm·‖M‖_F
/// and NoConvergence after tol.max_sweeps sweeps.
HermitianEigen herm_eig(const ComplexMatrix& m, const Tolerances& tol = {});

/// Largest eigenvalue of a Hermitian matrix (Jacobi without eigenvectors).
double max_eigenvalue(const ComplexMatrix& m, const Tolerances& tol = {});

/// Largest eigenvalue via Householder tridiagonalization and implicit QL.
/// Used in the θ-sweep inner loop where only λ_max is needed; the input is
/// symmetrized, not validated.
double max_eigenvalue_tridiagonal(const ComplexMatrix& m);

/// Eigenvalues at or below this value count as zero: n·tol.rank_cutoff·λ_max.
double rank_cutoff(std::span<const double> eigenvalues, const Tolerances& tol = {});

/// V·diag(f(λ))·V* over an existing decomposition.
ComplexMatrix psd_function(const HermitianEigen& eig, const std::function<double(double)>& f);

/// f applied to the spectrum of a PSD matrix. Eigenvalues in [−tol.psd·λ_max, 0)
/// are clipped to zero; anything lower throws NotPSD.
ComplexMatrix psd_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                           const Tolerances& tol = {});

namespace psd_maps {
std::function<double(double)> sqrt();
/// 1/λ above the cutoff, 0 otherwise.
std::function<double(double)> pinv(double cutoff);
/// 1/√λ above the cutoff, 0 otherwise.
std::function<double(double)> pinv_sqrt(double cutoff);
}  // namespace psd_maps

/// σ_max(M) = √λ_max(M*M).
double spectral_norm(const ComplexMatrix& m, const Tolerances& tol = {});

struct SweepResult {
  double value = 0.0;
  double theta = 0.0;
};

/// Maximizes a 2π-periodic function: uniform grid, then golden-section
/// refinement inside the bracket of the strongest discrete local maxima.
SweepResult theta_sweep_max(const std::function<double(double)>& g, int grid_points,
                            int golden_iters);

/// ω(M) = sup_θ λ_max(Re(e^{iθ}M)), evaluated with theta_sweep_max.
double numerical_radius(const ComplexMatrix& m, const Tolerances& tol = {});

/// r(M) = lim ‖M^k‖^{1/k} by renormalized repeated squaring.
double gelfand_spectral_radius(const ComplexMatrix& m, const Tolerances& tol = {});

/// Perron root of the entrywise-nonnegative matrix [[a, b], [c, d]].
double spectral_radius_2x2_nonneg(double a, double b, double c, double d);

}  // namespace semihilbert

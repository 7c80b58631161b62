#pragma once

namespace semihilbert {

/// All numerical thresholds in one place. Defaults are the values the
/// verification campaign is calibrated against.
struct Tolerances {
  /// Allowed ‖M − M*‖_F / ‖M‖_F before a matrix is rejected as non-Hermitian.
  double herm = 1e-10;
  /// Eigenvalues below −psd·λ_max reject a matrix as not positive semidefinite.
  double psd = 1e-10;
  /// Eigenvalues λ ≤ n·rank_cutoff·λ_max are treated as exact zeros.
  double rank_cutoff = 1e-12;
  /// Jacobi stops once the off-diagonal Frobenius mass is below jacobi·‖M‖_F.
  double jacobi = 1e-14;
  int max_sweeps = 100;
  /// Relative residual allowed by the membership predicates (A-bounded,
  /// A-adjointable, A-selfadjoint, A-unitary).
  double member = 1e-9;
  /// θ-sweep: uniform grid size and golden-section refinement steps.
  int theta_grid = 1024;
  int golden_iters = 60;
  /// Repeated-squaring spectral radius: relative change between successive
  /// estimates that counts as converged, and the squaring cap.
  double gelfand = 1e-10;
  int gelfand_max_steps = 40;
  /// Bound checks hold iff slack ≥ −(bound_abs + bound_rel·max(|lhs|,|rhs|,1)).
  double bound_abs = 1e-7;
  double bound_rel = 1e-7;
};

}  // namespace semihilbert

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "semihilbert/linalg.hpp"
#include "semihilbert/matrix.hpp"
#include "semihilbert/tolerances.hpp"

namespace semihilbert {

/// A validated positive semidefinite weight A with its derived matrices.
/// Copies share the immutable data.
class AContext {
 public:
  std::size_t dim() const { return data_->a.rows(); }
  const ComplexMatrix& A() const { return data_->a; }
  const ComplexMatrix& sqrtA() const { return data_->sqrt_a; }
  const ComplexMatrix& pinvA() const { return data_->pinv_a; }
  const ComplexMatrix& pinv_sqrtA() const { return data_->pinv_sqrt_a; }
  /// Orthogonal projection onto R(A).
  const ComplexMatrix& projR() const { return data_->proj_r; }
  std::size_t rank() const { return data_->rank; }
  const Tolerances& tol() const { return data_->tol; }
  const HermitianEigen& eigen() const { return data_->eigen; }
  /// Eigenvalues at or below this count as zero.
  double cutoff() const { return data_->cutoff; }

  /// Assembles a context from a decomposition the caller vouches for.
  /// new_context is the validating entry point.
  static AContext from_eigen(ComplexMatrix a, HermitianEigen eigen, double cutoff,
                             const Tolerances& tol);

 private:
  struct Data {
    ComplexMatrix a;
    ComplexMatrix sqrt_a;
    ComplexMatrix pinv_a;
    ComplexMatrix pinv_sqrt_a;
    ComplexMatrix proj_r;
    std::size_t rank = 0;
    Tolerances tol;
    HermitianEigen eigen;
    double cutoff = 0.0;
  };
  explicit AContext(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Throws DimensionMismatch (non-square or empty), NotHermitian, NotPSD.
/// A = 0 is accepted with rank 0.
AContext new_context(const ComplexMatrix& a, const Tolerances& tol = {});

/// ⟨x|y⟩_A = ⟨Ax|y⟩ = y*Ax.
Complex semi_inner(const AContext& ctx, const ComplexMatrix& x, const ComplexMatrix& y);
/// ‖x‖_A = ‖A^{1/2}x‖.
double a_norm_vec(const AContext& ctx, const ComplexMatrix& x);

/// k column vectors with ‖x‖_A = 1 supported on R(A): x = (A^{1/2})†y/‖y‖ for
/// a complex normal y projected onto R(A). Throws RankZero when A = 0.
std::vector<ComplexMatrix> sample_a_unit_sphere(const AContext& ctx, std::size_t k,
                                                std::uint64_t seed);

}  // namespace semihilbert

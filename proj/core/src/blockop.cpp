#include "semihilbert/blockop.hpp"

#include "semihilbert/errors.hpp"
#include "semihilbert/semiop.hpp"

namespace semihilbert {

BlockContext make_block_context(const AContext& base, bool validate) {
  const std::size_t n = base.dim();
  const HermitianEigen& eig = base.eigen();
  HermitianEigen lifted;
  lifted.eigenvalues.reserve(2 * n);
  lifted.eigenvectors = ComplexMatrix(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    lifted.eigenvalues.push_back(eig.eigenvalues[k]);
    lifted.eigenvalues.push_back(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      lifted.eigenvectors(i, 2 * k) = eig.eigenvectors(i, k);
      lifted.eigenvectors(n + i, 2 * k + 1) = eig.eigenvectors(i, k);
    }
  }
  AContext bbA = AContext::from_eigen(block_diagonal(base.A(), base.A()), std::move(lifted),
                                      base.cutoff(), base.tol());
  if (validate) {
    const AContext fresh = new_context(bbA.A(), base.tol());
    const double tol = 1e-10 * std::max(1.0, frobenius_norm(bbA.A()));
    const bool same = fresh.rank() == bbA.rank() &&
                      frobenius_norm(fresh.sqrtA() - bbA.sqrtA()) <= tol &&
                      frobenius_norm(fresh.projR() - bbA.projR()) <= 1e-10;
    if (!same) {
      throw Error(ErrorKind::PreconditionFailed, "block lift disagrees with a direct decomposition");
    }
  }
  return {base, std::move(bbA)};
}

Block2x2 assemble(const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& r,
                  const ComplexMatrix& s) {
  return {p, q, r, s, block_matrix(p, q, r, s)};
}

double block_sharp_check(const BlockContext& bctx, const Block2x2& blk) {
  const AContext& a = bctx.base;
  const ComplexMatrix expected =
      block_matrix(sharp(a, blk.P), sharp(a, blk.R), sharp(a, blk.Q), sharp(a, blk.S));
  return frobenius_norm(sharp(bctx.bbA, blk.assembled) - expected);
}

std::vector<ComplexMatrix> proof_unitaries(const BlockContext& bctx) {
  const std::size_t n = bctx.base.dim();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix zero(n, n);
  return {block_matrix(-id, zero, zero, id), block_matrix(id, zero, zero, -id),
          block_matrix(zero, id, id, zero)};
}

}  // namespace semihilbert

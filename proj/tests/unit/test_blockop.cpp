#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "semihilbert/blockop.hpp"
#include "semihilbert/errors.hpp"
#include "semihilbert/generators.hpp"
#include "semihilbert/linalg.hpp"
#include "semihilbert/semiop.hpp"

using namespace semihilbert;

namespace {

ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::uint64_t seed) {
  const auto g = oracle::random_matrix(n, rank, seed);
  return hermitian_part(g * g.adjoint());
}

std::vector<AContext> weights() {
  return {new_context(ComplexMatrix::identity(2)), new_context(ComplexMatrix::diagonal({2.0, 1.0})),
          new_context(ComplexMatrix::diagonal({1.0, 0.0})), new_context(random_psd(3, 3, 1)),
          new_context(random_psd(4, 2, 2))};
}

ComplexMatrix op(const AContext& ctx, std::uint64_t seed) {
  return gen_operand(ctx, OperandKind::GeneralAdjointable, seed);
}

}  // namespace

TEST_SUITE("blockop") {
  TEST_CASE("block context examples") {
    const auto id = make_block_context(new_context(ComplexMatrix::identity(2)));
    CHECK(oracle::max_abs_diff(id.bbA.A(), ComplexMatrix::identity(4)) == 0.0);
    const auto d10 = make_block_context(new_context(ComplexMatrix::diagonal({1.0, 0.0})));
    CHECK(d10.bbA.rank() == 2);
  }

  TEST_CASE("lifted data matches a direct decomposition") {
    for (const auto& ctx : weights()) {
      const auto b = make_block_context(ctx, true);
      CHECK(b.bbA.rank() == 2 * ctx.rank());
      CHECK(oracle::max_abs_diff(b.bbA.projR(), block_diagonal(ctx.projR(), ctx.projR())) < 1e-12);
      CHECK(oracle::max_abs_diff(b.bbA.pinvA(), block_diagonal(ctx.pinvA(), ctx.pinvA())) < 1e-12);
    }
  }

  TEST_CASE("block semi-inner product splits into two terms") {
    const auto ctx = new_context(random_psd(3, 2, 3));
    const auto b = make_block_context(ctx);
    const auto x1 = oracle::random_matrix(3, 1, 4), x2 = oracle::random_matrix(3, 1, 5);
    const auto y1 = oracle::random_matrix(3, 1, 6), y2 = oracle::random_matrix(3, 1, 7);
    ComplexMatrix x(6, 1), y(6, 1);
    x.set_block(0, 0, x1);
    x.set_block(3, 0, x2);
    y.set_block(0, 0, y1);
    y.set_block(3, 0, y2);
    const Complex expected = semi_inner(ctx, x1, y1) + semi_inner(ctx, x2, y2);
    CHECK(std::abs(semi_inner(b.bbA, x, y) - expected) < 1e-12);
  }

  TEST_CASE("assemble places blocks exactly") {
    const auto p = oracle::random_matrix(2, 2, 8), q = oracle::random_matrix(2, 2, 9);
    const auto r = oracle::random_matrix(2, 2, 10), s = oracle::random_matrix(2, 2, 11);
    const ComplexMatrix z(2, 2);
    CHECK(assemble(p, z, z, s).assembled == block_diagonal(p, s));
    const auto anti = assemble(z, q, r, z).assembled;
    CHECK(anti.block(0, 0, 2, 2) == z);
    CHECK(anti.block(0, 2, 2, 2) == q);
    const auto full = assemble(p, q, r, s);
    CHECK(full.assembled.block(2, 0, 2, 2) == r);
    CHECK(full.assembled.block(2, 2, 2, 2) == s);
    try {
      assemble(p, q, r, ComplexMatrix(3, 3));
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }

  TEST_CASE("block adjoint transposes the blocks") {
    const auto id = make_block_context(new_context(ComplexMatrix::identity(2)));
    const auto p = oracle::random_matrix(2, 2, 12), q = oracle::random_matrix(2, 2, 13);
    CHECK(block_sharp_check(id, assemble(p, q, q, p)) < 1e-13);
    std::uint64_t seed = 20;
    for (const auto& ctx : weights()) {
      const auto b = make_block_context(ctx);
      const auto blk = assemble(op(ctx, seed), op(ctx, seed + 1), op(ctx, seed + 2), op(ctx, seed + 3));
      seed += 4;
      CHECK(block_sharp_check(b, blk) <= 1e-10 * std::max(1.0, frobenius_norm(blk.assembled)));
    }
  }

  TEST_CASE("proof unitaries are A-unitary and swap rows") {
    std::uint64_t seed = 40;
    for (const auto& ctx : weights()) {
      const auto b = make_block_context(ctx);
      const auto us = proof_unitaries(b);
      REQUIRE(us.size() == 3);
      for (const auto& u : us) CHECK(classify(b.bbA, u).a_unitary);
      const std::size_t n = ctx.dim();
      const ComplexMatrix z(n, n);
      const auto r = op(ctx, seed++), s = op(ctx, seed++);
      const auto swapped = sharp(b.bbA, us[2]) * block_matrix(z, z, r, s) * us[2];
      const auto& p = b.bbA.projR();
      const auto expected = p * block_matrix(s, r, z, z) * p;
      CHECK(frobenius_norm(p * swapped * p - expected) <= 1e-10 * frobenius_norm(expected));
    }
  }

  TEST_CASE("block-level identities on random instances") {
    std::uint64_t seed = 60;
    for (const auto& ctx : weights()) {
      const auto b = make_block_context(ctx);
      const auto p = op(ctx, seed++), q = op(ctx, seed++), r = op(ctx, seed++), s = op(ctx, seed++);
      const auto t = block_matrix(p, q, r, s);
      const double w = a_numerical_radius(b.bbA, t);
      const ComplexMatrix z(ctx.dim(), ctx.dim());
      const double m = std::max(a_op_norm(ctx, p), a_op_norm(ctx, s));
      CHECK(a_op_norm(b.bbA, block_diagonal(p, s)) == doctest::Approx(m).epsilon(1e-10));
      CHECK(a_op_norm(b.bbA, block_matrix(z, p, s, z)) == doctest::Approx(m).epsilon(1e-10));
      CHECK(a_numerical_radius(b.bbA, block_diagonal(p, s)) ==
            doctest::Approx(std::max(a_numerical_radius(ctx, p), a_numerical_radius(ctx, s)))
                .epsilon(1e-9));
      CHECK(a_numerical_radius(b.bbA, block_diagonal(p, s)) <= w + 1e-9);
      CHECK(a_numerical_radius(b.bbA, block_matrix(z, q, r, z)) <= w + 1e-9);
      const double r_bound = spectral_radius_2x2_nonneg(a_op_norm(ctx, p), a_op_norm(ctx, q),
                                                        a_op_norm(ctx, r), a_op_norm(ctx, s));
      CHECK(a_spectral_radius(b.bbA, t) <= r_bound + 1e-9);
      for (const auto& u : proof_unitaries(b)) {
        CHECK(a_numerical_radius(b.bbA, sharp(b.bbA, u) * t * u) == doctest::Approx(w).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("anti-diagonal of two A-positive operators") {
    const auto ctx = new_context(random_psd(3, 2, 80));
    const auto b = make_block_context(ctx);
    const auto t = gen_operand(ctx, OperandKind::APositive, 81);
    const auto s = gen_operand(ctx, OperandKind::APositive, 82);
    const ComplexMatrix z(3, 3);
    CHECK(a_numerical_radius(b.bbA, block_matrix(z, t, s, z)) ==
          doctest::Approx(0.5 * a_op_norm(ctx, t + s)).epsilon(1e-9));
  }
}

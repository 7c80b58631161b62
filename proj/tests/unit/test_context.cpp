#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "semihilbert/context.hpp"
#include "semihilbert/errors.hpp"

using namespace semihilbert;

namespace {

ComplexMatrix e(std::size_t n, std::size_t k) {
  ComplexMatrix x(n, 1);
  x(k, 0) = 1.0;
  return x;
}

ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::uint64_t seed) {
  const auto g = oracle::random_matrix(n, rank, seed);
  return hermitian_part(g * g.adjoint());
}

template <class F>
ErrorKind kind_of(F f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ConfigError;
}

}  // namespace

TEST_SUITE("context") {
  TEST_CASE("identity weight") {
    const auto ctx = new_context(ComplexMatrix::identity(2));
    CHECK(ctx.rank() == 2);
    CHECK(oracle::max_abs_diff(ctx.projR(), ComplexMatrix::identity(2)) < 1e-14);
    CHECK(oracle::max_abs_diff(ctx.pinvA(), ComplexMatrix::identity(2)) < 1e-14);
  }

  TEST_CASE("diag(1,0) weight") {
    const auto ctx = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(ctx.rank() == 1);
    CHECK(oracle::max_abs_diff(ctx.projR(), ComplexMatrix::diagonal({1.0, 0.0})) < 1e-14);
    CHECK(oracle::max_abs_diff(ctx.pinvA(), ComplexMatrix::diagonal({1.0, 0.0})) < 1e-14);
  }

  TEST_CASE("diag(2,1) closed forms") {
    const auto ctx = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(oracle::max_abs_diff(ctx.sqrtA(), ComplexMatrix::diagonal({std::sqrt(2.0), 1.0})) < 1e-14);
    CHECK(oracle::max_abs_diff(ctx.pinvA(), ComplexMatrix::diagonal({0.5, 1.0})) < 1e-14);
    CHECK(oracle::max_abs_diff(ctx.pinv_sqrtA(), ComplexMatrix::diagonal({1 / std::sqrt(2.0), 1.0})) <
          1e-14);
  }

  TEST_CASE("diagonal weights reproduce entrywise closed forms") {
    const std::vector<double> lam{3.0, 0.0, 0.25, 7.0};
    const auto ctx = new_context(ComplexMatrix::diagonal(lam));
    CHECK(ctx.rank() == 3);
    for (std::size_t k = 0; k < lam.size(); ++k) {
      const double l = lam[k];
      CHECK(std::abs(ctx.sqrtA()(k, k) - std::sqrt(l)) < 1e-14);
      CHECK(std::abs(ctx.pinvA()(k, k) - (l > 0 ? 1 / l : 0.0)) < 1e-14);
      CHECK(std::abs(ctx.pinv_sqrtA()(k, k) - (l > 0 ? 1 / std::sqrt(l) : 0.0)) < 1e-14);
      CHECK(std::abs(ctx.projR()(k, k) - (l > 0 ? 1.0 : 0.0)) < 1e-14);
    }
  }

  TEST_CASE("derived-matrix invariants on random weights") {
    for (std::size_t rank = 1; rank <= 5; ++rank) {
      const auto a = random_psd(5, rank, 10 + rank);
      const auto ctx = new_context(a);
      CHECK(ctx.rank() == rank);
      const double na = frobenius_norm(a);
      const auto& p = ctx.projR();
      CHECK(frobenius_norm(ctx.sqrtA() * ctx.sqrtA() - a) <= 1e-12 * na);
      CHECK(frobenius_norm(a * ctx.pinvA() - p) < 1e-10);
      CHECK(frobenius_norm(ctx.pinvA() * a - p) < 1e-10);
      CHECK(frobenius_norm(p * p - p) < 1e-12);
      CHECK(frobenius_norm(p - p.adjoint()) < 1e-12);
      CHECK(frobenius_norm(ctx.pinv_sqrtA() * ctx.sqrtA() - p) < 1e-10);
      CHECK(frobenius_norm(p * a - a) <= 1e-12 * na);
      CHECK(frobenius_norm(a * p - a) <= 1e-12 * na);
    }
  }

  TEST_CASE("zero weight is accepted with rank 0") {
    const auto ctx = new_context(ComplexMatrix(3, 3));
    CHECK(ctx.rank() == 0);
    CHECK(a_norm_vec(ctx, oracle::random_matrix(3, 1, 1)) == 0.0);
    CHECK(kind_of([&] { sample_a_unit_sphere(ctx, 1, 0); }) == ErrorKind::RankZero);
  }

  TEST_CASE("validation errors") {
    CHECK(kind_of([] { new_context(ComplexMatrix(2, 3)); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { new_context(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}); }) ==
          ErrorKind::NotHermitian);
    CHECK(kind_of([] { new_context(ComplexMatrix::diagonal({1.0, -1.0})); }) == ErrorKind::NotPSD);
    const auto ctx = new_context(ComplexMatrix::identity(2));
    CHECK(kind_of([&] { semi_inner(ctx, e(3, 0), e(3, 0)); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { a_norm_vec(ctx, e(3, 0)); }) == ErrorKind::DimensionMismatch);
  }

  TEST_CASE("semi_inner and a_norm_vec examples") {
    const auto id = new_context(ComplexMatrix::identity(2));
    CHECK(semi_inner(id, e(2, 0), e(2, 0)) == Complex(1.0));
    CHECK(a_norm_vec(id, ComplexMatrix{{3.0}, {4.0}}) == doctest::Approx(5.0));
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(std::abs(semi_inner(d21, e(2, 0), e(2, 0)) - 2.0) < 1e-14);
    CHECK(a_norm_vec(d21, ComplexMatrix{{1.0}, {1.0}}) == doctest::Approx(std::sqrt(3.0)));
    const auto d10 = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(semi_inner(d10, e(2, 1), e(2, 1)) == Complex(0.0));
    CHECK(a_norm_vec(d10, ComplexMatrix{{0.0}, {7.0}}) == 0.0);
  }

  TEST_CASE("semi_inner is a conjugate-symmetric sesquilinear form") {
    const auto ctx = new_context(random_psd(4, 3, 5));
    const auto x = oracle::random_matrix(4, 1, 6);
    const auto y = oracle::random_matrix(4, 1, 7);
    const Complex c(1.5, -0.5);
    CHECK(std::abs(semi_inner(ctx, x, y) - std::conj(semi_inner(ctx, y, x))) < 1e-12);
    CHECK(std::abs(semi_inner(ctx, c * x, y) - c * semi_inner(ctx, x, y)) < 1e-12);
    // Equals ⟨A^{1/2}x, A^{1/2}y⟩ computed from the quadratic form alone.
    const auto ax = oracle::apply(ctx.A(), std::vector<Complex>(x.data().begin(), x.data().end()));
    const auto yv = std::vector<Complex>(y.data().begin(), y.data().end());
    CHECK(std::abs(semi_inner(ctx, x, y) - oracle::dot(yv, ax)) < 1e-12);
    CHECK(a_norm_vec(ctx, x) == doctest::Approx(std::sqrt(semi_inner(ctx, x, x).real())));
  }

  TEST_CASE("Cauchy-Schwarz on random triples") {
    for (int k = 0; k < 50; ++k) {
      const auto ctx = new_context(random_psd(3, 1 + k % 3, 100 + k));
      const auto x = oracle::random_matrix(3, 1, 200 + k);
      const auto y = oracle::random_matrix(3, 1, 300 + k);
      CHECK(std::abs(semi_inner(ctx, x, y)) <= a_norm_vec(ctx, x) * a_norm_vec(ctx, y) + 1e-12);
    }
  }

  TEST_CASE("sphere samples have unit A-norm and live in R(A)") {
    const auto id = new_context(ComplexMatrix::identity(3));
    for (const auto& x : sample_a_unit_sphere(id, 3, 1)) {
      CHECK(vector_norm(x) == doctest::Approx(1.0).epsilon(1e-12));
    }
    const auto d10 = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    for (const auto& x : sample_a_unit_sphere(d10, 20, 2)) {
      CHECK(a_norm_vec(d10, x) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(x(1, 0) == Complex(0.0));
    }
    const auto ctx = new_context(random_psd(5, 3, 9));
    const auto samples = sample_a_unit_sphere(ctx, 200, 3);
    CHECK(samples.size() == 200);
    for (const auto& x : samples) {
      CHECK(std::abs(a_norm_vec(ctx, x) - 1.0) <= 1e-12);
      CHECK(vector_norm(x - ctx.projR() * x) < 1e-10 * vector_norm(x));
    }
  }
}

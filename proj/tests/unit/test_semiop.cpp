#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "semihilbert/context.hpp"
#include "semihilbert/errors.hpp"
#include "semihilbert/generators.hpp"
#include "semihilbert/semiop.hpp"

using namespace semihilbert;

namespace {

const ComplexMatrix kJordan{{0.0, 1.0}, {0.0, 0.0}};

ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::uint64_t seed) {
  const auto g = oracle::random_matrix(n, rank, seed);
  return hermitian_part(g * g.adjoint());
}

// T mapping N(A) into N(A) and R(A) into R(A), so it is in B_A.
ComplexMatrix adjointable(const AContext& ctx, std::uint64_t seed) {
  const auto g = oracle::random_matrix(ctx.dim(), ctx.dim(), seed);
  const auto& p = ctx.projR();
  const auto q = ComplexMatrix::identity(ctx.dim()) - p;
  return p * g * p + q * g * q;
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

TEST_SUITE("semiop") {
  TEST_CASE("is_a_bounded examples") {
    const auto id = new_context(ComplexMatrix::identity(2));
    CHECK(is_a_bounded(id, oracle::random_matrix(2, 2, 1)));
    const auto d10 = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(is_a_bounded(d10, ComplexMatrix{{3.0, 0.0}, {5.0, 7.0}}));
    CHECK_FALSE(is_a_bounded(d10, ComplexMatrix{{3.0, 1.0}, {5.0, 7.0}}));
    CHECK(kind_of([&] { a_op_norm(d10, ComplexMatrix{{3.0, 1.0}, {5.0, 7.0}}); }) ==
          ErrorKind::NotABounded);
    CHECK(kind_of([&] { is_a_bounded(d10, ComplexMatrix::identity(3)); }) ==
          ErrorKind::DimensionMismatch);
  }

  TEST_CASE("is_a_adjointable examples") {
    const auto full = new_context(random_psd(3, 3, 2));
    CHECK(is_a_adjointable(full, oracle::random_matrix(3, 3, 3)));
    const auto d10 = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK_FALSE(is_a_adjointable(d10, ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}));
    CHECK(is_a_adjointable(d10, ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}));
    CHECK(is_a_adjointable(d10, ComplexMatrix{{Complex(2, 1), 0.0}, {0.0, -4.0}}));
    CHECK(kind_of([&] { sharp(d10, ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) ==
          ErrorKind::NotAdjointable);
  }

  TEST_CASE("a_adjointable implies a_bounded on random rank-deficient weights") {
    for (int k = 0; k < 40; ++k) {
      const auto ctx = new_context(random_psd(3, 1 + k % 2, 50 + k));
      const auto t = oracle::random_matrix(3, 3, 90 + k);
      const auto candidates = {t, adjointable(ctx, 130 + k), ctx.projR() * t};
      for (const auto& c : candidates) {
        if (is_a_adjointable(ctx, c)) CHECK(is_a_bounded(ctx, c));
      }
    }
  }

  TEST_CASE("sharp examples") {
    const auto id = new_context(ComplexMatrix::identity(3));
    const auto t = oracle::random_matrix(3, 3, 4);
    CHECK(oracle::max_abs_diff(sharp(id, t), t.adjoint()) < 1e-14);
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(oracle::max_abs_diff(sharp(d21, kJordan), ComplexMatrix{{0.0, 0.0}, {2.0, 0.0}}) <=
          1e-12);
  }

  TEST_CASE("sharp is the A-adjoint") {
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      const auto ctx = new_context(random_psd(4, rank, 20 + rank));
      const auto t = adjointable(ctx, 30 + rank);
      const auto ts = sharp(ctx, t);
      const auto x = oracle::random_matrix(4, 1, 40 + rank);
      const auto y = oracle::random_matrix(4, 1, 50 + rank);
      const double scale = frobenius_norm(ctx.A()) * frobenius_norm(t) * vector_norm(x) * vector_norm(y);
      CHECK(std::abs(semi_inner(ctx, t * x, y) - semi_inner(ctx, x, ts * y)) <= 1e-11 * scale);
      CHECK(frobenius_norm(ctx.A() * ts - t.adjoint() * ctx.A()) <=
            1e-11 * frobenius_norm(ctx.A()) * frobenius_norm(t));
      const auto& p = ctx.projR();
      CHECK(frobenius_norm(sharp(ctx, ts) - p * t * p) <= 1e-10 * frobenius_norm(t));
    }
  }

  TEST_CASE("compress examples and invariants") {
    const auto id = new_context(ComplexMatrix::identity(2));
    const auto t = oracle::random_matrix(2, 2, 5);
    CHECK(oracle::max_abs_diff(compress(id, t).c, t) < 1e-14);
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(oracle::max_abs_diff(compress(d21, kJordan).c, ComplexMatrix{{0.0, std::sqrt(2.0)}, {0.0, 0.0}}) <
          1e-14);
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      const auto ctx = new_context(random_psd(4, rank, 60 + rank));
      const auto a = adjointable(ctx, 70 + rank);
      const auto b = adjointable(ctx, 80 + rank);
      const auto ca = compress(ctx, a).c;
      const auto q = ComplexMatrix::identity(4) - ctx.projR();
      const double s = frobenius_norm(ca);
      CHECK(frobenius_norm(ca * q) <= 1e-10 * s);
      CHECK(frobenius_norm(q * ca) <= 1e-10 * s);
      CHECK(frobenius_norm(compress(ctx, a * b).c - ca * compress(ctx, b).c) <=
            1e-9 * s * frobenius_norm(compress(ctx, b).c));
      const auto& p = ctx.projR();
      CHECK(frobenius_norm(compress(ctx, sharp(ctx, a)).c - p * ca.adjoint() * p) <= 1e-9 * s);
    }
  }

  TEST_CASE("exact micro-cases") {
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(std::abs(a_op_norm(d21, kJordan) - std::sqrt(2.0)) <= 1e-10);
    CHECK(std::abs(a_numerical_radius(d21, kJordan) - std::sqrt(2.0) / 2) <= 1e-8);
    CHECK(std::abs(a_spectral_radius(d21, kJordan)) <= 1e-8);
    const auto d10 = new_context(ComplexMatrix::diagonal({1.0, 0.0}));
    CHECK(std::abs(a_op_norm(d10, ComplexMatrix{{3.0, 0.0}, {5.0, 7.0}}) - 3.0) <= 1e-10);
    const auto id = new_context(ComplexMatrix::identity(3));
    const auto t = oracle::random_matrix(3, 3, 6);
    CHECK(a_op_norm(id, t) == doctest::Approx(spectral_norm(t)).epsilon(1e-14));
    const auto h = hermitian_part(t);
    CHECK(a_numerical_radius(id, h) == doctest::Approx(spectral_norm(h)).epsilon(1e-10));
  }

  TEST_CASE("A-seminorm and A-numerical radius against quadratic-form search") {
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      const auto ctx = new_context(random_psd(4, rank, 140 + rank));
      const auto t = adjointable(ctx, 150 + rank);
      const double norm = a_op_norm(ctx, t);
      const double w = a_numerical_radius(ctx, t);
      const double norm_oracle = oracle::a_norm(ctx.A(), t, 160 + rank);
      const double w_oracle = oracle::a_radius(ctx.A(), t, 170 + rank);
      CHECK(norm >= norm_oracle - 1e-7 * norm);
      CHECK(norm == doctest::Approx(norm_oracle).epsilon(1e-5));
      CHECK(w >= w_oracle - 1e-7 * w);
      CHECK(w == doctest::Approx(w_oracle).epsilon(1e-5));
      CHECK(w >= 0.5 * norm - 1e-12);
      CHECK(w <= norm + 1e-12);
    }
  }

  TEST_CASE("A-seminorm dominates |<Tx|y>_A| over sampled A-unit vectors") {
    const auto ctx = new_context(random_psd(4, 3, 180));
    const auto t = adjointable(ctx, 181);
    const double norm = a_op_norm(ctx, t);
    const auto xs = sample_a_unit_sphere(ctx, 200, 182);
    const auto ys = sample_a_unit_sphere(ctx, 200, 183);
    double best = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      best = std::max(best, std::abs(semi_inner(ctx, t * xs[k], ys[k])));
      CHECK(a_norm_vec(ctx, t * xs[k]) <= norm + 1e-12);
    }
    CHECK(best <= norm + 1e-12);
  }

  TEST_CASE("A-numerical radius is rotation invariant") {
    const auto ctx = new_context(random_psd(3, 2, 190));
    const auto t = adjointable(ctx, 191);
    const Complex phase = std::polar(1.0, 2.5);
    CHECK(a_numerical_radius(ctx, phase * t) ==
          doctest::Approx(a_numerical_radius(ctx, t)).epsilon(1e-10));
  }

  TEST_CASE("A-spectral radius properties") {
    const auto ctx = new_context(random_psd(4, 3, 200));
    const auto nil = gen_operand(ctx, OperandKind::ANilpotent, 201);
    // Repeated squaring of a rounded nilpotent bottoms out near sqrt(eps).
    CHECK(a_spectral_radius(ctx, nil) <= 1e-6);
    const auto sa = gen_operand(ctx, OperandKind::ASelfadjoint, 202);
    CHECK(a_spectral_radius(ctx, sa) == doctest::Approx(a_op_norm(ctx, sa)).epsilon(1e-6));
    const auto t = adjointable(ctx, 203);
    const auto s = adjointable(ctx, 204);
    CHECK(a_spectral_radius(ctx, t * s) == doctest::Approx(a_spectral_radius(ctx, s * t)).epsilon(1e-6));
    // ‖T^8‖_A^{1/8} approaches r_A(T) from above.
    const double r = a_spectral_radius(ctx, t);
    const double n8 = std::pow(a_op_norm(ctx, matrix_power(t, 8)), 1.0 / 8);
    CHECK(n8 >= r * (1 - 1e-9));
    CHECK(a_op_norm(ctx, t) >= n8 * (1 - 1e-9));
  }

  TEST_CASE("re_a and im_a") {
    const auto id = new_context(ComplexMatrix::identity(2));
    const auto t = oracle::random_matrix(2, 2, 7);
    CHECK(oracle::max_abs_diff(re_a(id, t), hermitian_part(t)) < 1e-14);
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    CHECK(oracle::max_abs_diff(re_a(d21, kJordan), ComplexMatrix{{0.0, 0.5}, {1.0, 0.0}}) < 1e-12);
    for (std::size_t rank = 1; rank <= 3; ++rank) {
      const auto ctx = new_context(random_psd(3, rank, 210 + rank));
      const auto x = adjointable(ctx, 220 + rank);
      const auto re = re_a(ctx, x);
      const auto im = im_a(ctx, x);
      CHECK(is_a_selfadjoint(ctx, re));
      CHECK(is_a_selfadjoint(ctx, im));
      const auto& p = ctx.projR();
      const auto sum = re + Complex(0, 1) * im;
      CHECK(frobenius_norm(p * sum * p - p * x * p) <= 1e-10 * frobenius_norm(x));
    }
    const auto ctx = new_context(random_psd(3, 2, 230));
    const auto sa = gen_operand(ctx, OperandKind::ASelfadjoint, 231);
    CHECK(frobenius_norm(im_a(ctx, sa) * ctx.projR()) <= 1e-10 * frobenius_norm(sa));
  }

  TEST_CASE("classify examples and implications") {
    const auto id = new_context(ComplexMatrix::identity(2));
    const ComplexMatrix u{{0.0, 1.0}, {Complex(0, 1), 0.0}};
    CHECK(classify(id, u).a_unitary);
    const auto d21 = new_context(ComplexMatrix::diagonal({2.0, 1.0}));
    const ComplexMatrix h{{1.0, Complex(2, 1)}, {Complex(2, -1), -3.0}};
    CHECK(classify(d21, d21.pinvA() * h).a_selfadjoint);
    for (std::size_t rank = 1; rank <= 3; ++rank) {
      const auto ctx = new_context(random_psd(3, rank, 240 + rank));
      CHECK(classify(ctx, ComplexMatrix::identity(3)).a_unitary);
      for (auto kind : {OperandKind::GeneralAdjointable, OperandKind::ASelfadjoint,
                        OperandKind::APositive, OperandKind::AUnitary}) {
        const auto c = classify(ctx, gen_operand(ctx, kind, 250 + rank));
        CHECK(c.a_bounded);
        if (c.a_positive) CHECK(c.a_selfadjoint);
        if (c.a_unitary) CHECK(c.a_adjointable);
      }
    }
    const auto c = classify(d21, -ComplexMatrix::identity(2));
    CHECK(c.a_selfadjoint);
    CHECK_FALSE(c.a_positive);
  }

  TEST_CASE("norm identities for T and its A-adjoint") {
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      const auto ctx = new_context(random_psd(4, rank, 260 + rank));
      const auto t = adjointable(ctx, 270 + rank);
      const auto ts = sharp(ctx, t);
      const double n2 = std::pow(a_op_norm(ctx, t), 2);
      CHECK(a_op_norm(ctx, ts * t) == doctest::Approx(n2).epsilon(1e-9));
      CHECK(a_op_norm(ctx, t * ts) == doctest::Approx(n2).epsilon(1e-9));
      CHECK(std::pow(a_op_norm(ctx, ts), 2) == doctest::Approx(n2).epsilon(1e-9));
    }
  }
}

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace semihilbert {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are n×1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  static ComplexMatrix column(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return entries_; }
  std::span<const Complex> data() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& src);
  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

double frobenius_norm(const ComplexMatrix& m);
/// Euclidean norm of a column vector (Frobenius norm in general).
inline double vector_norm(const ComplexMatrix& x) { return frobenius_norm(x); }
/// ⟨x|y⟩ = Σ x_i·conj(y_i): linear in the first argument.
Complex inner(const ComplexMatrix& x, const ComplexMatrix& y);
/// (M + M*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);
ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned n);
/// [[p, q], [r, s]] for four n×n blocks.
ComplexMatrix block_matrix(const ComplexMatrix& p, const ComplexMatrix& q,
                           const ComplexMatrix& r, const ComplexMatrix& s);
/// diag(a, b).
ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace semihilbert

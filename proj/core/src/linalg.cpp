#include "semihilbert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "semihilbert/errors.hpp"

namespace semihilbert {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Diagonalizes the Hermitian matrix `a` in place. When `v` is non-null the
// rotations are accumulated into it (V ← V·G).
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* v, const Tolerances& tol) {
  const std::size_t n = a.rows();
  const double threshold = tol.jacobi * frobenius_norm(a);
  int sweeps = 0;
  while (off_diagonal_mass(a) > threshold) {
    if (sweeps++ >= tol.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi exceeded " + std::to_string(tol.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = std::conj(apq / r);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = [[c, s], [-s·phase, c·phase]] on the (p, q) plane.
        const Complex gqp = -s * phase;
        const Complex gqq = c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          const Complex new_kp = akp * c + akq * gqp;
          const Complex new_kq = akp * s + akq * gqq;
          a(k, p) = new_kp;
          a(k, q) = new_kq;
          a(p, k) = std::conj(new_kp);
          a(q, k) = std::conj(new_kq);
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = vkp * c + vkq * gqp;
            (*v)(k, q) = vkp * s + vkq * gqq;
          }
        }
      }
    }
  }
}

ComplexMatrix checked_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition needs a square matrix, got " +
                                                  std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()));
  }
  const double scale = frobenius_norm(m);
  const double asym = frobenius_norm(m - m.adjoint());
  if (asym > tol.herm * scale) {
    throw Error(ErrorKind::NotHermitian, "‖M − M*‖_F = " + std::to_string(asym) +
                                             " exceeds tolerance for ‖M‖_F = " +
                                             std::to_string(scale));
  }
  return hermitian_part(m);
}

// λ_max of a matrix already known to be Hermitian; `a` is consumed.
double max_eigenvalue_in_place(ComplexMatrix& a, const Tolerances& tol) {
  if (a.rows() == 0) return 0.0;
  jacobi_diagonalize(a, nullptr, tol);
  double best = a(0, 0).real();
  for (std::size_t i = 1; i < a.rows(); ++i) best = std::max(best, a(i, i).real());
  return best;
}

}  // namespace

double max_eigenvalue_tridiagonal(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "eigenvalue of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;
  ComplexMatrix a = hermitian_part(m);
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  std::vector<Complex> v(n), p(n), w(n);

  // Householder reduction to real tridiagonal form; only |e_k| is kept since
  // the phases of the off-diagonal do not affect the spectrum.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double alpha2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) alpha2 += std::norm(a(k + 1 + i, k));
    const double alpha = std::sqrt(alpha2);
    e[k] = alpha;
    d[k] = a(k, k).real();
    const Complex x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    if (alpha == 0.0) continue;
    const Complex phase = ax0 == 0.0 ? Complex(1.0) : x0 / ax0;
    for (std::size_t i = 0; i < len; ++i) v[i] = a(k + 1 + i, k);
    v[0] += phase * alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;
    // p = τ·A22·v, w = p − (τ/2)(v*p)·v, A22 ← A22 − v w* − w v*
    Complex vp = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      Complex sum = 0.0;
      for (std::size_t j = 0; j < len; ++j) sum += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = tau * sum;
      vp += std::conj(v[i]) * p[i];
    }
    const Complex kfac = 0.5 * tau * vp;
    for (std::size_t i = 0; i < len; ++i) w[i] = p[i] - kfac * v[i];
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < len; ++j) {
        a(k + 1 + i, k + 1 + j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
      }
    }
  }
  if (n >= 2) {
    d[n - 2] = a(n - 2, n - 2).real();
    e[n - 2] = std::abs(a(n - 1, n - 2));
  }
  d[n - 1] = a(n - 1, n - 1).real();

  // Implicit QL on the tridiagonal, eigenvalues only.
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < static_cast<int>(n); ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm < static_cast<int>(n) - 1; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
      }
      if (mm != l) {
        if (iter++ == 60) {
          throw Error(ErrorKind::NoConvergence, "tridiagonal QL did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::sqrt(g * g + 1.0);
        g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
        double sn = 1.0;
        double cs = 1.0;
        double pp = 0.0;
        int i;
        for (i = mm - 1; i >= l; --i) {
          const double f = sn * e[i];
          const double bb = cs * e[i];
          r = std::sqrt(f * f + g * g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[mm] = 0.0;
            break;
          }
          sn = f / r;
          cs = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * sn + 2.0 * cs * bb;
          pp = sn * r;
          d[i + 1] = g + pp;
          g = cs * r - bb;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= pp;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }
  return *std::max_element(d.begin(), d.end());
}

HermitianEigen herm_eig(const ComplexMatrix& m, const Tolerances& tol) {
  ComplexMatrix a = checked_hermitian(m, tol);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_diagonalize(a, &v, tol);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double max_eigenvalue(const ComplexMatrix& m, const Tolerances& tol) {
  ComplexMatrix a = checked_hermitian(m, tol);
  return max_eigenvalue_in_place(a, tol);
}

double rank_cutoff(std::span<const double> eigenvalues, const Tolerances& tol) {
  if (eigenvalues.empty()) return 0.0;
  const double lmax = std::max(0.0, *std::max_element(eigenvalues.begin(), eigenvalues.end()));
  return static_cast<double>(eigenvalues.size()) * tol.rank_cutoff * lmax;
}

ComplexMatrix psd_function(const HermitianEigen& eig, const std::function<double(double)>& f) {
  const ComplexMatrix& v = eig.eigenvectors;
  const std::size_t n = v.rows();
  ComplexMatrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double fj = f(eig.eigenvalues[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) = v(i, j) * fj;
  }
  return scaled * v.adjoint();
}

ComplexMatrix psd_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                           const Tolerances& tol) {
  HermitianEigen eig = herm_eig(m, tol);
  if (!eig.eigenvalues.empty()) {
    const double lmax = std::max(0.0, eig.eigenvalues.back());
    const double lmin = eig.eigenvalues.front();
    if (lmin < -tol.psd * lmax || (lmax == 0.0 && lmin < 0.0)) {
      throw Error(ErrorKind::NotPSD, "smallest eigenvalue " + std::to_string(lmin) +
                                         " against largest " + std::to_string(lmax));
    }
    for (double& l : eig.eigenvalues) l = std::max(l, 0.0);
  }
  return psd_function(eig, f);
}

namespace psd_maps {

std::function<double(double)> sqrt() {
  return [](double l) { return std::sqrt(std::max(l, 0.0)); };
}

std::function<double(double)> pinv(double cutoff) {
  return [cutoff](double l) { return l > cutoff ? 1.0 / l : 0.0; };
}

std::function<double(double)> pinv_sqrt(double cutoff) {
  return [cutoff](double l) { return l > cutoff ? 1.0 / std::sqrt(l) : 0.0; };
}

}  // namespace psd_maps

double spectral_norm(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.empty()) return 0.0;
  ComplexMatrix gram = hermitian_part(m.rows() >= m.cols() ? m.adjoint() * m : m * m.adjoint());
  return std::sqrt(std::max(0.0, max_eigenvalue_in_place(gram, tol)));
}

SweepResult theta_sweep_max(const std::function<double(double)>& g, int grid_points,
                            int golden_iters) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const int n = std::max(grid_points, 3);
  const double step = kTwoPi / n;

  std::vector<double> values(n);
  SweepResult best{-HUGE_VAL, 0.0};
  for (int k = 0; k < n; ++k) {
    values[k] = g(k * step);
    if (values[k] > best.value) best = {values[k], k * step};
  }

  // Discrete local maxima on the periodic grid, strongest first.
  std::vector<int> peaks;
  for (int k = 0; k < n; ++k) {
    const double left = values[(k + n - 1) % n];
    const double right = values[(k + 1) % n];
    if (values[k] >= left && values[k] >= right) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  constexpr std::size_t kMaxRefined = 4;
  if (peaks.size() > kMaxRefined) peaks.resize(kMaxRefined);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k : peaks) {
    double lo = (k - 1) * step;
    double hi = (k + 1) * step;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = g(c);
    double fd = g(d);
    for (int it = 0; it < golden_iters; ++it) {
      if (fc > best.value) best = {fc, c};
      if (fd > best.value) best = {fd, d};
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = g(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = g(d);
      }
    }
    if (fc > best.value) best = {fc, c};
    if (fd > best.value) best = {fd, d};
  }
  best.theta = std::fmod(best.theta + kTwoPi, kTwoPi);
  return best;
}

double numerical_radius(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "numerical radius needs a square matrix");
  }
  if (m.empty()) return 0.0;
  // Re(e^{iθ}M) = cos θ·(M + M*)/2 + sin θ·i(M − M*)/2.
  const ComplexMatrix adj = m.adjoint();
  const ComplexMatrix re = 0.5 * (m + adj);
  const ComplexMatrix im = Complex(0.0, 0.5) * (m - adj);
  const std::size_t n = m.rows();
  ComplexMatrix h(n, n);
  auto g = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t k = 0; k < h.size(); ++k) h.data()[k] = c * re.data()[k] + s * im.data()[k];
    return max_eigenvalue_tridiagonal(h);
  };
  return std::max(0.0, theta_sweep_max(g, tol.theta_grid, tol.golden_iters).value);
}

double gelfand_spectral_radius(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "spectral radius needs a square matrix");
  }
  ComplexMatrix b = m;
  double log_sum = 0.0;
  double weight = 1.0;
  double previous = HUGE_VAL;
  double estimate = HUGE_VAL;
  for (int k = 0; k <= tol.gelfand_max_steps; ++k) {
    const double s = frobenius_norm(b);
    if (s == 0.0) return 0.0;
    // ‖M^{2^k}‖^{1/2^k} = Π_{j<k} s_j^{2^{-j}} · s_k^{2^{-k}}
    estimate = std::exp(log_sum + weight * std::log(s));
    if (k > 0 && std::abs(estimate - previous) <= tol.gelfand * estimate) return estimate;
    previous = estimate;
    log_sum += weight * std::log(s);
    weight *= 0.5;
    b *= 1.0 / s;
    b = b * b;
  }
  throw Error(ErrorKind::NoConvergence, "repeated squaring did not settle; last bracket [" +
                                            std::to_string(std::min(previous, estimate)) + ", " +
                                            std::to_string(std::max(previous, estimate)) + "]");
}

double spectral_radius_2x2_nonneg(double a, double b, double c, double d) {
  for (double x : {a, b, c, d}) {
    if (!(x >= 0.0)) {
      throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(x) + " is negative");
    }
  }
  return 0.5 * ((a + d) + std::sqrt((a - d) * (a - d) + 4.0 * b * c));
}

}  // namespace semihilbert

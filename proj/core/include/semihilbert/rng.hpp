#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "semihilbert/matrix.hpp"

namespace semihilbert {

/// std::mt19937_64 with distributions implemented here, so a seed yields the
/// same stream under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi);
  /// Standard normal (Box–Muller).
  double normal();
  /// (N + iN)/√2, so E|z|² = 1.
  Complex complex_normal();
  ComplexMatrix complex_normal_matrix(std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);
std::uint64_t splitmix64(std::uint64_t x);
/// Per-trial seed from (master seed, label, two indices).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t a,
                          std::uint64_t b);

}  // namespace semihilbert

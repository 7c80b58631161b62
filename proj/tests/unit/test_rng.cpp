#include <doctest.h>

#include <cmath>

#include "semihilbert/rng.hpp"

using namespace semihilbert;

TEST_SUITE("rng") {
  TEST_CASE("same seed, same stream") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(42);
    Rng d(42);
    for (int i = 0; i < 100; ++i) CHECK(c.complex_normal() == d.complex_normal());
  }

  TEST_CASE("uniform and integer ranges") {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
      const std::size_t k = rng.integer(2, 5);
      CHECK(k >= 2);
      CHECK(k <= 5);
    }
  }

  TEST_CASE("complex normal has unit second moment") {
    Rng rng(3);
    const int n = 200000;
    double m2 = 0.0;
    Complex mean = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex z = rng.complex_normal();
      m2 += std::norm(z);
      mean += z;
    }
    CHECK(m2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(mean / double(n)) < 0.01);
  }

  TEST_CASE("derived seeds separate labels and indices") {
    CHECK(derive_seed(7, "I-REFINE", 2, 0) != derive_seed(7, "I-MAIN", 2, 0));
    CHECK(derive_seed(7, "I-REFINE", 2, 0) != derive_seed(7, "I-REFINE", 3, 0));
    CHECK(derive_seed(7, "I-REFINE", 2, 0) != derive_seed(8, "I-REFINE", 2, 0));
    CHECK(derive_seed(7, "I-REFINE", 2, 0) == derive_seed(7, "I-REFINE", 2, 0));
  }

  TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  }
}

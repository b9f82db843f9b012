#pragma once

// Seeded generator for probes and property tests. Values are derived from the
// raw mt19937_64 stream so they do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>

#include "homlie/linalg.hpp"

namespace homlie {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with |p| <= range and 1 <= q <= max_den.
  Rational rational(long range, long max_den = 1) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long range, long max_den = 1) {
    Rational q;
    do q = rational(range, max_den);
    while (q == 0);
    return q;
  }

  /// Vector of small integers; never the zero vector.
  Vector nonzero_vector(std::size_t dim, long range = 3) {
    Vector v(dim);
    do
      for (auto& x : v) x = Scalar(integer(-range, range));
    while (is_zero(v));
    return v;
  }

  Matrix integer_matrix(std::size_t rows, std::size_t cols, long range = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(integer(-range, range));
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace homlie

#pragma once

// Constructed modules shared by the unit and acceptance tests.

#include "homlie/rep.hpp"
#include "homlie/sl2.hpp"

namespace fixtures {

using namespace homlie;

inline Matrix exp_nilpotent(const Matrix& n) {
  Matrix out = Matrix::identity(n.rows()), term = Matrix::identity(n.rows());
  for (long k = 1; !term.is_zero(); ++k) {
    term = Scalar::fraction(1, k) * (term * n);
    out += term;
  }
  return out;
}

/// First nonzero entry scaled to 1.
inline Matrix normalized(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return m(r, c).inverse() * m;
  return m;
}

/// exp(ad e) on sl(2), an inner automorphism that moves h.
inline Matrix exp_ad_e() { return {{1, -1, -2}, {0, 1, 0}, {0, 1, 1}}; }

/// beta = exp(rho(e)) on V(n) over the twist exp(ad e). beta sends v_1 to
/// v_0 + v_1, so it does not map weight spaces to weight spaces.
inline HomRep mixing_beta_module(long n) {
  const LieRep r = sl2_standard_rep(n);
  return hom_rep_from_lie(r, exp_ad_e(), exp_nilpotent(r.rho[0]));
}

/// Two copies of V(n) over the diagonal twist with beta = [[B, B], [0, 0]].
inline HomRep singular_beta_module(long n) {
  const Scalar L = Scalar::lambda();
  const LieRep two = direct_sum(sl2_standard_rep(n), sl2_standard_rep(n));
  const Matrix b = sl2_beta(n, L, 1);
  const std::size_t d = static_cast<std::size_t>(n + 1);
  Matrix beta(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) beta(i, j) = beta(i, d + j) = b(i, j);
  return hom_rep_from_lie(two, sl2_diagonal_twist(L), beta);
}

/// Product of the raising coefficient at i and the lowering one at i+1 in the
/// module built from the standard rep.
inline Scalar theorem_product(long n, long i, const Scalar& lambda, const Scalar& b0) {
  const HomRep m = sl2_theorem_module(n, lambda, b0);
  const auto c = static_cast<std::size_t>(i);
  return m.rho_beta[1](c + 1, c) * m.rho_beta[0](c, c + 1);
}

}  // namespace fixtures

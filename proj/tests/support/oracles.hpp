#pragma once

// Reference computations that share no code with the library's elimination,
// bracket or Kronecker routines. They loop over raw entries and are meant for
// the small sizes used in tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/random.hpp"

namespace oracle {

using homlie::Matrix;
using homlie::Scalar;
using homlie::StructureConstants;
using homlie::Vector;

/// Raw table c[i][j][k] = coefficient of x_k in [x_i, x_j].
using Table = std::vector<std::vector<std::vector<Scalar>>>;

inline Table table_of(const StructureConstants& c) {
  const std::size_t n = c.dim();
  Table t(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = c.at(i, j);
      for (std::size_t k = 0; k < n; ++k) t[i][j][k] = v[k];
    }
  return t;
}

inline Vector bracket(const Table& t, const Vector& x, const Vector& y) {
  const std::size_t n = t.size();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * t[i][j][k];
    }
  return out;
}

inline Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

/// Twisted Jacobi sum over one basis triple: [a x, [y, z]'] + cyclic, where the
/// inner bracket uses the table as given.
inline Vector hom_jacobi(const Table& t, const Matrix& alpha, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = t.size();
  const Vector x = unit(n, i), y = unit(n, j), z = unit(n, k);
  Vector s(n);
  const Vector terms[3] = {bracket(t, apply(alpha, x), bracket(t, y, z)), bracket(t, apply(alpha, y), bracket(t, z, x)),
                           bracket(t, apply(alpha, z), bracket(t, x, y))};
  for (const auto& v : terms)
    for (std::size_t q = 0; q < n; ++q) s[q] += v[q];
  return s;
}

inline bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// K(x_i, x_j) = sum over k, l of c[i][l][k] c[j][k][l], the trace of ad x_i ad x_j.
inline Matrix killing_trace(const StructureConstants& c) {
  const Table t = table_of(c);
  const std::size_t n = t.size();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) g(i, j) += t[i][l][k] * t[j][k][l];
  return g;
}

/// Laplace expansion along the first row.
inline Scalar det_cofactor(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const Scalar term = m(0, c) * det_cofactor(minor);
    out = c % 2 == 0 ? out + term : out - term;
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) c.push_back(i);
    out.push_back(c);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : combinations(m.rows(), k))
      for (const auto& cs : combinations(m.cols(), k)) {
        Matrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
        if (!det_cofactor(sub).is_zero()) return k;
      }
  return 0;
}

/// (A (x) B)_{(i,k),(j,l)} = A_ij B_kl.
inline Matrix kronecker_entries(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// rho(x) rho(y) - rho(y) rho(x) - rho([x, y]) over all basis pairs.
inline bool is_representation(const StructureConstants& c, const std::vector<Matrix>& rho) {
  const Table t = table_of(c);
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = multiply(rho[i], rho[j]) - multiply(rho[j], rho[i]);
      for (std::size_t k = 0; k < n; ++k)
        if (!t[i][j][k].is_zero()) lhs -= t[i][j][k] * rho[k];
      if (!lhs.is_zero()) return false;
    }
  return true;
}

/// Random 4-dimensional Lie algebras: a semidirect product of a line acting on
/// an abelian 3-space by a random matrix, or gl(2) = sl(2) + centre, written in a
/// random integer basis. Both constructions satisfy Jacobi by design.
inline homlie::LieAlgebra random_lie4(homlie::Rng& rng) {
  homlie::LieAlgebra base{homlie::default_names(4), StructureConstants(4)};
  if (rng.integer(0, 1) == 0) {
    const Matrix a = rng.integer_matrix(3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      Vector v(4);
      for (std::size_t k = 0; k < 3; ++k) v[k] = a(k, i);
      base.c.set_skew(3, i, v);
    }
  } else {
    // e, f, h, z with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    base.c.set_skew(2, 0, {2, 0, 0, 0});
    base.c.set_skew(2, 1, {0, -2, 0, 0});
    base.c.set_skew(0, 1, {0, 0, 1, 0});
  }
  Matrix change;
  do change = rng.integer_matrix(4, 4, 2);
  while (det_cofactor(change).is_zero());
  return homlie::change_basis(base, change);
}

}  // namespace oracle

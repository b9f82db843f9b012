#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "homlie/eigen.hpp"
#include "homlie/errors.hpp"

using namespace homlie;

namespace {

Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return rng.integer_matrix(rows, r, 2) * rng.integer_matrix(r, cols, 2);
}

Matrix lambda_matrix(Rng& rng, std::size_t n) {
  const Scalar L = Scalar::lambda();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.integer(-2, 2)) + Scalar(rng.integer(-1, 1)) * L;
  return m;
}

}  // namespace

TEST(Linalg, RankMatchesMinorOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 4));
    const std::size_t r = static_cast<std::size_t>(rng.integer(0, 3));
    const Matrix m = r == 0 ? Matrix(rows, cols) : random_low_rank(rng, rows, cols, r);
    EXPECT_EQ(rank(m), oracle::rank_by_minors(m));
  }
}

TEST(Linalg, RankOverRationalFunctionsMatchesMinorOracle) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = lambda_matrix(rng, 3);
    const Matrix m = a * rng.integer_matrix(3, 3, 1);
    EXPECT_EQ(rank(m), oracle::rank_by_minors(m));
  }
}

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = lambda_matrix(rng, 4);
    EXPECT_EQ(determinant(m), oracle::det_cofactor(m));
  }
}

TEST(Linalg, NullspaceIsAnnihilatedAndComplementary) {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_low_rank(rng, 4, 5, static_cast<std::size_t>(rng.integer(1, 3)));
    const auto [r, kernel] = rref_nullspace(m);
    EXPECT_EQ(r + kernel.dim(), 5u);
    for (const auto& v : kernel.basis()) EXPECT_TRUE(is_zero(oracle::apply(m, v)));
  }
}

TEST(Linalg, InverseOfLambdaMatrix) {
  Rng rng(12);
  int checked = 0;
  while (checked < 10) {
    const Matrix m = lambda_matrix(rng, 3);
    if (oracle::det_cofactor(m).is_zero()) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    EXPECT_EQ(oracle::multiply(m, inverse(m)), Matrix::identity(3));
    ++checked;
  }
}

TEST(Linalg, KroneckerMatchesEntryFormulaAndMixedProduct) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = lambda_matrix(rng, 2), b = rng.integer_matrix(3, 3), c = lambda_matrix(rng, 2),
                 d = rng.integer_matrix(3, 3);
    EXPECT_EQ(kronecker(a, b), oracle::kronecker_entries(a, b));
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  }
}

TEST(Linalg, VectorizeRoundTripAndColumnStacking) {
  const Matrix m{{1, 2}, {3, 4}, {5, 6}};
  const Vector v = m.vectorize();
  EXPECT_EQ(v, (Vector{1, 3, 5, 2, 4, 6}));
  EXPECT_EQ(Matrix::unvectorize(v, 3, 2), m);
}

TEST(Linalg, CommutantSolverSolvesSylvesterSystem) {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix p = rng.integer_matrix(3, 3, 2);
    const Matrix s = [&] {
      Matrix t;
      do t = rng.integer_matrix(3, 3, 2);
      while (oracle::det_cofactor(t).is_zero());
      return t;
    }();
    const Matrix q = s * p * inverse(s);
    const std::pair<Matrix, Matrix> pairs[] = {{p, q}};
    const Subspace sol = solve_commutant(pairs);
    EXPECT_TRUE(sol.contains(s.vectorize()));
    for (const auto& x : commutant_basis(pairs)) EXPECT_EQ(oracle::multiply(q, x), oracle::multiply(x, p));
  }
}

TEST(Linalg, SubspaceLatticeDimensions) {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> a{rng.nonzero_vector(5), rng.nonzero_vector(5)};
    std::vector<Vector> b{a[0] + rng.nonzero_vector(5), rng.nonzero_vector(5), a[1]};
    const Subspace sa = Subspace::span(5, a), sb = Subspace::span(5, b);
    EXPECT_EQ(sa.sum(sb).dim() + sa.intersect(sb).dim(), sa.dim() + sb.dim());
    EXPECT_TRUE(sa.sum(sb).contains(sa));
    EXPECT_TRUE(sa.contains(sa.intersect(sb)));
    for (const auto& v : sa.basis()) {
      const Vector coords = sa.coordinates(v);
      Vector back = zero_vector(5);
      for (std::size_t i = 0; i < coords.size(); ++i) back = back + coords[i] * sa.basis()[i];
      EXPECT_EQ(back, v);
    }
  }
}

TEST(Eigen, CharacteristicPolynomialAndRationalRoots) {
  const Matrix m{{2, 1, 0}, {0, 2, 0}, {0, 0, -3}};
  const Poly chi = characteristic_polynomial(m);
  EXPECT_EQ(chi.degree(), 3);
  const auto roots = rational_roots(chi);
  EXPECT_EQ(roots, (std::vector<Rational>{-3, 2}));
  EXPECT_EQ(eigenspace(m, 2).dim(), 1u);
}

TEST(Eigen, CandidatesForLambdaDependentSpectrum) {
  const Scalar L = Scalar::lambda();
  const Matrix m = Matrix::diagonal(std::vector<Scalar>{L, L.inverse(), 1, 2 * L * L});
  const auto c = eigenvalue_candidates(m);
  EXPECT_EQ(c.size(), 4u);
  for (const Scalar& expect : {L, L.inverse(), Scalar(1), 2 * L * L})
    EXPECT_NE(std::find(c.begin(), c.end(), expect), c.end()) << to_string(expect);
}

TEST(Eigen, SimplestRationalBetween) {
  EXPECT_EQ(simplest_rational_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_rational_between(Rational(3, 10), Rational(4, 10)), Rational(1, 3));
}

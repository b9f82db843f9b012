#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "homlie/errors.hpp"
#include "homlie/sl2.hpp"

using namespace homlie;

namespace {

LieAlgebra heisenberg() {
  LieAlgebra h{{"p", "q", "z"}, StructureConstants(3)};
  h.c.set_skew(0, 1, {0, 0, 1});
  return h;
}

bool brute_hom_jacobi(const HomLieAlgebra& h) {
  const oracle::Table t = oracle::table_of(h.c_alpha);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (!oracle::all_zero(oracle::hom_jacobi(t, h.alpha, i, j, k))) return false;
  return true;
}

}  // namespace

TEST(Algebra, Sl2ConstantsMatchTheDefiningRelations) {
  const LieAlgebra g = sl2_algebra();
  EXPECT_EQ(g.c.at(2, 0), (Vector{2, 0, 0}));
  EXPECT_EQ(g.c.at(2, 1), (Vector{0, -2, 0}));
  EXPECT_EQ(g.c.at(0, 1), (Vector{0, 0, 1}));
  EXPECT_EQ(g.c.at(1, 0), (Vector{0, 0, -1}));
  EXPECT_TRUE(verify_lie(g).all_pass());
}

TEST(Algebra, JacobiFailureIsDetectedWithWitness) {
  LieAlgebra bad{{"a", "b", "c"}, StructureConstants(3)};
  bad.c.set_skew(0, 1, {0, 0, 1});
  bad.c.set_skew(1, 2, {1, 0, 0});
  bad.c.set_skew(0, 2, {0, 0, 1});
  const oracle::Table t = oracle::table_of(bad.c);
  const bool oracle_ok = oracle::all_zero(oracle::hom_jacobi(t, Matrix::identity(3), 0, 1, 2));
  const VerificationReport r = verify_lie(bad);
  EXPECT_EQ(r.find("jacobi")->passed(), oracle_ok);
  EXPECT_FALSE(oracle_ok);
  EXPECT_FALSE(r.find("jacobi")->witness.empty());
}

TEST(Algebra, RandomLieAlgebrasPassBruteForceJacobi) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const LieAlgebra g = oracle::random_lie4(rng);
    EXPECT_TRUE(verify_lie(g).all_pass());
    EXPECT_TRUE(brute_hom_jacobi(as_hom_lie(g)));
  }
}

TEST(Algebra, YauTwistOfDiagonalTwistAgreesWithBruteForce) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar lambda = rng.nonzero_rational(9, 5);
    const HomLieAlgebra h = yau_twist(sl2_algebra(), sl2_diagonal_twist(lambda));
    EXPECT_TRUE(verify_hom_lie(h, true).all_pass());
    EXPECT_TRUE(brute_hom_jacobi(h));
  }
}

TEST(Algebra, TwistedBracketOfSl2) {
  const Scalar L = Scalar::lambda();
  const HomLieAlgebra h = diagonal_twist_hom_sl2(L);
  EXPECT_EQ(h.c_alpha.at(2, 0), (Vector{2 * L, 0, 0}));
  EXPECT_EQ(h.c_alpha.at(2, 1), (Vector{0, -2 * L.inverse(), 0}));
  EXPECT_EQ(h.c_alpha.at(0, 1), (Vector{0, 0, 1}));
}

TEST(Algebra, YauTwistRejectsNonMorphism) {
  const Matrix not_morphism{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  try {
    (void)yau_twist(sl2_algebra(), not_morphism);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMorphism);
  }
}

TEST(Algebra, InducedAlgebraRoundTrip) {
  const Scalar L = Scalar::lambda();
  const HomLieAlgebra h = diagonal_twist_hom_sl2(L);
  const LieAlgebra back = induced_lie_algebra(h);
  EXPECT_EQ(back.c, sl2_algebra().c);
  EXPECT_EQ(yau_twist(back, h.alpha), h);
}

TEST(Algebra, InducedAlgebraNeedsRegularMultiplicativeTwist) {
  HomLieAlgebra h = diagonal_twist_hom_sl2(2);
  h.alpha(2, 2) = 3;
  try {
    (void)induced_lie_algebra(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMultiplicative);
  }
}

TEST(Algebra, KillingGramOfSl2MatchesTraceOracle) {
  const LieAlgebra g = sl2_algebra();
  const KillingForm k = killing_form(g);
  EXPECT_EQ(k.gram, oracle::killing_trace(g.c));
  EXPECT_EQ(k.gram, (Matrix{{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
  EXPECT_TRUE(killing_invariance(g, k).passed());
  EXPECT_TRUE(killing_alpha_invariance(k, sl2_diagonal_twist(Scalar::lambda())).passed());
  EXPECT_TRUE(is_semisimple(g));
}

TEST(Algebra, KillingOnRandomBasesAgreesWithOracle) {
  Rng rng(33);
  for (int trial = 0; trial < 6; ++trial) {
    const LieAlgebra g = oracle::random_lie4(rng);
    const KillingForm k = killing_form(g);
    EXPECT_EQ(k.gram, oracle::killing_trace(g.c));
    EXPECT_TRUE(killing_invariance(g, k).passed());
  }
}

TEST(Algebra, NonAutomorphismBreaksAlphaInvariance) {
  const KillingForm k = killing_form(sl2_algebra());
  const Matrix scale = 2 * Matrix::identity(3);
  EXPECT_FALSE(killing_alpha_invariance(k, scale).passed());
}

TEST(Algebra, HeisenbergIsNotSemisimple) {
  EXPECT_FALSE(is_semisimple(heisenberg()));
  try {
    (void)decompose_simple_ideals(heisenberg(), 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSemisimple);
  }
}

TEST(Algebra, IdealClosureOfCentreIsCentre) {
  const LieAlgebra h = heisenberg();
  const std::vector<Vector> seed{{0, 0, 1}};
  const IdealWitness w = ideal_closure(h, Subspace::span(3, seed));
  EXPECT_EQ(w.subspace.dim(), 1u);
  const std::vector<Vector> p{{1, 0, 0}};
  EXPECT_EQ(ideal_closure(h, Subspace::span(3, p)).subspace.dim(), 2u);
}

TEST(Algebra, DecomposeSl2PlusSl2InMixedBasis) {
  Rng rng(34);
  const LieAlgebra sum = direct_sum(sl2_algebra(), sl2_algebra());
  Matrix change;
  do change = rng.integer_matrix(6, 6, 1);
  while (determinant(change).is_zero());
  const LieAlgebra mixed = change_basis(sum, change);
  const SimpleDecomposition d = decompose_simple_ideals(mixed, 6, 5);
  ASSERT_EQ(d.ideals.size(), 2u);
  for (const auto& s : d.ideals) EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(d.report.all_pass());
  EXPECT_EQ(d.report.find("minimality")->status, CheckStatus::ProbePass);
}

TEST(Algebra, CyclicSumAlphaPowerRestrictsToSigma) {
  const Matrix sigma = sl2_diagonal_twist(Scalar::lambda());
  for (std::size_t n = 1; n <= 3; ++n) {
    const CyclicSum cs = cyclic_sum_construction(sl2_algebra(), sigma, n);
    const Matrix an = pow(cs.alpha, static_cast<unsigned>(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(an(3 * k + i, 3 * k + j), sigma(i, j));
    const HomLieAlgebra h = yau_twist(cs.algebra, cs.alpha);
    EXPECT_TRUE(verify_hom_lie(h, true).all_pass());
    EXPECT_TRUE(simplicity_probe(h, 10, n).all_pass());
  }
}

TEST(Algebra, CyclicSumRejectsNonAutomorphism) {
  try {
    (void)cyclic_sum_construction(sl2_algebra(), 2 * Matrix::identity(3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnAutomorphism);
  }
}

TEST(Algebra, MorphismCheckFindsBracketViolation) {
  const LieAlgebra g = sl2_algebra();
  EXPECT_TRUE(verify_lie_morphism(g, g, sl2_diagonal_twist(3)).all_pass());
  EXPECT_FALSE(verify_lie_morphism(g, g, 2 * Matrix::identity(3)).all_pass());
}

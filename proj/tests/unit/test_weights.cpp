#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "homlie/errors.hpp"
#include "homlie/sl2.hpp"
#include "homlie/weights.hpp"

using namespace homlie;
using namespace fixtures;

namespace {

const Vector kH{0, 0, 1};

}  // namespace

TEST(Weights, Sl2RootsAreTwoAndMinusTwo) {
  const LieAlgebra g = sl2_algebra();
  const CartanData c = make_cartan(g, {kH});
  for (const auto& candidates : {std::optional<std::vector<Functional>>{}, std::optional(std::vector<Functional>{{2}, {-2}})}) {
    const RootDecomposition d = root_decomposition(g, c, candidates);
    ASSERT_EQ(d.roots.size(), 2u);
    std::vector<Scalar> roots{d.roots[0].functional[0], d.roots[1].functional[0]};
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
      return *a.as_rational() < *b.as_rational();
    });
    EXPECT_EQ(roots, (std::vector<Scalar>{-2, 2}));
    EXPECT_EQ(d.zero_part.dim(), 1u);
    EXPECT_TRUE(d.report.all_pass());
  }
}

TEST(Weights, MissingRootCandidateIsIncomplete) {
  const LieAlgebra g = sl2_algebra();
  try {
    (void)root_decomposition(g, make_cartan(g, {kH}), std::vector<Functional>{{2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Incomplete);
  }
}

TEST(Weights, NonCommutingCartanIsRejected) {
  try {
    (void)make_cartan(sl2_algebra(), {kH, Vector{1, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
  }
}

TEST(Weights, StandardRepWeightsAreNMinusTwoI) {
  for (long n = 0; n <= 6; ++n) {
    const LieRep r = sl2_standard_rep(n);
    const WeightDecomposition w = weight_decomposition(r, make_cartan(r.algebra, {kH}));
    ASSERT_EQ(w.weights.size(), static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
      const Scalar want = n - 2 * i;
      auto it = std::find_if(w.weights.begin(), w.weights.end(),
                             [&](const WeightSpace& s) { return s.functional[0] == want; });
      ASSERT_NE(it, w.weights.end()) << "weight " << to_string(want);
      EXPECT_EQ(it->space.dim(), 1u);
      EXPECT_TRUE(it->space.contains(unit_vector(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(i))));
    }
  }
}

TEST(Weights, TheoremModuleIsStrongInAnyWeightOrder) {
  const HomRep m = sl2_theorem_module(3, Scalar::lambda(), 2);
  const LieRep induced = lie_rep_from_hom(m);
  const CartanData c = make_cartan(induced.algebra, {kH});
  WeightDecomposition w = weight_decomposition(induced, c);
  EXPECT_EQ(classify_weight_module(m, w), WeightModuleKind::Strong);
  std::reverse(w.weights.begin(), w.weights.end());
  EXPECT_EQ(classify_weight_module(m, w), WeightModuleKind::Strong);
}

TEST(Weights, MixingBetaIsWeak) {
  for (long n = 1; n <= 3; ++n) {
    const HomRep m = mixing_beta_module(n);
    EXPECT_TRUE(verify_hom_rep(m).all_pass());
    const LieRep induced = lie_rep_from_hom(m);
    EXPECT_EQ(induced.rho, sl2_standard_rep(n).rho);
    WeightDecomposition w = weight_decomposition(induced, make_cartan(induced.algebra, {kH}));
    EXPECT_EQ(w.weights.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(classify_weight_module(m, w), WeightModuleKind::Weak);
    std::reverse(w.weights.begin(), w.weights.end());
    EXPECT_EQ(classify_weight_module(m, w), WeightModuleKind::Weak);
  }
}

TEST(Weights, HighestWeightVector) {
  const HomRep m = sl2_theorem_module(3, Scalar::lambda(), 2);
  const CartanData c = make_cartan(m.algebra, {kH});
  const std::vector<Vector> e{{1, 0, 0}};
  const Subspace positive = Subspace::span(3, e);
  EXPECT_TRUE(highest_weight_vector_check(m, c, positive, m.beta * unit_vector(4, 0)));
  EXPECT_FALSE(highest_weight_vector_check(m, c, positive, unit_vector(4, 1)));
  EXPECT_FALSE(highest_weight_vector_check(m, c, positive, Vector{1, 1, 0, 0}));
  const std::vector<Vector> ef{{1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(highest_weight_vector_check(m, c, Subspace::span(3, ef), unit_vector(4, 0)), Error);
}

TEST(Weights, RootsTransportAlongTheCyclicSum) {
  const Scalar L = Scalar::lambda();
  const CyclicSum cs = cyclic_sum_construction(sl2_algebra(), sl2_diagonal_twist(L), 2);
  const CartanData c0 = make_cartan(cs.algebra, {Vector{0, 0, 1, 0, 0, 0}});
  const RootDecomposition d = root_decomposition(cs.algebra, c0);
  EXPECT_EQ(d.roots.size(), 2u);
  EXPECT_EQ(d.zero_part.dim(), 4u);
  for (const auto& root : d.roots) {
    EXPECT_TRUE(transported_root_check(cs.algebra, cs.alpha, 1, c0, root).passed());
    const CartanData c1 = make_cartan(cs.algebra, {cs.alpha * c0.h_basis[0]});
    const Subspace moved = root.space.image(cs.alpha);
    const RootDecomposition d1 = root_decomposition(cs.algebra, c1);
    bool found = false;
    for (const auto& r1 : d1.roots) found = found || (r1.functional == root.functional && r1.space == moved);
    EXPECT_TRUE(found);
  }
  EXPECT_TRUE(alpha_power_preserves_cartan(cs.alpha, 2, c0));
  EXPECT_FALSE(alpha_power_preserves_cartan(cs.alpha, 1, c0));
}

TEST(Weights, WeightsTransportThroughStageMaps) {
  const Scalar L = Scalar::lambda();
  const CyclicSum cs = cyclic_sum_construction(sl2_algebra(), sl2_diagonal_twist(L), 2);
  const LieRep r = sl2_standard_rep(2);
  const Matrix b = sl2_beta(2, L, 1);
  // Copy 1 of the cyclic sum acts on tensor factor 1 through b rho(x) b^{-1}.
  LieRep staged{cs.algebra, {}};
  for (std::size_t i = 0; i < 3; ++i) staged.rho.push_back(kronecker(r.rho[i], Matrix::identity(3)));
  for (std::size_t i = 0; i < 3; ++i)
    staged.rho.push_back(kronecker(Matrix::identity(3), b * r.rho[i] * inverse(b)));
  const CartanData c0 = make_cartan(cs.algebra, {Vector{0, 0, 1, 0, 0, 0}});
  const Matrix stage = kronecker(Matrix::identity(3), b);
  const WeightDecomposition w = weight_decomposition(r, make_cartan(r.algebra, {kH}));
  for (const auto& ws : w.weights) {
    std::vector<Vector> basis;
    for (std::size_t u = 0; u < 3; ++u)
      for (const auto& v : ws.space.basis()) {
        Vector x(9);
        for (std::size_t k = 0; k < 3; ++k) x[u * 3 + k] = v[k];
        basis.push_back(x);
      }
    const WeightSpace lifted{ws.functional, Subspace::span(9, basis)};
    EXPECT_TRUE(transported_weight_check(staged, cs.alpha, 1, c0, lifted, stage).passed());
  }
}

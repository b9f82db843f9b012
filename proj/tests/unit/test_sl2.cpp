#include <gtest/gtest.h>

#include <functional>

#include "../support/fixtures.hpp"
#include "homlie/errors.hpp"
#include "homlie/random.hpp"
#include "homlie/sl2.hpp"

using namespace homlie;
using namespace fixtures;

namespace {

Sl2FamilyParams params(FamilyKind kind, long n, long tau, long mu, Scalar b0, Scalar lambda) {
  Sl2FamilyParams p;
  p.kind = kind;
  p.n = n;
  p.tau = tau;
  p.mu = mu;
  p.b0 = std::move(b0);
  p.lambda = std::move(lambda);
  return p;
}

ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

}  // namespace

TEST(Sl2, FiniteFamilyTableEntries) {
  const WindowedModule m = build_family(params(FamilyKind::FiniteDim, 4, 0, 0, 2, 3), 0, 4);
  EXPECT_EQ(m.h.coeff[1], Scalar::fraction(-4, 3));
  EXPECT_EQ(m.f.coeff[2], Scalar(4));
  EXPECT_EQ(m.e.coeff[0], Scalar::fraction(2, 3));
  EXPECT_TRUE(m.e.coeff[4].is_zero());
  EXPECT_TRUE(m.f.coeff[0].is_zero());
  EXPECT_EQ(m.beta[2], Scalar::fraction(2, 9));
  EXPECT_EQ(m.twist, Scalar::fraction(1, 3));
}

TEST(Sl2, IntermediateTableUsesBothBranches) {
  const Scalar L = Scalar::lambda();
  const WindowedModule m = build_family(params(FamilyKind::IntermediateSeries, 0, 1, 5, 1, L), -2, 2);
  // i = -1: e coefficient (mu - (tau+2i+1)^2 + 1)/4 * L^0
  EXPECT_EQ(m.e.coeff[1], Scalar::fraction(6, 4));
  // i = 2: f coefficient (mu - (tau+2i-1)^2 + 1)/4 * L^{-1}
  EXPECT_EQ(m.f.coeff[4], Scalar::fraction(-10, 4) / L);
  EXPECT_EQ(m.e.coeff[3], pow(L, -2));
}

TEST(Sl2, AllFamiliesVerifyOnRandomParameters) {
  Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const Scalar lambda = rng.nonzero_rational(7, 4), b0 = rng.nonzero_rational(5, 3);
    const long n = rng.integer(1, 6);
    const long tau_pos = rng.integer(0, 5), tau_neg = rng.integer(-5, -1);
    long tau = rng.integer(-4, 4), mu = rng.integer(-3, 12);
    while ((mu + 1) == tau * tau) ++mu;
    const std::vector<Sl2FamilyParams> ps{params(FamilyKind::FiniteDim, n, 0, 0, b0, lambda),
                                          params(FamilyKind::LowestWeight, 0, tau_pos, 0, b0, lambda),
                                          params(FamilyKind::HighestWeight, 0, tau_neg, 0, b0, lambda),
                                          params(FamilyKind::IntermediateSeries, 0, tau, mu, b0, lambda)};
    for (const auto& p : ps) {
      const auto [lo, hi] = default_window(p);
      const VerificationReport r = verify_family_window(build_family(p, lo, hi));
      EXPECT_TRUE(r.all_pass()) << to_string(p.kind);
    }
  }
}

TEST(Sl2, SymbolicLambdaFamiliesVerify) {
  const Scalar L = Scalar::lambda();
  EXPECT_TRUE(verify_family_window(build_family(params(FamilyKind::FiniteDim, 3, 0, 0, 1, L), 0, 3)).all_pass());
  EXPECT_TRUE(
      verify_family_window(build_family(params(FamilyKind::IntermediateSeries, 0, 2, 1, 3, L), -5, 5)).all_pass());
}

TEST(Sl2, TamperedTableFailsAtTheTamperedIndex) {
  WindowedModule m = build_family(params(FamilyKind::LowestWeight, 0, 2, 0, 1, 2), 0, 10);
  m.f.coeff[5] = m.f.coeff[5] + 1;
  const VerificationReport r = verify_family_window(m);
  const Check* c = r.first_failure();
  ASSERT_NE(c, nullptr);
  bool names_index = false;
  for (const auto& w : c->witness) names_index = names_index || w == "i=4" || w == "i=5";
  EXPECT_TRUE(names_index);
}

TEST(Sl2, InvalidParametersAreRejected) {
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::LowestWeight, 0, -1, 0, 1, 2), 0, 16); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::HighestWeight, 0, 0, 0, 1, 2), 0, 16); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::IntermediateSeries, 0, 2, 3, 1, 2), -8, 8); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::IntermediateSeries, 0, -2, 3, 1, 2), -8, 8); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::FiniteDim, 3, 0, 0, 1, 2), 0, 4); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::LowestWeight, 0, 1, 0, 1, 2), 0, 1); }),
            ErrorKind::InvalidParams);
  EXPECT_EQ(error_kind([] { build_family(params(FamilyKind::FiniteDim, 3, 0, 0, 0, 2), 0, 3); }),
            ErrorKind::InvalidParams);
}

TEST(Sl2, FiniteFamilyIsIrreducibleAndIsomorphicToStandardRep) {
  const WindowedModule m = build_family(params(FamilyKind::FiniteDim, 4, 0, 0, 2, 3), 0, 4);
  const HomRep h = window_hom_rep(m);
  EXPECT_EQ(irreducibility_probe(h, 10, 3).status, CheckStatus::ProbePass);
  const LieRep induced = lie_rep_from_hom(h);
  const LieRep std_rep = sl2_standard_rep(4);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < 3; ++i) pairs.emplace_back(induced.rho[i], std_rep.rho[i]);
  const Matrix s = pick_invertible(solve_commutant(pairs), 5);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s * induced.rho[i], std_rep.rho[i] * s);
}

TEST(Sl2, TheoremModuleInducesTheStandardRep) {
  for (long n = 1; n <= 5; ++n)
    EXPECT_EQ(lie_rep_from_hom(sl2_theorem_module(n, Scalar::lambda(), 3)).rho, sl2_standard_rep(n).rho);
}

TEST(Sl2, GeneralRecurrenceHasZeroResiduals) {
  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar eta0 = rng.nonzero_rational(5, 3), nu0 = rng.rational(5, 3), mu1 = rng.rational(5, 3),
                 gamma0 = rng.nonzero_rational(5, 3);
    const GeneralAnsatz a = solve_general_parameters(eta0, nu0, mu1, gamma0, Scalar::lambda(), 0, 6);
    EXPECT_TRUE(a.report.all_pass());
    EXPECT_TRUE(a.free_mu.empty());
  }
}

TEST(Sl2, ZeroGammaLeavesMuFree) {
  const GeneralAnsatz a = solve_general_parameters(1, 2, 0, 0, Scalar::lambda(), 0, 3);
  EXPECT_FALSE(a.free_mu.empty());
  EXPECT_FALSE(a.report.find("product-split")->passed());
}

TEST(Sl2, RecurrenceReproducesTheoremProductsAtTheForcedBoundaryValue) {
  const Scalar L = Scalar::lambda();
  for (long n = 1; n <= 5; ++n) {
    const Scalar b0 = Scalar::fraction(3, 2);
    const Scalar gamma0 = n;
    const Scalar mu1 = b0 * b0 / L;  // mu1 gamma0 = n L^{-1} b0^2, forced by e v_0 = 0
    const GeneralAnsatz a = solve_general_parameters(b0, Scalar(n) * b0, mu1, gamma0, L, 0, n);
    for (long i = 0; i < n; ++i) EXPECT_EQ(a.at(a.product, i), theorem_product(n, i, L, b0)) << "i=" << i;
  }
}

TEST(Sl2, LiteralUnitInputsMatchOnlyWhenB0SquaredIsLambda) {
  const long n = 3;
  auto matches = [&](const Scalar& lambda, const Scalar& b0) {
    const GeneralAnsatz a = solve_general_parameters(b0, Scalar(n) * b0, 1, n, lambda, 0, n);
    for (long i = 0; i < n; ++i)
      if (!(a.at(a.product, i) == theorem_product(n, i, lambda, b0))) return false;
    return true;
  };
  EXPECT_FALSE(matches(Scalar::lambda(), 1));
  EXPECT_FALSE(matches(Scalar::lambda(), 2));
  EXPECT_TRUE(matches(4, 2));
  EXPECT_TRUE(matches(Scalar::fraction(9, 4), Scalar::fraction(3, 2)));
}

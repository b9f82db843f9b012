#pragma once

// sl(2) in the basis (e, f, h), its diagonal twists, the classified families of
// Hom-sl(2) modules on index windows, and the general parameter recurrence.

#include <string>
#include <vector>

#include "homlie/rep.hpp"

namespace homlie {

LieAlgebra sl2_algebra();

/// (n+1)-dimensional irreducible rep: e lowers, f raises, h v_i = (n-2i) v_i.
LieRep sl2_standard_rep(long n);

/// diag(lambda, 1/lambda, 1) in the basis (e, f, h). Throws InvalidParams for 0.
Matrix sl2_diagonal_twist(const Scalar& lambda);
HomLieAlgebra diagonal_twist_hom_sl2(const Scalar& lambda);

/// beta v_i = lambda^{-i} b0 v_i on 0..n.
Matrix sl2_beta(long n, const Scalar& lambda, const Scalar& b0);

/// hom_rep_from_lie(standard rep, diagonal twist, beta). Its actions are
/// e v_i = (n-i+1) L^{-i+1} b0 v_{i-1}, f v_i = (i+1) L^{-i-1} b0 v_{i+1},
/// h v_i = (n-2i) L^{-i} b0 v_i.
HomRep sl2_theorem_module(long n, const Scalar& lambda, const Scalar& b0);

enum class FamilyKind { FiniteDim, LowestWeight, HighestWeight, IntermediateSeries };

std::string to_string(FamilyKind kind);
/// Accepts `finite`, `lowest`, `highest`, `intermediate`.
FamilyKind parse_family_kind(const std::string& text);

struct Sl2FamilyParams {
  FamilyKind kind = FamilyKind::FiniteDim;
  long n = 0;
  long tau = 0;
  long mu = 0;
  Scalar b0{1};
  Scalar lambda{1};
};

/// One generator's action on the window: v_i -> coeff[i - lo] v_{i + shift}.
struct ActionTable {
  int shift = 0;
  std::vector<Scalar> coeff;
};

struct WindowedModule {
  Sl2FamilyParams params;
  long lo = 0;
  long hi = 0;
  ActionTable e, f, h;
  std::vector<Scalar> beta;
  /// Parameter of the diagonal twist the tables are a module over.
  Scalar twist;
  std::string convention;
  /// Whether lo / hi is an end of the family's index set rather than a cut.
  bool lo_is_boundary = false;
  bool hi_is_boundary = false;

  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
};

/// Default window: [0, n] for finite, [0, 16] for lowest/highest, [-8, 8] otherwise.
std::pair<long, long> default_window(const Sl2FamilyParams& params);

/// Action tables from the closed formulas. Throws InvalidParams naming the
/// violated condition.
WindowedModule build_family(const Sl2FamilyParams& params, long lo, long hi);

/// Truncated action matrices (rows and columns indexed by the window).
HomRep window_hom_rep(const WindowedModule& m);

/// Both defining relations at every index whose neighbours i-2..i+2 are
/// present in the module (all indices for finite families), plus the
/// annihilation conditions at true boundaries.
VerificationReport verify_family_window(const WindowedModule& m);

struct GeneralAnsatz {
  Scalar lambda, eta0, nu0, mu1, gamma0;
  long lo = 0;
  long hi = 0;
  /// Indexed from lo - 1 to hi + 1 (offset lo - 1).
  std::vector<Scalar> eta, nu, gamma, mu;
  /// gamma_i mu_{i+1}, same indexing.
  std::vector<Scalar> product;
  /// Indices i where gamma_i = 0 leaves mu_{i+1} free.
  std::vector<long> free_mu;
  VerificationReport report;

  const Scalar& at(const std::vector<Scalar>& seq, long i) const {
    return seq.at(static_cast<std::size_t>(i - lo + 1));
  }
};

/// eta_i = L^{-i} eta0, nu_i = L^{-i}(nu0 - 2i eta0) and
/// gamma_i mu_{i+1} = L^{-2i}(mu1 gamma0 + L^{-1} i eta0 (nu0 - (i+1) eta0)),
/// with gamma_i = gamma0 as the free factor. The report holds the residuals of
/// the five original equations at every window index.
GeneralAnsatz solve_general_parameters(const Scalar& eta0, const Scalar& nu0, const Scalar& mu1,
                                       const Scalar& gamma0, const Scalar& lambda, long lo, long hi);

}  // namespace homlie

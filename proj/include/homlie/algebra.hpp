#pragma once

// Lie and Hom-Lie algebras given by structure constants on a named basis.

#include <cstdint>
#include <string>
#include <vector>

#include "homlie/linalg.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// Dense bracket table: at(i, j) holds the coordinates of [x_i, x_j].
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Vector& at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector& at(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }

  /// Sets [x_i, x_j] = v and [x_j, x_i] = -v.
  void set_skew(std::size_t i, std::size_t j, const Vector& v);

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// Every entry pushed through a linear map: c'[i][j] = m * c[i][j].
  StructureConstants mapped(const Matrix& m) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
};

struct LieAlgebra {
  std::vector<std::string> names;
  StructureConstants c;

  std::size_t dim() const noexcept { return c.dim(); }
  Vector bracket(const Vector& x, const Vector& y) const { return c.bracket(x, y); }
  Matrix ad(const Vector& x) const { return c.ad(x); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;
};

struct HomLieAlgebra {
  std::vector<std::string> names;
  StructureConstants c_alpha;
  Matrix alpha;

  std::size_t dim() const noexcept { return c_alpha.dim(); }
  Vector bracket(const Vector& x, const Vector& y) const { return c_alpha.bracket(x, y); }

  friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) = default;
};

/// The Hom-Lie algebra (L, [.,.], id).
HomLieAlgebra as_hom_lie(const LieAlgebra& lie);

/// Default basis names x0, x1, ...
std::vector<std::string> default_names(std::size_t dim, const std::string& prefix = "x");

/// Direct sum with component-wise bracket, basis of `a` first.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants in the basis given by the columns of `change`.
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& change);

VerificationReport verify_lie(const LieAlgebra& lie);
VerificationReport verify_hom_lie(const HomLieAlgebra& hom, bool check_multiplicative);

/// Bracket compatibility phi([x,y]_1) = [phi x, phi y]_2 on basis pairs and,
/// unless `weak`, phi alpha_1 = alpha_2 phi.
VerificationReport verify_lie_morphism(const HomLieAlgebra& source, const HomLieAlgebra& target,
                                       const Matrix& phi, bool weak);
VerificationReport verify_lie_morphism(const LieAlgebra& source, const LieAlgebra& target,
                                       const Matrix& phi);

/// [x,y]_alpha = alpha([x,y]). Throws NotAMorphism when alpha is not a Lie
/// algebra endomorphism of `lie`.
HomLieAlgebra yau_twist(const LieAlgebra& lie, const Matrix& alpha);

/// [x,y] = alpha^{-1}([x,y]_alpha). Throws NotMultiplicative or Singular.
LieAlgebra induced_lie_algebra(const HomLieAlgebra& hom);

struct KillingForm {
  Matrix gram;
};

KillingForm killing_form(const LieAlgebra& lie);
/// K([x_i,x_j], x_k) = K(x_i, [x_j,x_k]) over all basis triples.
Check killing_invariance(const LieAlgebra& lie, const KillingForm& k);
/// alpha^T G alpha = G, i.e. K(alpha x, alpha y) = K(x, y).
Check killing_alpha_invariance(const KillingForm& k, const Matrix& alpha);
bool is_semisimple(const LieAlgebra& lie);

struct IdealWitness {
  Subspace subspace;
  bool closed_under_bracket = false;
  bool closed_under_alpha = false;
};

/// Smallest subspace containing `seed` that is closed under [., g]_alpha and alpha.
IdealWitness ideal_closure(const HomLieAlgebra& hom, const Subspace& seed);
IdealWitness ideal_closure(const LieAlgebra& lie, const Subspace& seed);
/// Recomputes both flags for an arbitrary subspace.
IdealWitness check_ideal(const HomLieAlgebra& hom, const Subspace& subspace);

bool preserves_subspace(const Matrix& map, const Subspace& subspace);

struct SimpleDecomposition {
  std::vector<Subspace> ideals;
  VerificationReport report;
};

/// Splits a semisimple Lie algebra into simple ideals. The ideal, orthogonality
/// and direct-sum properties are checked exactly; minimality is probe-based.
/// Throws NotSemisimple.
SimpleDecomposition decompose_simple_ideals(const LieAlgebra& lie, std::size_t trials, std::uint64_t seed);

struct CyclicSum {
  LieAlgebra algebra;
  Matrix alpha;
};

/// n copies of g1 (copy-major) with alpha shifting copy k to copy k+1 and
/// closing the cycle through sigma. Throws NotAnAutomorphism.
CyclicSum cyclic_sum_construction(const LieAlgebra& g1, const Matrix& sigma, std::size_t n);

/// Derived algebra [g,g]_alpha = g exactly, and ideal closures of random
/// nonzero vectors; the latter is reported as probe-pass.
VerificationReport simplicity_probe(const HomLieAlgebra& hom, std::size_t probes, std::uint64_t seed);

}  // namespace homlie

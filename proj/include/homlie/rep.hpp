#pragma once

// Representations of Lie and Hom-Lie algebras. Actions are stored per basis
// element of the algebra; rho of a general element is the linear combination.

#include <cstdint>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

struct LieRep {
  LieAlgebra algebra;
  std::vector<Matrix> rho;

  std::size_t dim() const noexcept { return rho.empty() ? 0 : rho.front().rows(); }
  Matrix action(const Vector& x) const;

  friend bool operator==(const LieRep& a, const LieRep& b) = default;
};

struct HomRep {
  HomLieAlgebra algebra;
  std::vector<Matrix> rho_beta;
  Matrix beta;

  std::size_t dim() const noexcept { return beta.rows(); }
  Matrix action(const Vector& x) const;

  friend bool operator==(const HomRep& a, const HomRep& b) = default;
};

struct SubmoduleWitness {
  Subspace subspace;
  bool stable_under_rho = false;
  bool stable_under_beta = false;
};

VerificationReport verify_lie_rep(const LieRep& rep);

/// The two defining relations on all basis pairs, then (when beta is
/// invertible) the conjugation powers rho(alpha^n x) = beta^n rho(x) beta^-n
/// for n = 1..3 and, on multiplicative algebras, the bracket powers for n = 0..3.
VerificationReport verify_hom_rep(const HomRep& rep);

/// S beta = delta S with S invertible.
Check check_conjugacy(const Matrix& s, const Matrix& beta, const Matrix& delta);

/// rho = beta^{-1} rho_beta over the induced Lie algebra. Throws Singular or AxiomFailure.
LieRep lie_rep_from_hom(const HomRep& rep);

/// rho_beta = beta rho over the Yau twist by alpha. Throws CompatibilityFailure
/// when beta rho(x) = rho(alpha x) beta fails for some basis x.
HomRep hom_rep_from_lie(const LieRep& rep, const Matrix& alpha, const Matrix& beta);

/// All beta with beta rho(x) = rho(alpha x) beta, as vectorized matrices.
Subspace solve_intertwiner(const LieRep& rep, const Matrix& alpha);

/// First basis element with nonzero determinant, else a fixed sequence of
/// generic combinations. Throws NoInvertibleSolution.
Matrix pick_invertible(const Subspace& solutions, std::size_t dim);

/// Block-diagonal sums over a common algebra.
LieRep direct_sum(const LieRep& a, const LieRep& b);
HomRep direct_sum(const HomRep& a, const HomRep& b);

/// Representation of the direct sum of the factor algebras (copy-major basis)
/// on the tensor product, each summand acting on its own factor.
LieRep tensor_lie_rep(const std::vector<LieRep>& reps);

struct TensorHomRep {
  HomRep rep;
  VerificationReport report;
};

/// Builds rho(alpha^k x) = Id (x) ... (x) beta_k^k rho_k(x) beta_k^-k (x) ... (x) Id
/// on the cyclic sum and rho_beta = beta rho with beta the Kronecker product of
/// the beta_k. Each beta_k must be invertible and satisfy
/// beta_k rho_k(x) = rho_k(sigma x) beta_k, where sigma is alpha^n on copy 0.
/// The returned report is verify_hom_rep of the result plus the Kronecker check.
TensorHomRep tensor_hom_rep(const std::vector<LieRep>& reps, const std::vector<Matrix>& betas,
                            const CyclicSum& construction);

/// Smallest subspace containing seed and stable under every map.
Subspace stable_closure(std::span<const Matrix> maps, const Subspace& seed);

SubmoduleWitness submodule_closure(const HomRep& rep, const Subspace& seed);
SubmoduleWitness check_submodule(const HomRep& rep, const Subspace& subspace);
/// (Ker beta, Im beta), each with recomputed stability flags.
std::pair<SubmoduleWitness, SubmoduleWitness> kernel_image_submodules(const HomRep& rep);

/// Closures of every basis vector and of `probes` random vectors are full.
/// Reported as probe-pass on success.
Check irreducibility_probe(std::span<const Matrix> maps, std::size_t dim, std::size_t probes, std::uint64_t seed);
Check irreducibility_probe(const LieRep& rep, std::size_t probes, std::uint64_t seed);
Check irreducibility_probe(const HomRep& rep, std::size_t probes, std::uint64_t seed);

}  // namespace homlie

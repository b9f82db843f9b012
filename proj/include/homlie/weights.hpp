#pragma once

// Root and weight space decompositions relative to a user-supplied commuting
// subalgebra, and the weak/strong classification of Hom-modules.

#include <optional>
#include <vector>

#include "homlie/rep.hpp"

namespace homlie {

/// Values of a linear functional on the Cartan basis, in order.
using Functional = std::vector<Scalar>;

struct CartanData {
  std::vector<Vector> h_basis;
};

/// Throws NotCommuting when two basis vectors have a nonzero bracket.
CartanData make_cartan(const LieAlgebra& lie, std::vector<Vector> h_basis);
CartanData make_cartan(const HomLieAlgebra& hom, std::vector<Vector> h_basis);

struct WeightSpace {
  Functional functional;
  Subspace space;
};

struct RootDecomposition {
  CartanData cartan;
  std::vector<WeightSpace> roots;
  Subspace zero_part;
  VerificationReport report;
};

struct WeightDecomposition {
  std::vector<WeightSpace> weights;
  VerificationReport report;
};

/// Simultaneous eigenspaces of commuting maps. With no candidates the
/// functionals come from the specialization heuristic. Throws Incomplete when
/// the spaces do not fill the ambient space.
std::vector<WeightSpace> simultaneous_eigenspaces(std::span<const Matrix> maps, std::size_t dim,
                                                  const std::optional<std::vector<Functional>>& candidates);

RootDecomposition root_decomposition(const LieAlgebra& lie, const CartanData& cartan,
                                     const std::optional<std::vector<Functional>>& candidates = std::nullopt);
WeightDecomposition weight_decomposition(const LieRep& rep, const CartanData& cartan,
                                         const std::optional<std::vector<Functional>>& candidates = std::nullopt);

enum class WeightModuleKind { Weak, Strong };
const char* to_string(WeightModuleKind kind);

/// Strong iff beta maps every weight space into a single weight space.
WeightModuleKind classify_weight_module(const HomRep& rep, const WeightDecomposition& weights);

/// rho(x) v = 0 for every x in positive_part and v is a common eigenvector of
/// the Cartan elements. Throws InvalidParams when positive_part is not a subalgebra.
bool highest_weight_vector_check(const LieRep& rep, const CartanData& cartan, const Subspace& positive_part,
                                 const Vector& v);
bool highest_weight_vector_check(const HomRep& rep, const CartanData& cartan, const Subspace& positive_part,
                                 const Vector& v);

/// [alpha^k h_j, alpha^k x] = eta(h_j) alpha^k x for every basis x of the root space.
Check transported_root_check(const LieAlgebra& lie, const Matrix& alpha, unsigned k, const CartanData& cartan,
                             const WeightSpace& root);

/// rho(alpha^k h_j) (T v) = lambda(h_j) (T v) for every basis v of the weight
/// space, with T the stage map carrying the space over.
Check transported_weight_check(const LieRep& rep, const Matrix& alpha, unsigned k, const CartanData& cartan,
                               const WeightSpace& weight, const Matrix& stage_map);

/// Whether alpha^n maps the span of the Cartan basis into itself.
bool alpha_power_preserves_cartan(const Matrix& alpha, unsigned n, const CartanData& cartan);

}  // namespace homlie

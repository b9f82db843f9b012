#pragma once

// Definition language for algebras, morphisms, representations and sl(2)
// families. `parse` is fail-fast and `render` emits canonical text that parses
// back to an equal document.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/errors.hpp"
#include "homlie/rep.hpp"
#include "homlie/sl2.hpp"

namespace homlie {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Syntax and resolution errors. Positions are 1-based and point at the
/// offending token.
class DslError : public Error {
 public:
  DslError(SourceSpan at, std::vector<std::string> expected, std::string found, const std::string& message);

  std::size_t line() const noexcept { return at_.line; }
  std::size_t column() const noexcept { return at_.column; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  SourceSpan at_;
  std::vector<std::string> expected_;
  std::string found_;
};

struct AlgebraDef {
  std::string name;
  std::vector<std::string> basis;
  /// Constants with skew completion already applied.
  StructureConstants constants{0};
  SourceSpan span;

  LieAlgebra lie() const { return {basis, constants}; }
  bool operator==(const AlgebraDef& o) const { return name == o.name && basis == o.basis && constants == o.constants; }
};

struct MorphismDef {
  std::string name;
  std::string on;
  /// Column j is the image of basis element j.
  Matrix matrix{0, 0};
  SourceSpan span;

  bool operator==(const MorphismDef& o) const { return name == o.name && on == o.on && matrix == o.matrix; }
};

struct RepDef {
  std::string name;
  /// Name of an algebra (a Lie representation) or of a morphism (a Hom-representation).
  std::string of;
  std::size_t dim = 0;
  /// One matrix per basis element, in basis order.
  std::vector<Matrix> actions;
  std::optional<Matrix> beta;
  SourceSpan span;

  bool operator==(const RepDef& o) const {
    return name == o.name && of == o.of && dim == o.dim && actions == o.actions && beta == o.beta;
  }
};

struct FamilyDef {
  FamilyKind kind = FamilyKind::FiniteDim;
  std::vector<std::pair<std::string, Scalar>> params;
  SourceSpan span;

  bool operator==(const FamilyDef& o) const { return kind == o.kind && params == o.params; }
};

using Item = std::variant<AlgebraDef, MorphismDef, RepDef, FamilyDef>;

struct Document {
  std::vector<Item> items;

  const AlgebraDef* find_algebra(std::string_view name) const;
  const MorphismDef* find_morphism(std::string_view name) const;
  const RepDef* find_rep(std::string_view name) const;
  std::vector<const FamilyDef*> families() const;

  bool operator==(const Document& o) const { return items == o.items; }
};

/// Throws DslError.
Document parse_document(std::string_view source);
std::string render(const Document& doc);

/// Linear combination text for a coordinate vector, e.g. `2*e - (1/L)*f`.
std::string render_linexpr(const Vector& v, const std::vector<std::string>& basis);

// Resolution into library objects. All throw DslError naming the identifier
// when a name is unknown.
const AlgebraDef& require_algebra(const Document& doc, std::string_view name);
const MorphismDef& require_morphism(const Document& doc, std::string_view name);
const RepDef& require_rep(const Document& doc, std::string_view name);

LieAlgebra lie_algebra_of(const Document& doc, std::string_view name);
/// (g, alpha o [,], alpha) for the morphism's algebra g. The morphism property
/// is not required here, so axiom checks on the result report what fails.
HomLieAlgebra hom_lie_of(const Document& doc, std::string_view morphism);
LieRep lie_rep_of(const Document& doc, std::string_view rep);
/// A rep of a morphism, or of an algebra with an explicit beta over the untwisted algebra.
HomRep hom_rep_of(const Document& doc, std::string_view rep);
/// Throws InvalidParams for unknown or non-integral parameters.
Sl2FamilyParams family_params(const FamilyDef& def);
/// Window from the optional `lo` and `hi` parameters, else the default window.
std::pair<long, long> family_window(const FamilyDef& def);

}  // namespace homlie

#pragma once

// Dense exact linear algebra over Q(L).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> diag);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Column-stacking vectorization: entry (r, c) lands at index c * rows + r.
  Vector vectorize() const;
  static Matrix unvectorize(std::span<const Scalar> v, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix pow(const Matrix& m, unsigned exponent);

/// Subspace of Q(L)^n held by its reduced row echelon basis: pivots are 1 and
/// every pivot column is zero in the other basis vectors. Two subspaces are
/// equal iff their bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under a linear map with cols() == ambient_dim().
  Subspace image(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination; pivots are chosen as the first nonzero entry in
/// column order.
RrefResult rref(Matrix a);
std::size_t rank(const Matrix& a);
/// rank and the kernel {v : A v = 0}.
std::pair<std::size_t, Subspace> rref_nullspace(const Matrix& a);
Scalar determinant(const Matrix& a);
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// All X (m x m) with Q_i X = X P_i for every pair (P_i, Q_i). The system is
/// vectorized by column stacking, with per-pair block I (x) Q_i - P_i^T (x) I.
/// Basis elements are returned as vectorized matrices (unvectorize to read).
Subspace solve_commutant(std::span<const std::pair<Matrix, Matrix>> pairs);

/// Convenience: the basis of solve_commutant as square matrices.
std::vector<Matrix> commutant_basis(std::span<const std::pair<Matrix, Matrix>> pairs);

}  // namespace homlie

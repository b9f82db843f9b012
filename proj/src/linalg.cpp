#include "homlie/linalg.hpp"

#include <algorithm>
#include <string>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::ShapeMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorKind::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::ShapeMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return homlie::is_zero(entries_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) fail(ErrorKind::ShapeMismatch, "trace of " + shape(*this));
  Scalar acc;
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorKind::ShapeMismatch, shape(*this) + " + " + shape(rhs));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorKind::ShapeMismatch, shape(*this) + " - " + shape(rhs));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::ShapeMismatch, shape(a) + " * " + shape(b));
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) fail(ErrorKind::ShapeMismatch, shape(a) + " * vector");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Vector Matrix::vectorize() const {
  Vector v(rows_ * cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v[c * rows_ + r] = (*this)(r, c);
  return v;
}

Matrix Matrix::unvectorize(std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) fail(ErrorKind::ShapeMismatch, "unvectorize length");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

Matrix pow(const Matrix& m, unsigned exponent) {
  if (!m.is_square()) fail(ErrorKind::ShapeMismatch, "power of " + shape(m));
  Matrix result = Matrix::identity(m.rows());
  for (unsigned i = 0; i < exponent; ++i) result = result * m;
  return result;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(Matrix a) {
  RrefResult out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    if (!inv.is_one())
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::pair<std::size_t, Subspace> rref_nullspace(const Matrix& a) {
  const RrefResult red = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return {red.pivots.size(), Subspace::span(n, basis)};
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeMismatch, "determinant of " + shape(a));
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeMismatch, "inverse of " + shape(a));
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RrefResult red = rref(std::move(aug));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1)
    fail(ErrorKind::Singular, "matrix of shape " + shape(a) + " is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  return inv;
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Subspace solve_commutant(std::span<const std::pair<Matrix, Matrix>> pairs) {
  if (pairs.empty()) fail(ErrorKind::ShapeMismatch, "solve_commutant needs at least one pair");
  const std::size_t m = pairs.front().first.rows();
  for (const auto& [p, q] : pairs)
    if (p.rows() != m || p.cols() != m || q.rows() != m || q.cols() != m)
      fail(ErrorKind::ShapeMismatch, "solve_commutant pairs must all be " + std::to_string(m) + "x" +
                                         std::to_string(m));
  const Matrix id = Matrix::identity(m);
  Matrix system(pairs.size() * m * m, m * m);
  std::size_t offset = 0;
  for (const auto& [p, q] : pairs) {
    const Matrix block = kronecker(id, q) - kronecker(p.transpose(), id);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) system(offset + i, j) = block(i, j);
    offset += block.rows();
  }
  return rref_nullspace(system).second;
}

std::vector<Matrix> commutant_basis(std::span<const std::pair<Matrix, Matrix>> pairs) {
  const Subspace sol = solve_commutant(pairs);
  const std::size_t m = pairs.front().first.rows();
  std::vector<Matrix> out;
  for (const auto& v : sol.basis()) out.push_back(Matrix::unvectorize(v, m, m));
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(ambient_dim, i));
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const RrefResult red = rref(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) s.basis_.push_back(red.reduced.row(i));
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) fail(ErrorKind::ShapeMismatch, "vector not in ambient space");
  // Reduce v against the echelon basis; pivot of each row is its first nonzero.
  Vector rest(v.begin(), v.end());
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    if (rest[p].is_zero()) continue;
    const Scalar factor = rest[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!b[j].is_zero()) rest[j] -= factor * b[j];
  }
  return homlie::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) fail(ErrorKind::ShapeMismatch, "vector does not lie in the subspace");
  Vector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t p = 0;
    while (basis_[i][p].is_zero()) ++p;
    coords[i] = v[p];
  }
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorKind::ShapeMismatch, "subspace ambient dimensions differ");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorKind::ShapeMismatch, "subspace ambient dimensions differ");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  const std::size_t k = basis_.size();
  const std::size_t l = other.basis_.size();
  Matrix m(ambient_, k + l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, k + j) = -other.basis_[j][r];
  const Subspace kernel = rref_nullspace(m).second;
  std::vector<Vector> vecs;
  for (const auto& coeffs : kernel.basis()) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < k; ++i)
      if (!coeffs[i].is_zero())
        for (std::size_t r = 0; r < ambient_; ++r) v[r] += coeffs[i] * basis_[i][r];
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

Subspace Subspace::image(const Matrix& map) const {
  if (map.cols() != ambient_) fail(ErrorKind::ShapeMismatch, "map does not act on this space");
  std::vector<Vector> imgs;
  for (const auto& b : basis_) imgs.push_back(map * b);
  return span(map.rows(), imgs);
}

}  // namespace homlie

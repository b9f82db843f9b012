#include "homlie/algebra.hpp"

#include <algorithm>

#include "homlie/eigen.hpp"
#include "homlie/errors.hpp"
#include "homlie/random.hpp"

namespace homlie {

namespace {

std::string name_of(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "x" + std::to_string(i);
}

Matrix scalar_residual(const Scalar& s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return m;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Scalar form(const Matrix& gram, const Vector& u, const Vector& w) { return dot(u, gram * w); }

std::string describe(const Check& c) {
  std::string out = c.name;
  if (!c.witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? "," : "") + c.witness[i];
    out += ")";
  }
  return out;
}

void require_square(const Matrix& m, std::size_t dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim)
    fail(ErrorKind::ShapeMismatch, std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
}

Check skew_check(const StructureConstants& c, const std::vector<std::string>& names) {
  CheckBuilder b("skew-symmetry");
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i; j < c.dim(); ++j)
      b.record(c.at(i, j) + c.at(j, i), {name_of(names, i), name_of(names, j)});
  return std::move(b).finish();
}

// Cyclic sum over (i,j,k) of [twist x_i, [x_j, x_k]].
Check jacobi_check(const StructureConstants& c, const Matrix& twist, const std::vector<std::string>& names,
                   std::string name) {
  CheckBuilder b(std::move(name));
  const std::size_t n = c.dim();
  std::vector<Vector> twisted(n);
  for (std::size_t i = 0; i < n; ++i) twisted[i] = twist.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = c.bracket(twisted[i], c.at(j, k));
        r = r + c.bracket(twisted[j], c.at(k, i));
        r = r + c.bracket(twisted[k], c.at(i, j));
        if (!b.record(r, {name_of(names, i), name_of(names, j), name_of(names, k)})) return std::move(b).finish();
      }
  return std::move(b).finish();
}

Check multiplicativity_check(const HomLieAlgebra& h) {
  CheckBuilder b("multiplicativity");
  const std::size_t n = h.dim();
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = h.alpha.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.record(h.alpha * h.c_alpha.at(i, j) - h.c_alpha.bracket(img[i], img[j]),
               {name_of(h.names, i), name_of(h.names, j)});
  return std::move(b).finish();
}

Check bracket_compat_check(const StructureConstants& src, const StructureConstants& dst, const Matrix& phi,
                           const std::vector<std::string>& names) {
  CheckBuilder b("bracket-compatibility");
  std::vector<Vector> img(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) img[i] = phi.column(i);
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j)
      b.record(phi * src.at(i, j) - dst.bracket(img[i], img[j]), {name_of(names, i), name_of(names, j)});
  return std::move(b).finish();
}

Subspace closure(const StructureConstants& c, const Matrix* alpha, const Subspace& seed) {
  const std::size_t n = c.dim();
  Subspace current = seed;
  std::vector<Vector> pending = seed.basis();
  while (!pending.empty()) {
    const Vector v = std::move(pending.back());
    pending.pop_back();
    std::vector<Vector> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(c.bracket(v, unit_vector(n, j)));
    if (alpha) images.push_back(*alpha * v);
    for (auto& w : images) {
      if (is_zero(w) || current.contains(w)) continue;
      current = current.sum(Subspace::span(n, std::span<const Vector>(&w, 1)));
      pending.push_back(std::move(w));
    }
  }
  return current;
}

bool bracket_closed(const StructureConstants& c, const Subspace& s) {
  for (const auto& v : s.basis())
    for (std::size_t j = 0; j < c.dim(); ++j)
      if (!s.contains(c.bracket(v, unit_vector(c.dim(), j)))) return false;
  return true;
}

Vector random_element(Rng& rng, const Subspace& s) {
  Vector v(s.ambient_dim());
  do {
    v = zero_vector(s.ambient_dim());
    for (const auto& b : s.basis()) v = v + Scalar(rng.integer(-3, 3)) * b;
  } while (is_zero(v));
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Structure constants

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim, zero_vector(dim)) {}

void StructureConstants::set_skew(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != dim_) fail(ErrorKind::ShapeMismatch, "bracket value has wrong length");
  at(i, j) = v;
  at(j, i) = Scalar(-1) * v;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(ErrorKind::ShapeMismatch, "bracket arguments have wrong length");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = at(i, j);
      Scalar coeff;
      bool computed = false;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k].is_zero()) continue;
        if (!computed) {
          coeff = x[i] * y[j];
          computed = true;
        }
        out[k] += coeff * c[k];
      }
    }
  }
  return out;
}

Matrix StructureConstants::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, unit_vector(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix StructureConstants::ad_basis(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = at(i, j)[k];
  return m;
}

StructureConstants StructureConstants::mapped(const Matrix& m) const {
  require_square(m, dim_, "map");
  StructureConstants out(dim_);
  for (std::size_t i = 0; i < table_.size(); ++i) out.table_[i] = m * table_[i];
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<std::string> default_names(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

HomLieAlgebra as_hom_lie(const LieAlgebra& lie) { return {lie.names, lie.c, Matrix::identity(lie.dim())}; }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  LieAlgebra out;
  out.names = a.names;
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  out.c = StructureConstants(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) out.c.at(i, j)[k] = a.c.at(i, j)[k];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) out.c.at(a.dim() + i, a.dim() + j)[a.dim() + k] = b.c.at(i, j)[k];
  return out;
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& change) {
  require_square(change, lie.dim(), "change of basis");
  const Matrix inv = inverse(change);
  const std::size_t n = lie.dim();
  std::vector<Vector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = change.column(i);
  LieAlgebra out{lie.names, StructureConstants(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.c.at(i, j) = inv * lie.c.bracket(cols[i], cols[j]);
  return out;
}

VerificationReport verify_lie(const LieAlgebra& lie) {
  VerificationReport r;
  r.add(skew_check(lie.c, lie.names));
  r.add(jacobi_check(lie.c, Matrix::identity(lie.dim()), lie.names, "jacobi"));
  return r;
}

VerificationReport verify_hom_lie(const HomLieAlgebra& hom, bool check_multiplicative) {
  require_square(hom.alpha, hom.dim(), "alpha");
  VerificationReport r;
  r.add(skew_check(hom.c_alpha, hom.names));
  r.add(jacobi_check(hom.c_alpha, hom.alpha, hom.names, "hom-jacobi"));
  if (check_multiplicative) r.add(multiplicativity_check(hom));
  return r;
}

VerificationReport verify_lie_morphism(const HomLieAlgebra& source, const HomLieAlgebra& target, const Matrix& phi,
                                       bool weak) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    fail(ErrorKind::ShapeMismatch, "morphism shape does not match the algebras");
  VerificationReport r;
  r.add(bracket_compat_check(source.c_alpha, target.c_alpha, phi, source.names));
  if (!weak) {
    CheckBuilder b("twist-compatibility");
    b.record(phi * source.alpha - target.alpha * phi, {});
    r.add(std::move(b).finish());
  }
  return r;
}

VerificationReport verify_lie_morphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    fail(ErrorKind::ShapeMismatch, "morphism shape does not match the algebras");
  VerificationReport r;
  r.add(bracket_compat_check(source.c, target.c, phi, source.names));
  return r;
}

HomLieAlgebra yau_twist(const LieAlgebra& lie, const Matrix& alpha) {
  require_square(alpha, lie.dim(), "alpha");
  const VerificationReport r = verify_lie_morphism(lie, lie, alpha);
  if (const Check* bad = r.first_failure()) fail(ErrorKind::NotAMorphism, describe(*bad));
  return {lie.names, lie.c.mapped(alpha), alpha};
}

LieAlgebra induced_lie_algebra(const HomLieAlgebra& hom) {
  require_square(hom.alpha, hom.dim(), "alpha");
  const Check mult = multiplicativity_check(hom);
  if (!mult.passed()) fail(ErrorKind::NotMultiplicative, describe(mult));
  return {hom.names, hom.c_alpha.mapped(inverse(hom.alpha))};
}

// ---------------------------------------------------------------------------
// Killing form

KillingForm killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(lie.c.ad_basis(i));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram(i, j) = (ads[i] * ads[j]).trace();
      gram(j, i) = gram(i, j);
    }
  return {gram};
}

Check killing_invariance(const LieAlgebra& lie, const KillingForm& k) {
  CheckBuilder b("killing-invariance");
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar lhs = form(k.gram, lie.c.at(i, j), unit_vector(n, l));
        const Scalar rhs = form(k.gram, unit_vector(n, i), lie.c.at(j, l));
        b.record(scalar_residual(lhs - rhs), {name_of(lie.names, i), name_of(lie.names, j), name_of(lie.names, l)});
      }
  return std::move(b).finish();
}

Check killing_alpha_invariance(const KillingForm& k, const Matrix& alpha) {
  CheckBuilder b("killing-alpha-invariance");
  b.record(alpha.transpose() * k.gram * alpha - k.gram, {});
  return std::move(b).finish();
}

bool is_semisimple(const LieAlgebra& lie) { return is_invertible(killing_form(lie).gram); }

// ---------------------------------------------------------------------------
// Ideals

IdealWitness ideal_closure(const HomLieAlgebra& hom, const Subspace& seed) {
  if (seed.ambient_dim() != hom.dim()) fail(ErrorKind::ShapeMismatch, "seed lives in the wrong space");
  return check_ideal(hom, closure(hom.c_alpha, &hom.alpha, seed));
}

IdealWitness ideal_closure(const LieAlgebra& lie, const Subspace& seed) {
  if (seed.ambient_dim() != lie.dim()) fail(ErrorKind::ShapeMismatch, "seed lives in the wrong space");
  Subspace s = closure(lie.c, nullptr, seed);
  const bool closed = bracket_closed(lie.c, s);
  return {std::move(s), closed, true};
}

IdealWitness check_ideal(const HomLieAlgebra& hom, const Subspace& subspace) {
  return {subspace, bracket_closed(hom.c_alpha, subspace), preserves_subspace(hom.alpha, subspace)};
}

bool preserves_subspace(const Matrix& map, const Subspace& subspace) {
  for (const auto& v : subspace.basis())
    if (!subspace.contains(map * v)) return false;
  return true;
}

SimpleDecomposition decompose_simple_ideals(const LieAlgebra& lie, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = lie.dim();
  const KillingForm k = killing_form(lie);
  if (!is_invertible(k.gram)) fail(ErrorKind::NotSemisimple, "Killing form is degenerate");

  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = lie.c.ad_basis(i);
    pairs.emplace_back(ad, ad);
  }
  const std::vector<Matrix> centroid = commutant_basis(pairs);

  Rng rng(seed);
  std::vector<Subspace> pieces{Subspace::full(n)};
  std::size_t skipped = 0;
  for (std::size_t t = 0; t < trials && pieces.size() < centroid.size(); ++t) {
    Matrix element(n, n);
    for (const auto& c : centroid) element += Scalar(rng.integer(-9, 9)) * c;
    std::vector<Subspace> spaces;
    std::size_t total = 0;
    for (const auto& theta : eigenvalue_candidates(element)) {
      spaces.push_back(eigenspace(element, theta));
      total += spaces.back().dim();
    }
    if (total != n) {
      ++skipped;
      continue;
    }
    std::vector<Subspace> refined;
    for (const auto& p : pieces)
      for (const auto& e : spaces) {
        Subspace part = p.intersect(e);
        if (!part.is_zero()) refined.push_back(std::move(part));
      }
    pieces = std::move(refined);
  }
  auto leading = [](const Subspace& s) {
    const Vector& v = s.basis().front();
    return std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); }) - v.begin();
  };
  std::stable_sort(pieces.begin(), pieces.end(),
                   [&](const Subspace& a, const Subspace& b) { return leading(a) < leading(b); });

  SimpleDecomposition out;
  {
    CheckBuilder b("ideal");
    for (std::size_t p = 0; p < pieces.size(); ++p)
      if (!bracket_closed(lie.c, pieces[p])) b.fail_with({std::to_string(p)}, "piece is not closed under bracket");
    out.report.add(std::move(b).finish());
  }
  {
    CheckBuilder b("killing-orthogonality");
    for (std::size_t p = 0; p < pieces.size(); ++p)
      for (std::size_t q = p + 1; q < pieces.size(); ++q)
        for (const auto& u : pieces[p].basis())
          for (const auto& w : pieces[q].basis())
            b.record(scalar_residual(form(k.gram, u, w)), {std::to_string(p), std::to_string(q)});
    out.report.add(std::move(b).finish());
  }
  {
    CheckBuilder b("direct-sum");
    std::size_t total = 0;
    Subspace all(n);
    for (const auto& p : pieces) {
      total += p.dim();
      all = all.sum(p);
    }
    if (total != n || !all.is_full()) b.fail_with({}, "pieces do not add up to the algebra");
    out.report.add(std::move(b).finish());
  }
  {
    CheckBuilder b("centroid-count");
    if (pieces.size() != centroid.size())
      b.fail_with({std::to_string(pieces.size()), std::to_string(centroid.size())},
                  "fewer pieces than the centroid dimension");
    else
      b.set_note("one piece per centroid dimension; with exact ideals this certifies minimality");
    if (skipped) b.set_note(std::to_string(skipped) + " trial(s) had eigenvalues outside the lifting heuristic");
    out.report.add(std::move(b).finish());
  }
  {
    CheckBuilder b("minimality");
    for (std::size_t p = 0; p < pieces.size(); ++p)
      for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
        const Vector v = random_element(rng, pieces[p]);
        const Subspace c = ideal_closure(lie, Subspace::span(n, std::span<const Vector>(&v, 1))).subspace;
        if (!(c == pieces[p])) b.fail_with({std::to_string(p)}, "a closure is a proper subideal");
      }
    Check c = std::move(b).finish();
    if (c.passed()) {
      c.status = CheckStatus::ProbePass;
      c.note = "probe-based: closures of random elements of each piece";
    }
    out.report.add(std::move(c));
  }
  out.ideals = std::move(pieces);
  return out;
}

CyclicSum cyclic_sum_construction(const LieAlgebra& g1, const Matrix& sigma, std::size_t n) {
  const std::size_t d = g1.dim();
  if (n < 1) fail(ErrorKind::InvalidParams, "cyclic sum needs at least one copy");
  require_square(sigma, d, "sigma");
  if (!is_invertible(sigma)) fail(ErrorKind::NotAnAutomorphism, "sigma is singular");
  const VerificationReport morph = verify_lie_morphism(g1, g1, sigma);
  if (const Check* bad = morph.first_failure()) fail(ErrorKind::NotAnAutomorphism, describe(*bad));

  CyclicSum out;
  out.algebra.c = StructureConstants(n * d);
  for (std::size_t copy = 0; copy < n; ++copy) {
    for (const auto& name : g1.names) out.algebra.names.push_back(n == 1 ? name : name + "_" + std::to_string(copy));
    const std::size_t off = copy * d;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) out.algebra.c.at(off + i, off + j)[off + k] = g1.c.at(i, j)[k];
  }
  out.alpha = Matrix(n * d, n * d);
  for (std::size_t copy = 0; copy + 1 < n; ++copy)
    for (std::size_t i = 0; i < d; ++i) out.alpha((copy + 1) * d + i, copy * d + i) = Scalar(1);
  const std::size_t last = (n - 1) * d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) out.alpha(r, last + i) = sigma(r, i);
  return out;
}

VerificationReport simplicity_probe(const HomLieAlgebra& hom, std::size_t probes, std::uint64_t seed) {
  const std::size_t n = hom.dim();
  VerificationReport r;
  {
    CheckBuilder b("derived-algebra");
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) brackets.push_back(hom.c_alpha.at(i, j));
    if (!Subspace::span(n, brackets).is_full()) b.fail_with({}, "[g,g]_alpha is a proper subspace");
    r.add(std::move(b).finish());
  }
  {
    CheckBuilder b("ideal-closure-probe");
    Rng rng(seed);
    for (std::size_t t = 0; t < probes; ++t) {
      const Vector v = rng.nonzero_vector(n);
      if (!ideal_closure(hom, Subspace::span(n, std::span<const Vector>(&v, 1))).subspace.is_full()) {
        std::vector<std::string> w;
        for (const auto& x : v) w.push_back(to_string(x));
        b.fail_with(w, "closure of this vector is a proper ideal");
      }
    }
    Check c = std::move(b).finish();
    if (c.passed()) {
      c.status = CheckStatus::ProbePass;
      c.note = "probe-based: " + std::to_string(probes) + " random vectors";
    }
    r.add(std::move(c));
  }
  return r;
}

}  // namespace homlie

#include "homlie/rep.hpp"

#include "homlie/errors.hpp"
#include "homlie/random.hpp"

namespace homlie {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t dim) {
  if (x.size() != mats.size()) fail(ErrorKind::ShapeMismatch, "element has the wrong number of coordinates");
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * mats[i];
  return out;
}

const std::string& name(const std::vector<std::string>& names, std::size_t i) { return names.at(i); }

std::string describe(const Check& c) {
  std::string out = c.name;
  if (!c.witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? "," : "") + c.witness[i];
    out += ")";
  }
  return out;
}

void require_shapes(const HomLieAlgebra& alg, const std::vector<Matrix>& rho, const Matrix& beta) {
  if (rho.size() != alg.dim()) fail(ErrorKind::ShapeMismatch, "need one action matrix per basis element");
  const std::size_t m = beta.rows();
  if (beta.cols() != m) fail(ErrorKind::ShapeMismatch, "beta must be square");
  for (const auto& r : rho)
    if (r.rows() != m || r.cols() != m) fail(ErrorKind::ShapeMismatch, "action matrices must match beta");
}

Matrix identity_kron(std::size_t before, const Matrix& mid, std::size_t after) {
  return kronecker(kronecker(Matrix::identity(before), mid), Matrix::identity(after));
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

bool stable(const Matrix& map, const Subspace& s) {
  for (const auto& v : s.basis())
    if (!s.contains(map * v)) return false;
  return true;
}

}  // namespace

Matrix LieRep::action(const Vector& x) const { return combine(rho, x, dim()); }
Matrix HomRep::action(const Vector& x) const { return combine(rho_beta, x, dim()); }

VerificationReport verify_lie_rep(const LieRep& rep) {
  if (rep.rho.size() != rep.algebra.dim()) fail(ErrorKind::ShapeMismatch, "need one action matrix per basis element");
  CheckBuilder b("representation");
  const std::size_t n = rep.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.record(rep.action(rep.algebra.c.at(i, j)) - (rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i]),
               {name(rep.algebra.names, i), name(rep.algebra.names, j)});
  VerificationReport r;
  r.add(std::move(b).finish());
  return r;
}

VerificationReport verify_hom_rep(const HomRep& rep) {
  const HomLieAlgebra& alg = rep.algebra;
  require_shapes(alg, rep.rho_beta, rep.beta);
  const std::size_t n = alg.dim();
  const Matrix& beta = rep.beta;
  std::vector<Matrix> rho_alpha(n);
  for (std::size_t i = 0; i < n; ++i) rho_alpha[i] = rep.action(alg.alpha.column(i));

  VerificationReport r;
  {
    CheckBuilder b("hom-rep-twist");
    for (std::size_t i = 0; i < n; ++i)
      b.record(rho_alpha[i] * beta - beta * rep.rho_beta[i], {name(alg.names, i)});
    r.add(std::move(b).finish());
  }
  {
    CheckBuilder b("hom-rep-bracket");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b.record(rep.action(alg.c_alpha.at(i, j)) * beta -
                     (rho_alpha[i] * rep.rho_beta[j] - rho_alpha[j] * rep.rho_beta[i]),
                 {name(alg.names, i), name(alg.names, j)});
    r.add(std::move(b).finish());
  }
  if (!is_invertible(beta)) return r;

  const Matrix beta_inv = inverse(beta);
  std::vector<Matrix> alpha_pow{Matrix::identity(n)};
  for (int k = 1; k <= 4; ++k) alpha_pow.push_back(alg.alpha * alpha_pow.back());
  {
    CheckBuilder b("power-conjugation");
    Matrix bp = Matrix::identity(rep.dim());
    Matrix bp_inv = bp;
    for (int p = 1; p <= 3; ++p) {
      bp = beta * bp;
      bp_inv = bp_inv * beta_inv;
      for (std::size_t i = 0; i < n; ++i)
        b.record(rep.action(alpha_pow[p].column(i)) - bp * rep.rho_beta[i] * bp_inv,
                 {std::to_string(p), name(alg.names, i)});
    }
    r.add(std::move(b).finish());
  }
  if (!verify_hom_lie(alg, true).find("multiplicativity")->passed()) return r;
  {
    CheckBuilder b("power-bracket");
    for (int p = 0; p <= 3; ++p) {
      std::vector<Matrix> rp(n), rp1(n);
      for (std::size_t i = 0; i < n; ++i) {
        rp[i] = rep.action(alpha_pow[p].column(i));
        rp1[i] = rep.action(alpha_pow[p + 1].column(i));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          b.record(rep.action(alpha_pow[p] * alg.c_alpha.at(i, j)) * beta - (rp1[i] * rp[j] - rp1[j] * rp[i]),
                   {std::to_string(p), name(alg.names, i), name(alg.names, j)});
    }
    r.add(std::move(b).finish());
  }
  return r;
}

Check check_conjugacy(const Matrix& s, const Matrix& beta, const Matrix& delta) {
  CheckBuilder b("conjugacy");
  if (!is_invertible(s)) b.fail_with({}, "S is not invertible");
  b.record(s * beta - delta * s, {});
  return std::move(b).finish();
}

LieRep lie_rep_from_hom(const HomRep& rep) {
  const Matrix beta_inv = inverse(rep.beta);
  const VerificationReport hr = verify_hom_rep(rep);
  if (const Check* bad = hr.first_failure()) fail(ErrorKind::AxiomFailure, describe(*bad));
  LieRep out{induced_lie_algebra(rep.algebra), {}};
  for (const auto& m : rep.rho_beta) out.rho.push_back(beta_inv * m);
  const VerificationReport lr = verify_lie_rep(out);
  if (const Check* bad = lr.first_failure()) fail(ErrorKind::AxiomFailure, describe(*bad));
  return out;
}

HomRep hom_rep_from_lie(const LieRep& rep, const Matrix& alpha, const Matrix& beta) {
  if (rep.rho.size() != rep.algebra.dim()) fail(ErrorKind::ShapeMismatch, "need one action matrix per basis element");
  if (beta.rows() != rep.dim() || beta.cols() != rep.dim()) fail(ErrorKind::ShapeMismatch, "beta has the wrong shape");
  HomLieAlgebra twisted = yau_twist(rep.algebra, alpha);
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
    const Matrix residual = beta * rep.rho[i] - rep.action(alpha.column(i)) * beta;
    if (!residual.is_zero())
      fail(ErrorKind::CompatibilityFailure, "beta rho(x) = rho(alpha x) beta fails at " + rep.algebra.names.at(i));
  }
  HomRep out{std::move(twisted), {}, beta};
  for (const auto& m : rep.rho) out.rho_beta.push_back(beta * m);
  return out;
}

Subspace solve_intertwiner(const LieRep& rep, const Matrix& alpha) {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i) pairs.emplace_back(rep.rho[i], rep.action(alpha.column(i)));
  if (pairs.empty()) return Subspace::full(rep.dim() * rep.dim());
  return solve_commutant(pairs);
}

Matrix pick_invertible(const Subspace& solutions, std::size_t dim) {
  std::vector<Matrix> basis;
  for (const auto& v : solutions.basis()) basis.push_back(Matrix::unvectorize(v, dim, dim));
  for (const auto& m : basis)
    if (is_invertible(m)) return m;
  if (basis.size() > 1) {
    for (long t = 2; t <= 9; ++t) {
      Matrix m(dim, dim);
      Scalar c(1);
      for (const auto& b : basis) {
        m += c * b;
        c *= Scalar(t);
      }
      if (is_invertible(m)) return m;
    }
  }
  fail(ErrorKind::NoInvertibleSolution, "no invertible element found in the solution space");
}

LieRep direct_sum(const LieRep& a, const LieRep& b) {
  if (!(a.algebra == b.algebra)) fail(ErrorKind::ShapeMismatch, "direct sum needs a common algebra");
  LieRep out{a.algebra, {}};
  for (std::size_t i = 0; i < a.rho.size(); ++i) out.rho.push_back(direct_sum(a.rho[i], b.rho[i]));
  return out;
}

HomRep direct_sum(const HomRep& a, const HomRep& b) {
  if (!(a.algebra == b.algebra)) fail(ErrorKind::ShapeMismatch, "direct sum needs a common algebra");
  HomRep out{a.algebra, {}, direct_sum(a.beta, b.beta)};
  for (std::size_t i = 0; i < a.rho_beta.size(); ++i) out.rho_beta.push_back(direct_sum(a.rho_beta[i], b.rho_beta[i]));
  return out;
}

LieRep tensor_lie_rep(const std::vector<LieRep>& reps) {
  if (reps.empty()) fail(ErrorKind::InvalidParams, "tensor product of no representations");
  LieRep out{reps.front().algebra, {}};
  for (std::size_t k = 1; k < reps.size(); ++k) out.algebra = direct_sum(out.algebra, reps[k].algebra);
  std::size_t before = 1;
  std::size_t total = 1;
  for (const auto& r : reps) total *= r.dim();
  for (const auto& r : reps) {
    const std::size_t after = total / (before * r.dim());
    for (const auto& m : r.rho) out.rho.push_back(identity_kron(before, m, after));
    before *= r.dim();
  }
  return out;
}

TensorHomRep tensor_hom_rep(const std::vector<LieRep>& reps, const std::vector<Matrix>& betas,
                            const CyclicSum& construction) {
  const std::size_t n = reps.size();
  if (n == 0 || betas.size() != n) fail(ErrorKind::InvalidParams, "need one beta per factor");
  const std::size_t total_dim = construction.algebra.dim();
  if (total_dim % n != 0) fail(ErrorKind::ShapeMismatch, "construction does not have n copies");
  const std::size_t d = total_dim / n;
  const Matrix sigma = block(pow(construction.alpha, static_cast<unsigned>(n)), 0, 0, d, d);

  std::vector<Matrix> beta_inv;
  for (std::size_t k = 0; k < n; ++k) {
    const LieRep& r = reps[k];
    if (r.algebra.dim() != d) fail(ErrorKind::ShapeMismatch, "factor " + std::to_string(k) + " is over another algebra");
    if (betas[k].rows() != r.dim() || betas[k].cols() != r.dim())
      fail(ErrorKind::ShapeMismatch, "beta_" + std::to_string(k) + " has the wrong shape");
    beta_inv.push_back(inverse(betas[k]));
    for (std::size_t i = 0; i < d; ++i)
      if (!(betas[k] * r.rho[i] - r.action(sigma.column(i)) * betas[k]).is_zero())
        fail(ErrorKind::CompatibilityFailure,
             "stage condition fails for factor " + std::to_string(k) + " at " + r.algebra.names.at(i));
  }

  std::size_t total = 1;
  for (const auto& r : reps) total *= r.dim();
  std::vector<Matrix> rho(total_dim);
  std::size_t before = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = reps[k].dim();
    const std::size_t after = total / (before * m);
    const Matrix bk = pow(betas[k], static_cast<unsigned>(k));
    const Matrix bk_inv = pow(beta_inv[k], static_cast<unsigned>(k));
    for (std::size_t i = 0; i < d; ++i) rho[k * d + i] = identity_kron(before, bk * reps[k].rho[i] * bk_inv, after);
    before *= m;
  }
  Matrix beta = betas.front();
  for (std::size_t k = 1; k < n; ++k) beta = kronecker(beta, betas[k]);

  TensorHomRep out{{yau_twist(construction.algebra, construction.alpha), {}, beta}, {}};
  for (const auto& m : rho) out.rep.rho_beta.push_back(beta * m);
  out.report = verify_hom_rep(out.rep);
  CheckBuilder kb("kronecker-beta");
  Matrix expected = betas.front();
  for (std::size_t k = 1; k < n; ++k) expected = kronecker(expected, betas[k]);
  kb.record(out.rep.beta - expected, {});
  out.report.add(std::move(kb).finish());
  return out;
}

Subspace stable_closure(std::span<const Matrix> maps, const Subspace& seed) {
  const std::size_t n = seed.ambient_dim();
  Subspace current = seed;
  std::vector<Vector> pending = seed.basis();
  while (!pending.empty() && !current.is_full()) {
    const Vector v = std::move(pending.back());
    pending.pop_back();
    for (const auto& m : maps) {
      Vector w = m * v;
      if (is_zero(w) || current.contains(w)) continue;
      current = current.sum(Subspace::span(n, std::span<const Vector>(&w, 1)));
      pending.push_back(std::move(w));
    }
  }
  return current;
}

SubmoduleWitness check_submodule(const HomRep& rep, const Subspace& subspace) {
  bool rho_ok = true;
  for (const auto& m : rep.rho_beta) rho_ok = rho_ok && stable(m, subspace);
  return {subspace, rho_ok, stable(rep.beta, subspace)};
}

SubmoduleWitness submodule_closure(const HomRep& rep, const Subspace& seed) {
  if (seed.ambient_dim() != rep.dim()) fail(ErrorKind::ShapeMismatch, "seed lives in the wrong space");
  std::vector<Matrix> maps = rep.rho_beta;
  maps.push_back(rep.beta);
  return check_submodule(rep, stable_closure(maps, seed));
}

std::pair<SubmoduleWitness, SubmoduleWitness> kernel_image_submodules(const HomRep& rep) {
  return {check_submodule(rep, rref_nullspace(rep.beta).second), check_submodule(rep, column_space(rep.beta))};
}

Check irreducibility_probe(std::span<const Matrix> maps, std::size_t dim, std::size_t probes, std::uint64_t seed) {
  CheckBuilder b("irreducibility");
  auto probe = [&](const Vector& v, const std::string& label) {
    if (!stable_closure(maps, Subspace::span(dim, std::span<const Vector>(&v, 1))).is_full())
      b.fail_with({label}, "closure of this vector is a proper submodule");
  };
  for (std::size_t i = 0; i < dim; ++i) probe(unit_vector(dim, i), "v" + std::to_string(i));
  Rng rng(seed);
  for (std::size_t t = 0; t < probes; ++t) probe(rng.nonzero_vector(dim), "random#" + std::to_string(t));
  Check c = std::move(b).finish();
  if (c.passed()) {
    c.status = CheckStatus::ProbePass;
    c.note = "probe-based: basis vectors and " + std::to_string(probes) + " random vectors";
  }
  return c;
}

Check irreducibility_probe(const LieRep& rep, std::size_t probes, std::uint64_t seed) {
  return irreducibility_probe(rep.rho, rep.dim(), probes, seed);
}

Check irreducibility_probe(const HomRep& rep, std::size_t probes, std::uint64_t seed) {
  std::vector<Matrix> maps = rep.rho_beta;
  maps.push_back(rep.beta);
  return irreducibility_probe(maps, rep.dim(), probes, seed);
}

}  // namespace homlie

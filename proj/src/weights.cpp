#include "homlie/weights.hpp"

#include "homlie/eigen.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::string functional_label(const Functional& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + to_string(f[i]);
  return out + ")";
}

CartanData checked_cartan(const StructureConstants& c, std::vector<Vector> h_basis) {
  for (const auto& h : h_basis)
    if (h.size() != c.dim()) fail(ErrorKind::ShapeMismatch, "Cartan element has the wrong length");
  for (std::size_t i = 0; i < h_basis.size(); ++i)
    for (std::size_t j = i + 1; j < h_basis.size(); ++j)
      if (!is_zero(c.bracket(h_basis[i], h_basis[j])))
        fail(ErrorKind::NotCommuting, "Cartan elements " + std::to_string(i) + " and " + std::to_string(j) +
                                          " do not commute");
  return {std::move(h_basis)};
}

Subspace joint_eigenspace(std::span<const Matrix> maps, std::size_t dim, const Functional& f) {
  Subspace s = Subspace::full(dim);
  for (std::size_t j = 0; j < maps.size() && !s.is_zero(); ++j) s = s.intersect(eigenspace(maps[j], f[j]));
  return s;
}

Check eigen_check(std::span<const Matrix> maps, const std::vector<WeightSpace>& spaces) {
  CheckBuilder b("eigen-equation");
  for (const auto& w : spaces)
    for (const auto& v : w.space.basis())
      for (std::size_t j = 0; j < maps.size(); ++j)
        b.record(maps[j] * v - w.functional[j] * v, {functional_label(w.functional), std::to_string(j)});
  return std::move(b).finish();
}

Check direct_sum_check(const std::vector<WeightSpace>& spaces, std::size_t dim) {
  CheckBuilder b("direct-sum");
  std::size_t total = 0;
  Subspace all(dim);
  for (const auto& w : spaces) {
    total += w.space.dim();
    all = all.sum(w.space);
  }
  if (total != dim || !all.is_full()) b.fail_with({}, "weight spaces do not form a direct sum decomposition");
  return std::move(b).finish();
}

std::vector<Matrix> rep_maps(const std::vector<Matrix>& rho, const CartanData& cartan, std::size_t dim) {
  std::vector<Matrix> maps;
  for (const auto& h : cartan.h_basis) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!h[i].is_zero()) m += h[i] * rho[i];
    maps.push_back(std::move(m));
  }
  return maps;
}

bool highest_weight_core(const std::vector<Matrix>& rho, const StructureConstants& c, const CartanData& cartan,
                         const Subspace& positive, const Vector& v) {
  for (const auto& x : positive.basis())
    for (const auto& y : positive.basis())
      if (!positive.contains(c.bracket(x, y))) fail(ErrorKind::InvalidParams, "positive part is not a subalgebra");
  const std::size_t dim = v.size();
  if (is_zero(v)) return false;
  for (const auto& x : positive.basis()) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) m += x[i] * rho[i];
    if (!is_zero(m * v)) return false;
  }
  const Subspace line = Subspace::span(dim, std::span<const Vector>(&v, 1));
  for (const auto& m : rep_maps(rho, cartan, dim))
    if (!line.contains(m * v)) return false;
  return true;
}

}  // namespace

CartanData make_cartan(const LieAlgebra& lie, std::vector<Vector> h_basis) {
  return checked_cartan(lie.c, std::move(h_basis));
}

CartanData make_cartan(const HomLieAlgebra& hom, std::vector<Vector> h_basis) {
  return checked_cartan(hom.c_alpha, std::move(h_basis));
}

std::vector<WeightSpace> simultaneous_eigenspaces(std::span<const Matrix> maps, std::size_t dim,
                                                  const std::optional<std::vector<Functional>>& candidates) {
  std::vector<WeightSpace> out;
  if (candidates) {
    for (const auto& f : *candidates) {
      if (f.size() != maps.size()) fail(ErrorKind::ShapeMismatch, "candidate functional has the wrong length");
      bool seen = false;
      for (const auto& w : out) seen = seen || w.functional == f;
      if (seen) continue;
      Subspace s = joint_eigenspace(maps, dim, f);
      if (!s.is_zero()) out.push_back({f, std::move(s)});
    }
  } else {
    out.push_back({{}, Subspace::full(dim)});
    for (const auto& m : maps) {
      const std::vector<Scalar> values = eigenvalue_candidates(m);
      std::vector<WeightSpace> refined;
      for (const auto& w : out)
        for (const auto& theta : values) {
          Subspace s = w.space.intersect(eigenspace(m, theta));
          if (s.is_zero()) continue;
          Functional f = w.functional;
          f.push_back(theta);
          refined.push_back({std::move(f), std::move(s)});
        }
      out = std::move(refined);
    }
  }
  std::size_t total = 0;
  for (const auto& w : out) total += w.space.dim();
  if (total != dim)
    fail(ErrorKind::Incomplete, "eigenspaces cover " + std::to_string(total) + " of " + std::to_string(dim) +
                                    " dimensions; some eigenvalues are missing from the candidates");
  return out;
}

RootDecomposition root_decomposition(const LieAlgebra& lie, const CartanData& cartan,
                                     const std::optional<std::vector<Functional>>& candidates) {
  checked_cartan(lie.c, cartan.h_basis);
  const std::size_t dim = lie.dim();
  std::vector<Matrix> maps;
  for (const auto& h : cartan.h_basis) maps.push_back(lie.ad(h));
  const Functional zero(cartan.h_basis.size());

  std::optional<std::vector<Functional>> with_zero = candidates;
  if (with_zero) with_zero->insert(with_zero->begin(), zero);
  std::vector<WeightSpace> spaces = simultaneous_eigenspaces(maps, dim, with_zero);

  RootDecomposition out{cartan, {}, Subspace(dim), {}};
  out.report.add(eigen_check(maps, spaces));
  out.report.add(direct_sum_check(spaces, dim));
  for (auto& w : spaces) {
    if (w.functional == zero)
      out.zero_part = std::move(w.space);
    else
      out.roots.push_back(std::move(w));
  }
  return out;
}

WeightDecomposition weight_decomposition(const LieRep& rep, const CartanData& cartan,
                                         const std::optional<std::vector<Functional>>& candidates) {
  checked_cartan(rep.algebra.c, cartan.h_basis);
  const std::vector<Matrix> maps = rep_maps(rep.rho, cartan, rep.dim());
  WeightDecomposition out;
  out.weights = simultaneous_eigenspaces(maps, rep.dim(), candidates);
  out.report.add(eigen_check(maps, out.weights));
  out.report.add(direct_sum_check(out.weights, rep.dim()));
  return out;
}

const char* to_string(WeightModuleKind kind) { return kind == WeightModuleKind::Strong ? "strong" : "weak"; }

WeightModuleKind classify_weight_module(const HomRep& rep, const WeightDecomposition& weights) {
  for (const auto& w : weights.weights) {
    const Subspace image = w.space.image(rep.beta);
    bool inside = false;
    for (const auto& target : weights.weights) inside = inside || target.space.contains(image);
    if (!inside) return WeightModuleKind::Weak;
  }
  return WeightModuleKind::Strong;
}

bool highest_weight_vector_check(const LieRep& rep, const CartanData& cartan, const Subspace& positive_part,
                                 const Vector& v) {
  return highest_weight_core(rep.rho, rep.algebra.c, cartan, positive_part, v);
}

bool highest_weight_vector_check(const HomRep& rep, const CartanData& cartan, const Subspace& positive_part,
                                 const Vector& v) {
  return highest_weight_core(rep.rho_beta, rep.algebra.c_alpha, cartan, positive_part, v);
}

Check transported_root_check(const LieAlgebra& lie, const Matrix& alpha, unsigned k, const CartanData& cartan,
                             const WeightSpace& root) {
  const Matrix ak = pow(alpha, k);
  CheckBuilder b("root-transport");
  for (std::size_t j = 0; j < cartan.h_basis.size(); ++j) {
    const Vector h = ak * cartan.h_basis[j];
    for (const auto& x : root.space.basis()) {
      const Vector y = ak * x;
      b.record(lie.bracket(h, y) - root.functional[j] * y, {functional_label(root.functional), std::to_string(j)});
    }
  }
  return std::move(b).finish();
}

Check transported_weight_check(const LieRep& rep, const Matrix& alpha, unsigned k, const CartanData& cartan,
                               const WeightSpace& weight, const Matrix& stage_map) {
  const Matrix ak = pow(alpha, k);
  CheckBuilder b("weight-transport");
  for (std::size_t j = 0; j < cartan.h_basis.size(); ++j) {
    const Matrix m = rep.action(ak * cartan.h_basis[j]);
    for (const auto& v : weight.space.basis()) {
      const Vector w = stage_map * v;
      b.record(m * w - weight.functional[j] * w, {functional_label(weight.functional), std::to_string(j)});
    }
  }
  return std::move(b).finish();
}

bool alpha_power_preserves_cartan(const Matrix& alpha, unsigned n, const CartanData& cartan) {
  const std::size_t dim = alpha.rows();
  return preserves_subspace(pow(alpha, n), Subspace::span(dim, cartan.h_basis));
}

}  // namespace homlie

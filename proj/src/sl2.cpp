#include "homlie/sl2.hpp"

#include "homlie/errors.hpp"

namespace homlie {

namespace {

constexpr std::size_t kE = 0;
constexpr std::size_t kF = 1;
constexpr std::size_t kH = 2;

Scalar lam_pow(const Scalar& lambda, long k) { return pow(lambda, k); }

void require_nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) fail(ErrorKind::InvalidParams, std::string(what) + " must be nonzero");
}

bool is_perfect_square_root(long value, long root) { return root >= 0 && root * root == value; }

Matrix table_matrix(const ActionTable& t, std::size_t size) {
  Matrix m(size, size);
  for (std::size_t c = 0; c < size; ++c) {
    const long target = static_cast<long>(c) + t.shift;
    if (target < 0 || target >= static_cast<long>(size)) continue;
    m(static_cast<std::size_t>(target), c) = t.coeff[c];
  }
  return m;
}

}  // namespace

LieAlgebra sl2_algebra() {
  LieAlgebra a{{"e", "f", "h"}, StructureConstants(3)};
  a.c.set_skew(kH, kE, Vector{Scalar(2), Scalar(0), Scalar(0)});
  a.c.set_skew(kH, kF, Vector{Scalar(0), Scalar(-2), Scalar(0)});
  a.c.set_skew(kE, kF, Vector{Scalar(0), Scalar(0), Scalar(1)});
  return a;
}

LieRep sl2_standard_rep(long n) {
  if (n < 0) fail(ErrorKind::InvalidParams, "highest weight n must be nonnegative");
  const auto d = static_cast<std::size_t>(n + 1);
  Matrix e(d, d), f(d, d), h(d, d);
  for (long i = 0; i <= n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (i >= 1) e(u - 1, u) = Scalar(n - i + 1);
    if (i < n) f(u + 1, u) = Scalar(i + 1);
    h(u, u) = Scalar(n - 2 * i);
  }
  return {sl2_algebra(), {e, f, h}};
}

Matrix sl2_diagonal_twist(const Scalar& lambda) {
  require_nonzero(lambda, "twist parameter");
  const std::vector<Scalar> d{lambda, lambda.inverse(), Scalar(1)};
  return Matrix::diagonal(d);
}

HomLieAlgebra diagonal_twist_hom_sl2(const Scalar& lambda) { return yau_twist(sl2_algebra(), sl2_diagonal_twist(lambda)); }

Matrix sl2_beta(long n, const Scalar& lambda, const Scalar& b0) {
  require_nonzero(lambda, "lambda");
  std::vector<Scalar> d;
  for (long i = 0; i <= n; ++i) d.push_back(lam_pow(lambda, -i) * b0);
  return Matrix::diagonal(d);
}

HomRep sl2_theorem_module(long n, const Scalar& lambda, const Scalar& b0) {
  require_nonzero(b0, "b0");
  return hom_rep_from_lie(sl2_standard_rep(n), sl2_diagonal_twist(lambda), sl2_beta(n, lambda, b0));
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::FiniteDim: return "finite";
    case FamilyKind::LowestWeight: return "lowest";
    case FamilyKind::HighestWeight: return "highest";
    case FamilyKind::IntermediateSeries: return "intermediate";
  }
  return "finite";
}

FamilyKind parse_family_kind(const std::string& text) {
  for (auto k : {FamilyKind::FiniteDim, FamilyKind::LowestWeight, FamilyKind::HighestWeight,
                 FamilyKind::IntermediateSeries})
    if (to_string(k) == text) return k;
  fail(ErrorKind::InvalidParams, "unknown family kind '" + text + "'");
}

std::pair<long, long> default_window(const Sl2FamilyParams& params) {
  switch (params.kind) {
    case FamilyKind::FiniteDim: return {0, params.n};
    case FamilyKind::LowestWeight:
    case FamilyKind::HighestWeight: return {0, 16};
    case FamilyKind::IntermediateSeries: return {-8, 8};
  }
  return {0, 0};
}

WindowedModule build_family(const Sl2FamilyParams& p, long lo, long hi) {
  require_nonzero(p.lambda, "lambda");
  require_nonzero(p.b0, "b0");
  if (lo > hi) fail(ErrorKind::InvalidParams, "window is empty");
  switch (p.kind) {
    case FamilyKind::FiniteDim:
      if (p.n < 0) fail(ErrorKind::InvalidParams, "n must be nonnegative");
      if (lo < 0 || hi > p.n) fail(ErrorKind::InvalidParams, "window must lie in [0, n]");
      break;
    case FamilyKind::LowestWeight:
      if (p.tau < 0) fail(ErrorKind::InvalidParams, "lowest weight family needs tau >= 0");
      if (lo < 0) fail(ErrorKind::InvalidParams, "window must lie in [0, inf)");
      break;
    case FamilyKind::HighestWeight:
      if (p.tau >= 0) fail(ErrorKind::InvalidParams, "highest weight family needs tau < 0");
      if (lo < 0) fail(ErrorKind::InvalidParams, "window must lie in [0, inf)");
      break;
    case FamilyKind::IntermediateSeries:
      if (is_perfect_square_root(p.mu + 1, p.tau < 0 ? -p.tau : p.tau))
        fail(ErrorKind::InvalidParams, "intermediate series needs tau != sqrt(mu+1)");
      break;
  }
  if (p.kind != FamilyKind::FiniteDim && hi - lo + 1 < 3)
    fail(ErrorKind::InvalidParams, "window of an infinite family needs length >= 3");

  WindowedModule m;
  m.params = p;
  m.lo = lo;
  m.hi = hi;
  const Scalar& L = p.lambda;
  const Scalar& b0 = p.b0;
  const Scalar quarter = Scalar::fraction(1, 4);
  m.e.shift = 1;
  m.f.shift = -1;
  m.twist = L.inverse();
  m.convention = "e raises the index; module over the diagonal twist with parameter 1/lambda";
  m.lo_is_boundary = p.kind != FamilyKind::IntermediateSeries && lo == 0;
  m.hi_is_boundary = p.kind == FamilyKind::FiniteDim && hi == p.n;
  if (p.kind == FamilyKind::HighestWeight) {
    m.e.shift = -1;
    m.f.shift = 1;
    m.twist = L;
    m.convention = "f raises the index; module over the diagonal twist with parameter lambda";
  }

  for (long i = lo; i <= hi; ++i) {
    const Scalar down = lam_pow(L, -i - 1) * b0;  // lambda^{-i-1} b0
    const Scalar up = lam_pow(L, -i + 1) * b0;    // lambda^{-i+1} b0
    const Scalar diag = lam_pow(L, -i) * b0;
    Scalar e, f, h;
    switch (p.kind) {
      case FamilyKind::FiniteDim:
        h = Scalar(2 * i - p.n) * diag;
        e = i < p.n ? down : Scalar();
        f = i > 0 ? Scalar(i * (p.n + 1 - i)) * up : Scalar();
        break;
      case FamilyKind::LowestWeight:
        h = Scalar(p.tau + 2 * i) * diag;
        e = down;
        f = i > 0 ? Scalar(-i * (p.tau + i - 1)) * up : Scalar();
        break;
      case FamilyKind::HighestWeight:
        h = Scalar(p.tau - 2 * i) * diag;
        f = down;
        e = i > 0 ? Scalar(i * (p.tau - i + 1)) * up : Scalar();
        break;
      case FamilyKind::IntermediateSeries: {
        h = Scalar(p.tau + 2 * i) * diag;
        const long a = p.tau + 2 * i + 1;
        const long c = p.tau + 2 * i - 1;
        e = i >= 0 ? down : quarter * Scalar(p.mu - a * a + 1) * down;
        f = i <= 0 ? up : quarter * Scalar(p.mu - c * c + 1) * up;
        break;
      }
    }
    m.e.coeff.push_back(e);
    m.f.coeff.push_back(f);
    m.h.coeff.push_back(h);
    m.beta.push_back(diag);
  }
  return m;
}

HomRep window_hom_rep(const WindowedModule& m) {
  const std::size_t size = m.size();
  return {diagonal_twist_hom_sl2(m.twist),
          {table_matrix(m.e, size), table_matrix(m.f, size), table_matrix(m.h, size)},
          Matrix::diagonal(m.beta)};
}

VerificationReport verify_family_window(const WindowedModule& m) {
  const HomRep rep = window_hom_rep(m);
  const HomLieAlgebra& alg = rep.algebra;
  const std::size_t size = m.size();
  auto valid = [&](std::size_t c) {
    const long i = m.lo + static_cast<long>(c);
    return (m.lo_is_boundary || i >= m.lo + 2) && (m.hi_is_boundary || i <= m.hi - 2);
  };
  auto index_label = [&](std::size_t c) { return "i=" + std::to_string(m.lo + static_cast<long>(c)); };

  std::vector<Matrix> rho_alpha(3);
  for (std::size_t g = 0; g < 3; ++g) rho_alpha[g] = rep.action(alg.alpha.column(g));

  VerificationReport r;
  std::size_t checked = 0;
  for (std::size_t c = 0; c < size; ++c) checked += valid(c) ? 1 : 0;
  const std::string note = "window [" + std::to_string(m.lo) + "," + std::to_string(m.hi) + "], " +
                           std::to_string(checked) + " verified index(es); " + m.convention;
  {
    CheckBuilder b("hom-rep-twist");
    for (std::size_t g = 0; g < 3; ++g) {
      const Matrix res = rho_alpha[g] * rep.beta - rep.beta * rep.rho_beta[g];
      for (std::size_t c = 0; c < size; ++c)
        if (valid(c)) b.record(res.column(c), {alg.names[g], index_label(c)});
    }
    b.set_note(note);
    r.add(std::move(b).finish());
  }
  {
    CheckBuilder b("hom-rep-bracket");
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        const Matrix res = rep.action(alg.c_alpha.at(x, y)) * rep.beta -
                           (rho_alpha[x] * rep.rho_beta[y] - rho_alpha[y] * rep.rho_beta[x]);
        for (std::size_t c = 0; c < size; ++c)
          if (valid(c)) b.record(res.column(c), {alg.names[x], alg.names[y], index_label(c)});
      }
    b.set_note(note);
    r.add(std::move(b).finish());
  }
  {
    CheckBuilder b("boundary-annihilation");
    const std::vector<std::pair<std::string, const ActionTable*>> tables{{"e", &m.e}, {"f", &m.f}};
    for (const auto& [gen, t] : tables) {
      if (m.hi_is_boundary && t->shift > 0 && !t->coeff.back().is_zero())
        b.fail_with({gen, "i=" + std::to_string(m.hi)}, gen + " must annihilate the top vector");
      if (m.lo_is_boundary && t->shift < 0 && !t->coeff.front().is_zero())
        b.fail_with({gen, "i=" + std::to_string(m.lo)}, gen + " must annihilate the bottom vector");
    }
    r.add(std::move(b).finish());
  }
  return r;
}

GeneralAnsatz solve_general_parameters(const Scalar& eta0, const Scalar& nu0, const Scalar& mu1,
                                       const Scalar& gamma0, const Scalar& lambda, long lo, long hi) {
  require_nonzero(eta0, "eta0");
  require_nonzero(lambda, "lambda");
  if (lo > hi) fail(ErrorKind::InvalidParams, "window is empty");
  GeneralAnsatz a{lambda, eta0, nu0, mu1, gamma0, lo, hi, {}, {}, {}, {}, {}, {}, {}};
  const Scalar inv = lambda.inverse();
  auto product_at = [&](long i) {
    return pow(lambda, -2 * i) * (mu1 * gamma0 + inv * Scalar(i) * eta0 * (nu0 - Scalar(i + 1) * eta0));
  };
  for (long i = lo - 1; i <= hi + 1; ++i) {
    a.eta.push_back(pow(lambda, -i) * eta0);
    a.nu.push_back(pow(lambda, -i) * (nu0 - Scalar(2 * i) * eta0));
    a.product.push_back(product_at(i));
    a.gamma.push_back(gamma0);
    const Scalar prev = product_at(i - 1);
    if (gamma0.is_zero()) {
      a.mu.push_back(Scalar());
      if (i >= lo && i <= hi + 1) a.free_mu.push_back(i);
    } else {
      a.mu.push_back(prev / gamma0);
    }
  }

  CheckBuilder split("product-split");
  if (gamma0.is_zero())
    for (long i = lo - 1; i <= hi; ++i)
      if (!a.at(a.product, i).is_zero())
        split.fail_with({"i=" + std::to_string(i)}, "gamma_i = 0 but the product is nonzero");
  a.report.add(std::move(split).finish());

  const Scalar half = Scalar::fraction(1, 2);
  std::vector<CheckBuilder> eqs;
  for (int k = 1; k <= 5; ++k) eqs.emplace_back("equation-" + std::to_string(k));
  for (long i = lo; i <= hi; ++i) {
    const Scalar& eta = a.at(a.eta, i);
    const Scalar& nu = a.at(a.nu, i);
    const Scalar& mu = a.at(a.mu, i);
    const Scalar& gam = a.at(a.gamma, i);
    const Scalar pi = gamma0.is_zero() ? a.at(a.product, i) : gam * a.at(a.mu, i + 1);
    const Scalar pprev = gamma0.is_zero() ? a.at(a.product, i - 1) : mu * a.at(a.gamma, i - 1);
    const std::vector<std::string> w{"i=" + std::to_string(i)};
    auto rec = [&](int k, const Scalar& res) { eqs[k - 1].record(Vector{res}, w); };
    rec(1, nu * eta - (lambda * pi - inv * pprev));
    rec(2, mu * eta - half * inv * (mu * a.at(a.nu, i - 1) - lambda * nu * mu));
    rec(3, gam * eta + half * lambda * (gam * a.at(a.nu, i + 1) - inv * nu * gam));
    rec(4, a.at(a.eta, i - 1) * mu - lambda * eta * mu);
    rec(5, a.at(a.eta, i + 1) * gam - inv * eta * gam);
  }
  for (auto& e : eqs) a.report.add(std::move(e).finish());
  return a;
}

}  // namespace homlie

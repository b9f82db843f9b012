#include "homlie/eigen.hpp"

#include <algorithm>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix specialize(const Matrix& a, const Rational& at) {
  RatMatrix out(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).eval(at);
  return out;
}

bool is_constant_matrix(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).as_rational()) return false;
  return true;
}

// Faddeev-LeVerrier; exact in characteristic zero.
Poly charpoly(const RatMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- A * m + c_{n-k+1} I
    RatMatrix next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (m[l][j] != 0) next[i][j] += a[i][l] * m[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    m = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a[i][l] != 0 && m[l][i] != 0) tr += a[i][l] * m[l][i];
    coeffs[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(coeffs));
}

Poly derivative(const Poly& p) {
  std::vector<Rational> d;
  const auto& c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

class SturmChain {
 public:
  explicit SturmChain(const Poly& f) {
    chain_.push_back(f);
    chain_.push_back(derivative(f));
    while (!chain_.back().is_zero()) {
      Poly r = Poly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign(p.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }


 private:
  std::vector<Poly> chain_;
};

mpz_class lcm_of_denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

}  // namespace

Poly characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeMismatch, "characteristic polynomial of non-square matrix");
  if (!is_constant_matrix(a)) fail(ErrorKind::Unsupported, "characteristic polynomial needs a rational matrix");
  return charpoly(specialize(a, 0));
}

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  const Rational flq(fl);
  if (lo == flq) return flq;
  if (flq + 1 <= hi) return flq + 1;
  const Rational inner = simplest_rational_between(Rational(1) / (hi - flq), Rational(1) / (lo - flq));
  return flq + Rational(1) / inner;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::Unsupported, "roots of the zero polynomial");
  std::vector<Rational> roots;
  Poly f = p.monic();
  // Strip the root at zero first so the bound below is meaningful.
  if (f.coeff(0) == 0) {
    roots.push_back(0);
    std::size_t shift = 0;
    while (f.coeff(static_cast<int>(shift)) == 0) ++shift;
    f = Poly(std::vector<Rational>(f.coefficients().begin() + static_cast<std::ptrdiff_t>(shift),
                                   f.coefficients().end()));
  }
  if (f.degree() < 1) return roots;
  f = Poly::exact_div(f, Poly::gcd(f, derivative(f))).monic();

  // A rational root q/d in lowest terms has d | D, so distinct such roots are
  // at least 1/D^2 apart.
  const mpz_class den = lcm_of_denominators(f);
  const Rational resolution = Rational(1) / Rational(den * den);
  Rational bound = 1;
  for (const auto& c : f.coefficients()) bound = std::max(bound, Rational(abs(c) + 1));

  const SturmChain sturm(f);
  // Interval endpoints are never roots of f, so Sturm counts are exact.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    const auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sturm.variations(lo) - sturm.variations(hi);
    if (count == 0) continue;
    const Rational width = hi - lo;
    if (count == 1 || width < resolution * resolution) {
      const Rational s = simplest_rational_between(lo, hi);
      if (f.eval(s) == 0) {
        roots.push_back(s);
        continue;
      }
      if (width < resolution) continue;
    }
    Rational mid = (lo + hi) / 2;
    while (f.eval(mid) == 0) {
      roots.push_back(mid);
      mid += (hi - mid) / 3;
    }
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Subspace eigenspace(const Matrix& a, const Scalar& theta) {
  return rref_nullspace(a - theta * Matrix::identity(a.rows())).second;
}

std::vector<Scalar> eigenvalue_candidates(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeMismatch, "eigenvalues of non-square matrix");
  std::vector<Scalar> found;
  auto add_if_new = [&found](const Scalar& s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
  };

  if (is_constant_matrix(a)) {
    for (const auto& r : rational_roots(charpoly(specialize(a, 0)))) add_if_new(Scalar(r));
    return found;
  }

  constexpr long kMaxPower = 6;
  const std::vector<Rational> points{2, 3, 5};
  std::vector<std::pair<Rational, std::vector<Rational>>> roots_at;
  for (const auto& p : points) {
    try {
      roots_at.emplace_back(p, rational_roots(charpoly(specialize(a, p))));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtPoint) throw;
    }
  }
  if (roots_at.size() < 2) fail(ErrorKind::Unsupported, "too few regular specialization points");

  const auto& [p0, roots0] = roots_at.front();
  for (const auto& r : roots0) {
    for (long k = -kMaxPower; k <= kMaxPower; ++k) {
      // theta = r * (L / p0)^k
      const Scalar theta = Scalar(r) * pow(Scalar::lambda() / Scalar(p0), k);
      bool consistent = true;
      for (std::size_t s = 1; s < roots_at.size() && consistent; ++s) {
        const Rational v = theta.eval(roots_at[s].first);
        consistent = std::binary_search(roots_at[s].second.begin(), roots_at[s].second.end(), v);
      }
      if (!consistent) continue;
      if (!eigenspace(a, theta).is_zero()) add_if_new(theta);
      if (r == 0) break;
    }
  }
  return found;
}

}  // namespace homlie

#include "homlie/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "homlie/errors.hpp"

namespace homlie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::CompatibilityFailure: return "CompatibilityFailure";
    case ErrorKind::NoInvertibleSolution: return "NoInvertibleSolution";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::Incomplete: return "Incomplete";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
    coeffs_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::indeterminate() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& coeff, int degree) {
  Poly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = coeff;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t Poly::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::DivisionByZero, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational lc = leading();
  if (lc != 1)
    for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  if (lhs.is_constant()) return Poly(rhs) *= lhs.coeffs_[0];
  if (rhs.is_constant()) return Poly(lhs) *= rhs.coeffs_[0];
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly rem = dividend;
  if (rem.degree() < divisor.degree()) return {Poly(), rem};
  const int dd = divisor.degree();
  const Rational& lc = divisor.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational factor = rem.leading() / lc;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= dd; ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    rem.trim();
  }
  return {Poly(std::move(quot)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  if (b.is_constant()) {
    Poly out = a;
    return out *= Rational(1) / b.leading();
  }
  return divmod(a, b).first;
}

namespace {

std::string render_monomial(const Rational& c, int degree) {
  std::string power = degree == 1 ? "L" : "L^" + std::to_string(degree);
  if (degree == 0) return to_string(c);
  if (c == 1) return power;
  if (c == -1) return "-" + power;
  return to_string(c) + "*" + power;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = cs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    std::string term = render_monomial(c, d);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rational> Scalar::as_rational() const {
  if (!den_.is_one() || !num_.is_constant()) return std::nullopt;
  return num_.is_zero() ? Rational(0) : num_.leading();
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out;
  out.num_ = den_;
  out.den_ = num_;
  out.normalize();
  return out;
}

Rational Scalar::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d == 0) fail(ErrorKind::PoleAtPoint, "denominator " + to_string(den_) + " vanishes at L=" + to_string(at));
  return num_.eval(at) / d;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  const Poly g = Poly::gcd(den_, rhs.den_);
  const Poly rhs_cofactor = Poly::exact_div(rhs.den_, g);
  const Poly lhs_cofactor = Poly::exact_div(den_, g);
  num_ = num_ * rhs_cofactor + rhs.num_ * lhs_cofactor;
  den_ = den_ * rhs_cofactor;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Scalar();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  const Poly g1 = Poly::gcd(num_, rhs.den_);
  const Poly g2 = Poly::gcd(rhs.num_, den_);
  num_ = Poly::exact_div(num_, g1) * Poly::exact_div(rhs.num_, g2);
  den_ = Poly::exact_div(den_, g2) * Poly::exact_div(rhs.den_, g1);
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
  return *this *= rhs.inverse();
}

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_string(const Scalar& s) {
  if (s.den().is_one()) return to_string(s.num());
  std::string num = to_string(s.num());
  std::string den = to_string(s.den());
  if (s.num().term_count() > 1) num = "(" + num + ")";
  if (s.den().term_count() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_ws();
    if (pos_ != text_.size()) error("end of input");
    return value;
  }

 private:
  [[noreturn]] void error(std::string_view expected) const {
    std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": expected " + std::string(expected) +
                                    ", found '" + found + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          skip_ws();
          fail(ErrorKind::DivisionByZero, "column " + std::to_string(pos_ + 1) + ": division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      bool negative = false;
      if (accept('-')) negative = true;
      else accept('+');
      skip_ws();
      long e = integer_value();
      base = pow(base, negative ? -e : e);
    }
    return base;
  }

  long integer_value() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("integer exponent");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("number, 'L' or '('");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'L') {
      ++pos_;
      return Scalar::lambda();
    }
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) error("')'");
      return inner;
    }
    error("number, 'L' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace homlie

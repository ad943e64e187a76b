#include "lts/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "lts/errors.hpp"

namespace lts {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(std::string(text), 10)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1 || q == 1) throw std::invalid_argument("rational '" + std::string(text) + "' not in lowest terms");
  return Rational(mpq_class(p, q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void require_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  require_same(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Rational dot(const Vector& a, const Vector& b) {
  require_same(a, b);
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

std::string to_string(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

}  // namespace lts

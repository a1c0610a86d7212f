#include "cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "polynomial.hpp"

namespace zcross {

namespace {

// Rational wrapper satisfying FieldScalar so poly:: works over plain Q.
struct Rat {
  Rational v;
  Rat() = default;
  Rat(Rational r) : v(std::move(r)) {}
  bool is_zero() const { return v == 0; }
  Rat inverse() const {
    if (v == 0) throw Error(ErrorCode::DivisionByZero, "rational inverse of zero");
    return {Rational(1) / v};
  }
  Rat operator-() const { return {Rational(-v)}; }
  friend Rat operator+(const Rat& a, const Rat& b) { return {a.v + b.v}; }
  friend Rat operator-(const Rat& a, const Rat& b) { return {a.v - b.v}; }
  friend Rat operator*(const Rat& a, const Rat& b) { return {a.v * b.v}; }
  friend bool operator==(const Rat& a, const Rat& b) = default;
  std::string str() const { return rational_str(v); }
  static Rat zero_like(const Rat&) { return {}; }
  static Rat one_like(const Rat&) { return {Rational(1)}; }
  static Rat from_int_like(const Rat&, long long x) { return {Rational(x)}; }
};

using QPoly = poly::Poly<Rat>;

QPoly cyclotomic_q(unsigned n, std::map<unsigned, QPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1
  QPoly num(n + 1, Rat{});
  num[0] = Rat{Rational(-1)};
  num[n] = Rat{Rational(1)};
  QPoly den{Rat{Rational(1)}};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly::mul(den, cyclotomic_q(d, memo));
  auto [quot, rem] = poly::divmod(std::move(num), den);
  if (!poly::is_zero(rem))
    throw Error(ErrorCode::InternalInvariantViolation, "cyclotomic division left a remainder");
  memo[n] = quot;
  return quot;
}

std::map<unsigned, QPoly>& cyclotomic_memo() {
  static std::map<unsigned, QPoly> memo;
  return memo;
}

std::mutex& cyclotomic_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic modulus must be positive");
  QPoly p;
  {
    std::lock_guard<std::mutex> lock(cyclotomic_mutex());
    p = cyclotomic_q(n, cyclotomic_memo());
  }
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (const Rat& c : p) {
    if (denominator(c.v) != 1)
      throw Error(ErrorCode::InternalInvariantViolation, "cyclotomic coefficient not integral");
    out.push_back(numerator(c.v));
  }
  return out;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(unsigned modulus) : modulus_(modulus) {
  phi_int_ = cyclotomic_polynomial(modulus);
  degree_ = static_cast<unsigned>(phi_int_.size() - 1);
  phi_.reserve(phi_int_.size());
  for (const BigInt& c : phi_int_) phi_.emplace_back(c);
  // x^{degree+j} mod Phi, iteratively: multiply previous row by x, fold back.
  std::vector<Rational> row(degree_, Rational(0));
  for (unsigned k = 0; k < degree_; ++k) row[k] = -phi_[k];  // x^degree = -sum
  power_rows_.push_back(row);
  for (unsigned j = 1; j + 1 < degree_ || (degree_ == 1 && j < 1); ++j) {
    std::vector<Rational> next(degree_, Rational(0));
    Rational top = row[degree_ - 1];
    for (unsigned k = degree_ - 1; k > 0; --k) next[k] = row[k - 1];
    next[0] = Rational(0);
    if (top != 0)
      for (unsigned k = 0; k < degree_; ++k) next[k] += top * -phi_[k];
    power_rows_.push_back(next);
    row = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned modulus) {
  if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic modulus must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(modulus);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(modulus));
  cache[modulus] = field;
  return field;
}

std::vector<Rational> CyclotomicField::reduce(const std::vector<Rational>& p) const {
  std::vector<Rational> out(degree_, Rational(0));
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (k < degree_) {
      out[k] += p[k];
    } else {
      size_t j = k - degree_;
      if (j >= power_rows_.size())
        throw Error(ErrorCode::InternalInvariantViolation, "cyclotomic reduction row out of range");
      for (unsigned t = 0; t < degree_; ++t) out[t] += p[k] * power_rows_[j][t];
    }
  }
  return out;
}

CyclotomicScalar::CyclotomicScalar()
    : field_(CyclotomicField::get(1)), coeffs_{Rational(0)} {}

CyclotomicScalar CyclotomicScalar::from_rational(unsigned modulus, Rational value) {
  auto field = CyclotomicField::get(modulus);
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = std::move(value);
  return {std::move(field), std::move(c)};
}

CyclotomicScalar CyclotomicScalar::root_of_unity(unsigned modulus) {
  auto field = CyclotomicField::get(modulus);
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() == 1) {
    // Phi_1 = x-1 -> x == 1; Phi_2 = x+1 -> x == -1.
    c[0] = modulus == 1 ? Rational(1) : Rational(-1);
  } else {
    c[1] = Rational(1);
  }
  return {std::move(field), std::move(c)};
}

CyclotomicScalar CyclotomicScalar::from_coeffs(unsigned modulus, std::vector<Rational> coeffs) {
  auto field = CyclotomicField::get(modulus);
  if (coeffs.size() != field->degree())
    throw Error(ErrorCode::DimensionMismatch,
                "cyclotomic coefficient vector must have length phi(N)");
  return {std::move(field), std::move(coeffs)};
}

bool CyclotomicScalar::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

bool CyclotomicScalar::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rational CyclotomicScalar::rational_value() const {
  if (!is_rational())
    throw Error(ErrorCode::InvalidArgument, "cyclotomic scalar is not rational");
  return coeffs_[0];
}

void CyclotomicScalar::require_same_field(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorCode::MixedScalarFields,
                "cyclotomic moduli differ: " + std::to_string(a.modulus()) + " vs " +
                    std::to_string(b.modulus()));
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (Rational& x : c) x = -x;
  return {field_, std::move(c)};
}

CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  CyclotomicScalar::require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs_[k];
  return {a.field_, std::move(c)};
}

CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  return a + (-b);
}

CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  CyclotomicScalar::require_same_field(a, b);
  size_t deg = a.coeffs_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return {a.field_, a.field_->reduce(prod)};
}

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic scalar");
  // Extended Euclid in Q[x]: s*f + t*Phi = 1, so s is the inverse mod Phi.
  QPoly f;
  for (const Rational& c : coeffs_) f.push_back(Rat{c});
  poly::trim(f);
  QPoly phi;
  for (const BigInt& c : field_->minimal_polynomial()) phi.push_back(Rat{Rational(c)});

  QPoly r0 = phi, r1 = f;
  QPoly s0{}, s1{Rat{Rational(1)}};
  while (!poly::is_zero(r1)) {
    auto [q, r2] = poly::divmod(r0, r1);
    QPoly s2 = poly::add(s0, poly::scale(poly::mul(q, s1), Rat{Rational(-1)}));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd(phi, f); Phi_N is irreducible over Q so r0 is a nonzero constant.
  if (poly::degree(r0) != 0)
    throw Error(ErrorCode::InternalInvariantViolation, "cyclotomic gcd not constant");
  QPoly inv = poly::scale(s0, r0[0].inverse());
  std::vector<Rational> c;
  for (const Rat& x : inv) c.push_back(x.v);
  return {field_, field_->reduce(c)};
}

CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  return a * b.inverse();
}

CyclotomicScalar CyclotomicScalar::conj() const {
  // Substitute x -> x^{N-1} = x^{-1}.
  unsigned n = modulus();
  CyclotomicScalar xk = CyclotomicScalar::root_of_unity(n).pow(static_cast<long long>(n) - 1);
  CyclotomicScalar acc = CyclotomicScalar::from_rational(n, Rational(0));
  CyclotomicScalar power = CyclotomicScalar::from_rational(n, Rational(1));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0)
      acc = acc + power * CyclotomicScalar::from_rational(n, coeffs_[k]);
    if (k + 1 < coeffs_.size()) power = power * xk;
  }
  return acc;
}

CyclotomicScalar CyclotomicScalar::pow(long long e) const {
  CyclotomicScalar base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  CyclotomicScalar acc = CyclotomicScalar::from_rational(modulus(), Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicScalar::str() const {
  std::ostringstream oss;
  oss << "cyc" << modulus() << "[";
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) oss << ",";
    oss << rational_str(coeffs_[k]);
  }
  oss << "]";
  return oss.str();
}

CyclotomicScalar CyclotomicScalar::zero_like(const CyclotomicScalar& like) {
  return from_rational(like.modulus(), Rational(0));
}

CyclotomicScalar CyclotomicScalar::one_like(const CyclotomicScalar& like) {
  return from_rational(like.modulus(), Rational(1));
}

CyclotomicScalar CyclotomicScalar::from_int_like(const CyclotomicScalar& like, long long v) {
  return from_rational(like.modulus(), Rational(v));
}

}  // namespace zcross

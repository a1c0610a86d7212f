#ifndef ZCROSS_CYCLOTOMIC_HPP
#define ZCROSS_CYCLOTOMIC_HPP

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace zcross {

// N-th cyclotomic polynomial Phi_N, exact integer coefficients, computed by
// dividing x^N - 1 by the product of Phi_d over the proper divisors d of N.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

// Shared, immutable description of Q[x]/(Phi_N): the minimal polynomial plus
// precomputed reduction rows for x^phi .. x^{2phi-2}. Instances are cached per
// modulus and safe to use concurrently.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(unsigned modulus);

  unsigned modulus() const { return modulus_; }
  unsigned degree() const { return degree_; }
  const std::vector<BigInt>& minimal_polynomial() const { return phi_int_; }

  // Reduce a polynomial of any length modulo Phi_N to a coefficient vector of
  // length degree().
  std::vector<Rational> reduce(const std::vector<Rational>& p) const;

 private:
  explicit CyclotomicField(unsigned modulus);

  unsigned modulus_;
  unsigned degree_;
  std::vector<BigInt> phi_int_;
  std::vector<Rational> phi_;                       // same, as rationals
  std::vector<std::vector<Rational>> power_rows_;   // x^{degree_+j} mod Phi_N
};

// Element of the cyclotomic field Q[x]/(Phi_N). The class of x has
// multiplicative order exactly N, giving exact primitive N-th roots of unity.
class CyclotomicScalar {
 public:
  CyclotomicScalar();  // zero in Q[x]/(Phi_1) == Q

  static CyclotomicScalar from_rational(unsigned modulus, Rational value);
  static CyclotomicScalar root_of_unity(unsigned modulus);  // class of x
  static CyclotomicScalar from_coeffs(unsigned modulus, std::vector<Rational> coeffs);

  unsigned modulus() const { return field_->modulus(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // The rational part, when the element is rational; throws otherwise.
  Rational rational_value() const;
  bool is_rational() const;

  CyclotomicScalar operator-() const;
  friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b);
  friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b);
  friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b);
  friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b);
  CyclotomicScalar inverse() const;

  // Complex conjugation, the Galois map x -> x^{N-1}.
  CyclotomicScalar conj() const;
  CyclotomicScalar pow(long long e) const;

  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);

  std::string str() const;

  static CyclotomicScalar zero_like(const CyclotomicScalar& like);
  static CyclotomicScalar one_like(const CyclotomicScalar& like);
  static CyclotomicScalar from_int_like(const CyclotomicScalar& like, long long v);

 private:
  CyclotomicScalar(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  static void require_same_field(const CyclotomicScalar& a, const CyclotomicScalar& b);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;  // always exactly degree() entries
};

static_assert(FieldScalar<GaussianRational>);
static_assert(FieldScalar<CyclotomicScalar>);

}  // namespace zcross

#endif

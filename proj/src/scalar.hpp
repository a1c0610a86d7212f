#ifndef ZCROSS_SCALAR_HPP
#define ZCROSS_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace zcross {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers. cpp_rational keeps gcd(|num|, den) = 1 and den > 0
// after every operation, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

// Element of Q(i): re + im*i. The coefficient field for every finite system
// and for the rotation model; closed under all four field operations and
// under complex conjugation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long value) : re_(value) {}  // NOLINT implicit
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  bool is_unimodular() const { return norm_sq() == 1; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }

  GaussianRational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Rational n = norm_sq();
    return {re_ / n, -im_ / n};
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  // Exact integer power; negative exponents require a nonzero base.
  GaussianRational pow(long long e) const;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::string str() const;

  static GaussianRational zero_like(const GaussianRational&) { return {}; }
  static GaussianRational one_like(const GaussianRational&) { return {1}; }
  static GaussianRational from_int_like(const GaussianRational&, long long v) { return {v}; }

 private:
  Rational re_;
  Rational im_;
};

// Accepts "p", "p/q", "p/q+r/s*i", "i", "-i", "r*i", plus whitespace.
GaussianRational parse_gaussian(const std::string& text);

// Scalars usable as entries of exact dense matrices. Both GaussianRational
// and CyclotomicScalar model this; the *_like constructors exist because a
// cyclotomic zero or one only makes sense relative to a modulus.
template <typename S>
concept FieldScalar = std::default_initializable<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.inverse() } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { S::zero_like(a) } -> std::convertible_to<S>;
  { S::one_like(a) } -> std::convertible_to<S>;
  { S::from_int_like(a, 1LL) } -> std::convertible_to<S>;
  { a.str() } -> std::convertible_to<std::string>;
};

}  // namespace zcross

#endif

#ifndef ZCROSS_POLYNOMIAL_HPP
#define ZCROSS_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

// Dense univariate polynomials over an exact field, coefficient of x^k at
// index k. Enough machinery for cyclotomic reduction and for locating the
// unimodular roots shared by families of Laurent polynomials.

namespace zcross::poly {

template <FieldScalar S>
using Poly = std::vector<S>;

template <FieldScalar S>
void trim(Poly<S>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <FieldScalar S>
bool is_zero(const Poly<S>& p) {
  for (const S& c : p)
    if (!c.is_zero()) return false;
  return true;
}

template <FieldScalar S>
long long degree(const Poly<S>& p) {
  for (size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<long long>(k);
  return -1;
}

template <FieldScalar S>
Poly<S> add(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r = a.size() >= b.size() ? a : b;
  const Poly<S>& shorter = a.size() >= b.size() ? b : a;
  for (size_t k = 0; k < shorter.size(); ++k) r[k] = r[k] + shorter[k];
  trim(r);
  return r;
}

template <FieldScalar S>
Poly<S> scale(const Poly<S>& a, const S& c) {
  Poly<S> r = a;
  for (S& v : r) v = v * c;
  trim(r);
  return r;
}

template <FieldScalar S>
Poly<S> mul(const Poly<S>& a, const Poly<S>& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly<S> r(a.size() + b.size() - 1, S::zero_like(a[0]));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <FieldScalar S>
std::pair<Poly<S>, Poly<S>> divmod(Poly<S> num, const Poly<S>& den) {
  long long dd = degree(den);
  if (dd < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(num);
  long long dn = degree(num);
  if (dn < dd) return {{}, std::move(num)};
  S lead_inv = den[dd].inverse();
  Poly<S> quot(dn - dd + 1, S::zero_like(den[dd]));
  for (long long k = dn; k >= dd; --k) {
    if (num[k].is_zero()) continue;
    S q = num[k] * lead_inv;
    quot[k - dd] = q;
    for (long long j = 0; j <= dd; ++j)
      num[k - dd + j] = num[k - dd + j] - q * den[j];
  }
  trim(num);
  return {std::move(quot), std::move(num)};
}

template <FieldScalar S>
Poly<S> mod(Poly<S> num, const Poly<S>& den) {
  return divmod(std::move(num), den).second;
}

template <FieldScalar S>
Poly<S> monic(Poly<S> p) {
  long long d = degree(p);
  if (d < 0) return p;
  S inv = p[d].inverse();
  for (S& c : p) c = c * inv;
  trim(p);
  return p;
}

template <FieldScalar S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly<S> r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

template <FieldScalar S>
Poly<S> derivative(const Poly<S>& p) {
  if (p.size() <= 1) return {};
  Poly<S> r(p.size() - 1, S::zero_like(p[0]));
  for (size_t k = 1; k < p.size(); ++k)
    r[k - 1] = p[k] * S::from_int_like(p[0], static_cast<long long>(k));
  trim(r);
  return r;
}

// Squarefree part: p / gcd(p, p'). Root set unchanged, multiplicities dropped.
template <FieldScalar S>
Poly<S> radical(const Poly<S>& p) {
  if (degree(p) <= 0) return monic(Poly<S>(p));
  Poly<S> g = gcd(Poly<S>(p), derivative(p));
  if (degree(g) <= 0) return monic(Poly<S>(p));
  return monic(divmod(Poly<S>(p), g).first);
}

template <FieldScalar S>
S eval(const Poly<S>& p, const S& x) {
  S acc = S::zero_like(x);
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

}  // namespace zcross::poly

#endif

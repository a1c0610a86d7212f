#include "scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace zcross {

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

// Cursor over the input text; parsing helpers skip whitespace themselves.
struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

[[noreturn]] void parse_fail(const std::string& text) {
  throw Error(ErrorCode::SchemaError, "cannot parse scalar \"" + text + "\"");
}

BigInt parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) parse_fail(c.s);
  return BigInt(c.s.substr(start, c.pos - start));
}

// unsigned rational: "p" or "p/q"
Rational parse_unsigned_rational(Cursor& c) {
  BigInt num = parse_integer(c);
  if (c.accept('/')) {
    BigInt den = parse_integer(c);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + c.s + "\"");
    return Rational(num, den);
  }
  return Rational(num);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Cursor c{text};
  int sign = 1;
  if (c.accept('-')) sign = -1;
  else c.accept('+');
  Rational r = parse_unsigned_rational(c);
  if (!c.done()) parse_fail(text);
  return sign < 0 ? Rational(-r) : r;
}

GaussianRational parse_gaussian(const std::string& text) {
  Cursor c{text};
  Rational re(0), im(0);

  auto parse_term = [&](int sign) {
    // either "<rat>", "<rat>*i", "<rat>i", or bare "i"
    if (c.peek() == 'i') {
      ++c.pos;
      im += Rational(sign);
      return;
    }
    Rational mag = parse_unsigned_rational(c);
    bool imaginary = false;
    if (c.accept('*')) {
      if (!c.accept('i')) parse_fail(text);
      imaginary = true;
    } else if (c.peek() == 'i') {
      ++c.pos;
      imaginary = true;
    }
    if (imaginary) im += sign * mag;
    else re += sign * mag;
  };

  int sign = 1;
  if (c.accept('-')) sign = -1;
  else c.accept('+');
  parse_term(sign);

  if (!c.done()) {
    if (c.accept('-')) sign = -1;
    else if (c.accept('+')) sign = 1;
    else parse_fail(text);
    parse_term(sign);
  }
  if (!c.done()) parse_fail(text);
  return {re, im};
}

GaussianRational GaussianRational::pow(long long e) const {
  GaussianRational base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  GaussianRational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  auto imag_part = [&](const Rational& v) -> std::string {
    Rational a = v < 0 ? Rational(-v) : v;
    return a == 1 ? "i" : rational_str(a) + "*i";
  };
  if (im_ == 0) return rational_str(re_);
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag_part(im_);
  return rational_str(re_) + (im_ < 0 ? "-" : "+") + imag_part(im_);
}

}  // namespace zcross

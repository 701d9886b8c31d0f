#pragma once

#include <complex>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace mixedspectra {

/// An Eisenstein integer a + b*w, where w = e^{2*pi*i/3} and w^2 = -1 - w.
/// Coefficients are arbitrary-precision so matrix identities and determinants
/// can be checked with zero numerical error.
struct Eisenstein {
  mpz_class a{0};
  mpz_class b{0};

  Eisenstein() = default;
  Eisenstein(long value) : a(value) {}  // integers embed implicitly
  Eisenstein(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}

  static Eisenstein omega() { return {0, 1}; }
  static Eisenstein omega_sq() { return {-1, -1}; }

  /// w^exponent for any integer exponent (negative allowed).
  static Eisenstein unit(int exponent);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_real() const { return b == 0; }
  bool is_unit() const { return norm() == 1; }

  Eisenstein conj() const { return {a - b, -b}; }

  /// Field norm a^2 - a*b + b^2; non-negative, zero only at zero.
  mpz_class norm() const { return a * a - a * b + b * b; }

  std::complex<double> to_complex() const;

  /// Unit exponent: 0, 1 or 2 such that *this == w^k. Throws if not a unit.
  int unit_exponent() const;

  std::string str() const;

  Eisenstein operator-() const { return {-a, -b}; }
  Eisenstein& operator+=(const Eisenstein& o);
  Eisenstein& operator-=(const Eisenstein& o);
  Eisenstein& operator*=(const Eisenstein& o);

  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }
};

/// num / den with den a positive integer, kept reduced:
/// den > 0 and gcd(gcd(|num.a|, |num.b|), den) = 1.
struct EisensteinRational {
  Eisenstein num;
  mpz_class den{1};

  EisensteinRational() = default;
  EisensteinRational(Eisenstein n) : num(std::move(n)) {}
  EisensteinRational(Eisenstein n, mpz_class d);

  bool is_zero() const { return num.is_zero(); }

  /// True when the value lies in Z: denominator 1 and no omega part.
  bool is_rational_integer() const { return den == 1 && num.is_real(); }

  EisensteinRational operator-() const { return {-num, den}; }
  EisensteinRational& operator+=(const EisensteinRational& o);
  EisensteinRational& operator-=(const EisensteinRational& o);
  EisensteinRational& operator*=(const EisensteinRational& o);

  /// Exact division by a nonzero integer.
  EisensteinRational divided_by(const mpz_class& k) const;

  friend EisensteinRational operator+(EisensteinRational x, const EisensteinRational& y) { return x += y; }
  friend EisensteinRational operator-(EisensteinRational x, const EisensteinRational& y) { return x -= y; }
  friend EisensteinRational operator*(EisensteinRational x, const EisensteinRational& y) { return x *= y; }
  friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const EisensteinRational& x, const EisensteinRational& y) { return !(x == y); }

private:
  void reduce();
};

}  // namespace mixedspectra

#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace mixedspectra {

/// Polynomial with integer coefficients, stored ascending. The zero
/// polynomial has an empty coefficient list.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(); }

  static IntPolynomial one() { return IntPolynomial({1}); }
  /// c0 + c1*x
  static IntPolynomial linear(long c0, long c1) { return IntPolynomial({c0, c1}); }
  /// (x + c)^k
  static IntPolynomial shifted_power(long c, int k);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  mpz_class constant_term() const { return coeffs.empty() ? mpz_class(0) : coeffs.front(); }
  mpz_class leading() const { return coeffs.empty() ? mpz_class(0) : coeffs.back(); }

  void trim();
  IntPolynomial derivative() const;
  double evaluate(double x) const;
  /// p(x + delta)
  IntPolynomial shifted(long delta) const;

  std::string str(const std::string& var = "x") const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial x, const IntPolynomial& y) { return x += y; }
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) {
    return x.coeffs == y.coeffs;
  }
  friend bool operator!=(const IntPolynomial& x, const IntPolynomial& y) { return !(x == y); }
};

}  // namespace mixedspectra

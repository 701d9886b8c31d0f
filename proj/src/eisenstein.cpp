#include "mixedspectra/eisenstein.hpp"

#include <stdexcept>

namespace mixedspectra {

namespace {
constexpr double kSqrt3Over2 = 0.86602540378443864676;
}

Eisenstein Eisenstein::unit(int exponent) {
  switch (((exponent % 3) + 3) % 3) {
    case 0: return Eisenstein(1);
    case 1: return omega();
    default: return omega_sq();
  }
}

std::complex<double> Eisenstein::to_complex() const {
  const double da = a.get_d();
  const double db = b.get_d();
  return {da - 0.5 * db, kSqrt3Over2 * db};
}

int Eisenstein::unit_exponent() const {
  for (int k = 0; k < 3; ++k) {
    if (*this == unit(k)) return k;
  }
  throw std::domain_error("Eisenstein::unit_exponent: value is not 1, w or w^2");
}

std::string Eisenstein::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (a != 0) out = a.get_str();
  if (b != 0) {
    if (b > 0 && !out.empty()) out += "+";
    if (b == -1) {
      out += "-";
    } else if (b != 1) {
      out += b.get_str();
    }
    out += "w";
  }
  return out;
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
  a += o.a;
  b += o.b;
  return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w, using w^2 = -1 - w.
Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
  const mpz_class bd = b * o.b;
  mpz_class na = a * o.a - bd;
  mpz_class nb = a * o.b + b * o.a - bd;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

EisensteinRational::EisensteinRational(Eisenstein n, mpz_class d)
    : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::invalid_argument("EisensteinRational: zero denominator");
  reduce();
}

void EisensteinRational::reduce() {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den == 1) return;
  if (num.is_zero()) {
    den = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.a.get_mpz_t(), num.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num.a.get_mpz_t(), num.a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(num.b.get_mpz_t(), num.b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& o) {
  num = num * Eisenstein(o.den, 0) + o.num * Eisenstein(den, 0);
  den *= o.den;
  reduce();
  return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& o) {
  num = num * Eisenstein(o.den, 0) - o.num * Eisenstein(den, 0);
  den *= o.den;
  reduce();
  return *this;
}

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& o) {
  num *= o.num;
  den *= o.den;
  if (den != 1) reduce();
  return *this;
}

EisensteinRational EisensteinRational::divided_by(const mpz_class& k) const {
  if (k == 0) throw std::invalid_argument("EisensteinRational: division by zero");
  return {num, den * k};
}

}  // namespace mixedspectra

#include "mixedspectra/int_polynomial.hpp"

namespace mixedspectra {

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * static_cast<long>(i);
  return IntPolynomial(std::move(out));
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::shifted(long delta) const {
  // Horner with polynomial coefficients: p(x + delta).
  IntPolynomial acc;
  const IntPolynomial base = linear(delta, 1);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * base;
    acc += IntPolynomial({*it});
  }
  return acc;
}

IntPolynomial IntPolynomial::shifted_power(long c, int k) {
  IntPolynomial out = one();
  const IntPolynomial base = linear(c, 1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size());
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<mpz_class> out(x.coeffs.size() + y.coeffs.size() - 1);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) out[i + j] += x.coeffs[i] * y.coeffs[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    const bool first = out.empty();
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const mpz_class mag = abs(c);
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace mixedspectra

#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "mixedspectra/int_polynomial.hpp"
#include "mixedspectra/matrices.hpp"
#include "mixedspectra/report.hpp"

namespace mixedspectra {

/// Off-diagonal Frobenius-norm target for the Jacobi sweeps.
inline constexpr double kDefaultConvergenceTol = 1e-10;
/// Absolute slack allowed on eigenvalue-derived assertions.
inline constexpr double kDefaultAssertTol = 1e-8;

/// Real eigenvalues sorted descending, with the convergence tolerance that
/// produced them.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultConvergenceTol;

  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  double sum() const;
  double sum_squares() const;
};

/// Eigenpairs of a Hermitian matrix; projectors P_i = x_i x_i* on demand.
struct SpectralDecomposition {
  int dim = 0;
  std::vector<double> values;  // descending
  std::vector<std::vector<std::complex<double>>> vectors;

  /// Row-major dim x dim rank-one projector for eigenpair i.
  std::vector<std::complex<double>> projector(int i) const;
};

/// All eigenvalues with multiplicity. The complex Hermitian matrix is embedded
/// as the 2n x 2n real symmetric [[Re, -Im], [Im, Re]], diagonalized by cyclic
/// Jacobi rotations until the off-diagonal Frobenius norm drops below tol, and
/// the doubled spectrum is collapsed by sorting and averaging adjacent pairs.
Spectrum eigenvalues(const HermitianMatrixNumeric& m, double tol = kDefaultConvergenceTol);
Spectrum eigenvalues(const HermitianMatrixExact& m, double tol = kDefaultConvergenceTol);

SpectralDecomposition spectral_decomposition(const HermitianMatrixNumeric& m,
                                             double tol = kDefaultConvergenceTol);
SpectralDecomposition spectral_decomposition(const HermitianMatrixExact& m,
                                             double tol = kDefaultConvergenceTol);

/// Coefficients of det(x I - M), computed by Faddeev-LeVerrier over exact
/// Eisenstein rationals. Every coefficient of a Hermitian input is a rational
/// integer; a non-integer coefficient signals an arithmetic bug and throws
/// logic_error.
IntPolynomial char_poly_exact(const HermitianMatrixExact& m);

/// det(M) = (-1)^n * constant term of the characteristic polynomial.
mpz_class det_exact(const HermitianMatrixExact& m);

/// Exact singularity: the constant coefficient of det(x I - M) vanishes.
bool is_singular_exact(const HermitianMatrixExact& m);

/// For a unit vector x: sum_{i,j} conj(x_i) x_j >= 0, and for every j
/// sum_{i != j} |x_i|^2 |x_j|^2 <= 1/4.
TheoremReport unit_vector_inequalities(const std::vector<std::complex<double>>& x,
                                       double tol = kDefaultAssertTol);

}  // namespace mixedspectra

#pragma once

#include <complex>
#include <vector>

#include "mixedspectra/eisenstein.hpp"
#include "mixedspectra/mixed_graph.hpp"
#include "mixedspectra/report.hpp"

namespace mixedspectra {

/// Dense matrix over Z[w]. Sizes here stay small (a few hundred at most),
/// so everything is plain row-major storage and cubic products.
class EisensteinMatrix {
public:
  EisensteinMatrix() = default;
  EisensteinMatrix(int rows, int cols);
  static EisensteinMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Eisenstein& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Eisenstein& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  EisensteinMatrix conj_transpose() const;
  Eisenstein trace() const;

  EisensteinMatrix& operator+=(const EisensteinMatrix& o);
  friend EisensteinMatrix operator+(EisensteinMatrix x, const EisensteinMatrix& y) { return x += y; }
  friend EisensteinMatrix operator*(const EisensteinMatrix& x, const EisensteinMatrix& y);
  friend bool operator==(const EisensteinMatrix& x, const EisensteinMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Eisenstein> data_;
};

/// Square Eisenstein matrix with the Hermitian-symmetry invariant enforced on
/// construction: entry(j,i) = conj(entry(i,j)), real diagonal.
class HermitianMatrixExact {
public:
  explicit HermitianMatrixExact(EisensteinMatrix m);

  int dim() const { return mat_.rows(); }
  const Eisenstein& at(int i, int j) const { return mat_.at(i, j); }
  const EisensteinMatrix& matrix() const { return mat_; }

  friend bool operator==(const HermitianMatrixExact& x, const HermitianMatrixExact& y) {
    return x.mat_ == y.mat_;
  }

private:
  EisensteinMatrix mat_;
};

/// Vertex-by-edge matrix with entries in {0, 1, w, w^2}; column j describes
/// edge_order[j]. Columns follow the canonical edge order of the graph.
struct IncidenceMatrixExact {
  EisensteinMatrix mat;
  std::vector<MixedEdge> edge_order;
};

/// Square complex matrix, Hermitian up to a small tolerance.
class HermitianMatrixNumeric {
public:
  HermitianMatrixNumeric(int n, std::vector<std::complex<double>> entries,
                         double hermiticity_tol = 1e-12);

  int dim() const { return n_; }
  std::complex<double> at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<std::complex<double>>& data() const { return data_; }

private:
  int n_ = 0;
  std::vector<std::complex<double>> data_;
};

/// H entries: 1 on digons, w for arc i->j, w^2 for arc j->i, 0 otherwise.
HermitianMatrixExact build_H_gamma(const MixedGraph& x);

/// Same case split with alpha = e^{i*theta}; theta = 0 recovers the plain
/// adjacency matrix of the underlying graph.
HermitianMatrixNumeric build_H_alpha(const MixedGraph& x, double theta);

/// Incidence entries: 1 at digon endpoints, w at arc terminals, w^2 at arc
/// initials; one column per edge in canonical order.
IncidenceMatrixExact build_incidence(const MixedGraph& x);

/// Diagonal matrix of vertex degrees.
HermitianMatrixExact degree_matrix(const MixedGraph& x);

/// The signless Laplacian Q = B B*. Computed from the incidence matrix and
/// cross-asserted against D + H entrywise; a mismatch is a construction bug
/// and throws logic_error.
HermitianMatrixExact build_Q(const MixedGraph& x);

HermitianMatrixNumeric to_numeric(const HermitianMatrixExact& m);

/// Switches x by the vertex gauge g (omega exponents): the result has
/// H' = S* H S with S = diag(w^g). Degrees are unchanged, so Q' = S* Q S
/// and the Q-spectrum is preserved.
MixedGraph apply_switching(const MixedGraph& x, const std::vector<int>& gauge);

/// Exact entrywise check of the three incidence-product identities:
/// unoriented incidence reduces to the classic 0/1 matrix, B B* = D + H,
/// and B* B = 2I + H of the algebraic line graph.
TheoremReport verify_incidence_products(const MixedGraph& x);

}  // namespace mixedspectra

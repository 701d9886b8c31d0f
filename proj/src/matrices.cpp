#include "mixedspectra/matrices.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "mixedspectra/line_graph.hpp"

namespace mixedspectra {

EisensteinMatrix::EisensteinMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("EisensteinMatrix: negative dimension");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

EisensteinMatrix EisensteinMatrix::identity(int n) {
  EisensteinMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Eisenstein(1);
  return m;
}

EisensteinMatrix EisensteinMatrix::conj_transpose() const {
  EisensteinMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  }
  return out;
}

Eisenstein EisensteinMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: non-square matrix");
  Eisenstein t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

EisensteinMatrix& EisensteinMatrix::operator+=(const EisensteinMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

EisensteinMatrix operator*(const EisensteinMatrix& x, const EisensteinMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  EisensteinMatrix out(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i) {
    for (int k = 0; k < x.cols_; ++k) {
      const Eisenstein& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) += xik * y.at(k, j);
      }
    }
  }
  return out;
}

HermitianMatrixExact::HermitianMatrixExact(EisensteinMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) throw std::invalid_argument("HermitianMatrixExact: non-square");
  for (int i = 0; i < mat_.rows(); ++i) {
    if (!mat_.at(i, i).is_real()) {
      throw std::invalid_argument("HermitianMatrixExact: non-real diagonal at " + std::to_string(i));
    }
    for (int j = i + 1; j < mat_.cols(); ++j) {
      if (mat_.at(j, i) != mat_.at(i, j).conj()) {
        throw std::invalid_argument("HermitianMatrixExact: symmetry violated at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

HermitianMatrixNumeric::HermitianMatrixNumeric(int n, std::vector<std::complex<double>> entries,
                                               double hermiticity_tol)
    : n_(n), data_(std::move(entries)) {
  if (n < 0 || data_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("HermitianMatrixNumeric: bad entry count");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > hermiticity_tol) {
        throw std::invalid_argument("HermitianMatrixNumeric: not Hermitian at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

HermitianMatrixExact build_H_gamma(const MixedGraph& x) {
  const int n = x.vertex_count();
  EisensteinMatrix h(n, n);
  for (const auto& [u, v] : x.digons()) {
    h.at(u, v) = Eisenstein(1);
    h.at(v, u) = Eisenstein(1);
  }
  for (const auto& [u, v] : x.arcs()) {
    h.at(u, v) = Eisenstein::omega();
    h.at(v, u) = Eisenstein::omega_sq();
  }
  return HermitianMatrixExact(std::move(h));
}

HermitianMatrixNumeric build_H_alpha(const MixedGraph& x, double theta) {
  const int n = x.vertex_count();
  const std::complex<double> alpha = std::polar(1.0, theta);
  std::vector<std::complex<double>> h(static_cast<std::size_t>(n) * n);
  const auto set = [&h, n](int i, int j, std::complex<double> value) {
    h[static_cast<std::size_t>(i) * n + j] = value;
  };
  for (const auto& [u, v] : x.digons()) {
    set(u, v, 1.0);
    set(v, u, 1.0);
  }
  for (const auto& [u, v] : x.arcs()) {
    set(u, v, alpha);
    set(v, u, std::conj(alpha));
  }
  return {n, std::move(h)};
}

IncidenceMatrixExact build_incidence(const MixedGraph& x) {
  IncidenceMatrixExact b;
  b.edge_order = x.canonical_edges();
  b.mat = EisensteinMatrix(x.vertex_count(), static_cast<int>(b.edge_order.size()));
  for (int j = 0; j < b.mat.cols(); ++j) {
    const MixedEdge& e = b.edge_order[j];
    if (e.is_arc()) {
      b.mat.at(e.terminal(), j) = Eisenstein::omega();
      b.mat.at(e.initial(), j) = Eisenstein::omega_sq();
    } else {
      b.mat.at(e.u, j) = Eisenstein(1);
      b.mat.at(e.v, j) = Eisenstein(1);
    }
  }
  return b;
}

HermitianMatrixExact degree_matrix(const MixedGraph& x) {
  const auto deg = degrees(x);
  EisensteinMatrix d(x.vertex_count(), x.vertex_count());
  for (int i = 0; i < x.vertex_count(); ++i) d.at(i, i) = Eisenstein(deg[i]);
  return HermitianMatrixExact(std::move(d));
}

HermitianMatrixExact build_Q(const MixedGraph& x) {
  const auto b = build_incidence(x);
  EisensteinMatrix q = b.mat * b.mat.conj_transpose();
  const EisensteinMatrix expected =
      degree_matrix(x).matrix() + build_H_gamma(x).matrix();
  if (!(q == expected)) {
    throw std::logic_error("build_Q: B B* differs from D + H; incidence construction is broken");
  }
  return HermitianMatrixExact(std::move(q));
}

HermitianMatrixNumeric to_numeric(const HermitianMatrixExact& m) {
  const int n = m.dim();
  std::vector<std::complex<double>> data(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) data[static_cast<std::size_t>(i) * n + j] = m.at(i, j).to_complex();
  }
  return {n, std::move(data)};
}

MixedGraph apply_switching(const MixedGraph& x, const std::vector<int>& gauge) {
  const int n = x.vertex_count();
  if (static_cast<int>(gauge.size()) != n) {
    throw std::invalid_argument("apply_switching: gauge must assign a power to every vertex");
  }
  // New entry for the ordered pair (u, v): conj(w^g_u) * h_uv * w^g_v.
  const auto switched_exponent = [&](int u, int v, int h_exp) {
    return ((h_exp - gauge[u] + gauge[v]) % 3 + 3) % 3;
  };
  std::set<VertexPair> digons, arcs;
  const auto classify = [&](int u, int v, int exponent) {
    if (exponent == 0) {
      digons.insert({std::min(u, v), std::max(u, v)});
    } else if (exponent == 1) {
      arcs.insert({u, v});
    } else {
      arcs.insert({v, u});
    }
  };
  for (const auto& [u, v] : x.digons()) classify(u, v, switched_exponent(u, v, 0));
  for (const auto& [u, v] : x.arcs()) classify(u, v, switched_exponent(u, v, 1));
  return {n, std::move(digons), std::move(arcs)};
}

namespace {

bool matrices_equal(const EisensteinMatrix& a, const EisensteinMatrix& b,
                    std::string* first_mismatch) {
  if (a == b) return true;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) {
        *first_mismatch = "(" + std::to_string(i) + ", " + std::to_string(j) + "): " +
                          a.at(i, j).str() + " vs " + b.at(i, j).str();
        return false;
      }
    }
  }
  *first_mismatch = "shape mismatch";
  return false;
}

}  // namespace

TheoremReport verify_incidence_products(const MixedGraph& x) {
  TheoremReport r;
  r.name = "incidence_products";

  const auto b = build_incidence(x);
  const auto bstar = b.mat.conj_transpose();

  // Unoriented graphs reduce to the classic 0/1 incidence matrix.
  const Graph gamma = underlying_graph(x);
  const auto b_underlying = build_incidence(to_mixed(gamma));
  EisensteinMatrix classic(gamma.vertex_count(), gamma.edge_count());
  {
    int j = 0;
    for (const auto& [u, v] : gamma.canonical_edges()) {
      classic.at(u, j) = Eisenstein(1);
      classic.at(v, j) = Eisenstein(1);
      ++j;
    }
  }
  std::string witness;
  const bool unoriented_ok = matrices_equal(b_underlying.mat, classic, &witness);
  if (!unoriented_ok) r.witness = "B(underlying) " + witness;

  const bool vertex_ok = [&] {
    const EisensteinMatrix lhs = b.mat * bstar;
    const EisensteinMatrix rhs = degree_matrix(x).matrix() + build_H_gamma(x).matrix();
    std::string w;
    if (matrices_equal(lhs, rhs, &w)) return true;
    if (r.witness.empty()) r.witness = "B B* vs D + H at " + w;
    return false;
  }();

  const bool edge_ok = [&] {
    const EisensteinMatrix lhs = bstar * b.mat;
    EisensteinMatrix rhs = build_H_gamma(algebraic_line_graph(x)).matrix();
    for (int i = 0; i < rhs.rows(); ++i) rhs.at(i, i) += Eisenstein(2);
    std::string w;
    if (matrices_equal(lhs, rhs, &w)) return true;
    if (r.witness.empty()) r.witness = "B* B vs 2I + H(AL) at " + w;
    return false;
  }();

  r.detail("unoriented_incidence", unoriented_ok);
  r.detail("vertex_product", vertex_ok);
  r.detail("edge_product", edge_ok);
  r.holds = unoriented_ok && vertex_ok && edge_ok;
  return r;
}

}  // namespace mixedspectra

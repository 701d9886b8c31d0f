#include "mixedspectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace mixedspectra {

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::sum_squares() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

std::vector<std::complex<double>> SpectralDecomposition::projector(int i) const {
  const auto& x = vectors.at(i);
  std::vector<std::complex<double>> p(static_cast<std::size_t>(dim) * dim);
  for (int r = 0; r < dim; ++r) {
    for (int s = 0; s < dim; ++s) p[static_cast<std::size_t>(r) * dim + s] = x[r] * std::conj(x[s]);
  }
  return p;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kPairGapWarning = 1e-6;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = a[static_cast<std::size_t>(i) * n + j];
      s += 2.0 * v * v;
    }
  }
  return std::sqrt(s);
}

// Cyclic Jacobi on a symmetric matrix (row-major). Eigenvectors, when
// requested, come back as columns of v.
void jacobi_symmetric(std::vector<double>& a, int n, double tol, std::vector<double>* v) {
  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*v)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < tol) return;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[idx(p, q)];
        if (apq == 0.0) continue;
        const double app = a[idx(p, p)];
        const double aqq = a[idx(q, q)];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e154) {
          t = 0.5 / theta;  // avoid overflow in theta^2
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[idx(p, p)] = app - t * apq;
        a[idx(q, q)] = aqq + t * apq;
        a[idx(p, q)] = 0.0;
        a[idx(q, p)] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[idx(r, p)];
          const double arq = a[idx(r, q)];
          a[idx(r, p)] = arp - s * (arq + tau * arp);
          a[idx(p, r)] = a[idx(r, p)];
          a[idx(r, q)] = arq + s * (arp - tau * arq);
          a[idx(q, r)] = a[idx(r, q)];
        }
        if (v) {
          for (int r = 0; r < n; ++r) {
            const double vrp = (*v)[idx(r, p)];
            const double vrq = (*v)[idx(r, q)];
            (*v)[idx(r, p)] = vrp - s * (vrq + tau * vrp);
            (*v)[idx(r, q)] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a, n) >= tol) {
    throw std::runtime_error("jacobi_symmetric: no convergence after " +
                             std::to_string(kMaxSweeps) + " sweeps");
  }
}

void require_hermitian(const HermitianMatrixNumeric& m, double tol) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i; j < m.dim(); ++j) {
      if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol) {
        throw std::invalid_argument("eigenvalues: input is not Hermitian");
      }
    }
  }
}

// [[Re, -Im], [Im, Re]]; symmetric when the input is Hermitian.
std::vector<double> real_embedding(const HermitianMatrixNumeric& m) {
  const int n = m.dim();
  const int nn = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(nn) * nn, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::complex<double> z = m.at(i, j);
      a[static_cast<std::size_t>(i) * nn + j] = z.real();
      a[static_cast<std::size_t>(i) * nn + (n + j)] = -z.imag();
      a[static_cast<std::size_t>(n + i) * nn + j] = z.imag();
      a[static_cast<std::size_t>(n + i) * nn + (n + j)] = z.real();
    }
  }
  return a;
}

std::vector<double> collapse_doubled(std::vector<double> doubled) {
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> out(doubled.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double gap = doubled[2 * i] - doubled[2 * i + 1];
    if (gap > kPairGapWarning) {
      std::cerr << "mixedspectra: warning: doubled-spectrum pair gap " << gap
                << " exceeds " << kPairGapWarning << "\n";
    }
    out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  return out;
}

}  // namespace

Spectrum eigenvalues(const HermitianMatrixNumeric& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("eigenvalues: tolerance must be positive");
  require_hermitian(m, 1e-10);
  const int n = m.dim();
  std::vector<double> a = real_embedding(m);
  jacobi_symmetric(a, 2 * n, tol, nullptr);
  std::vector<double> doubled(2 * n);
  for (int i = 0; i < 2 * n; ++i) doubled[i] = a[static_cast<std::size_t>(i) * 2 * n + i];
  return {collapse_doubled(std::move(doubled)), tol};
}

Spectrum eigenvalues(const HermitianMatrixExact& m, double tol) {
  return eigenvalues(to_numeric(m), tol);
}

SpectralDecomposition spectral_decomposition(const HermitianMatrixNumeric& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("spectral_decomposition: tolerance must be positive");
  require_hermitian(m, 1e-10);
  const int n = m.dim();
  const int nn = 2 * n;
  std::vector<double> a = real_embedding(m);
  std::vector<double> v;
  jacobi_symmetric(a, nn, tol, &v);

  std::vector<int> order(nn);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * nn + x] > a[static_cast<std::size_t>(y) * nn + y];
  });

  // Columns of the real eigenbasis, grouped into clusters of (numerically)
  // equal eigenvalues. Each cluster of 2k real columns spans a k-dimensional
  // complex eigenspace; Gram-Schmidt with pivoting extracts a basis.
  double scale = 0.0;
  for (int i = 0; i < nn; ++i) scale = std::max(scale, std::abs(a[static_cast<std::size_t>(i) * nn + i]));
  const double cluster_tol = std::max(1e-8, 1e-12 * scale);

  SpectralDecomposition dec;
  dec.dim = n;

  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    const auto value_at = [&](std::size_t k) {
      return a[static_cast<std::size_t>(order[k]) * nn + order[k]];
    };
    while (stop < order.size() && value_at(stop - 1) - value_at(stop) <= cluster_tol) ++stop;
    const std::size_t count = stop - start;
    if (count % 2 != 0) {
      throw std::runtime_error("spectral_decomposition: doubled eigenvalue cluster of odd size");
    }

    std::vector<std::vector<std::complex<double>>> candidates;
    for (std::size_t k = start; k < stop; ++k) {
      const int col = order[k];
      std::vector<std::complex<double>> z(n);
      for (int r = 0; r < n; ++r) {
        z[r] = {v[static_cast<std::size_t>(r) * nn + col], v[static_cast<std::size_t>(n + r) * nn + col]};
      }
      candidates.push_back(std::move(z));
    }
    const std::size_t want = count / 2;
    for (std::size_t picked = 0; picked < want; ++picked) {
      std::size_t best = 0;
      double best_norm = -1.0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        double norm = 0.0;
        for (const auto& zc : candidates[c]) norm += std::norm(zc);
        if (norm > best_norm) {
          best_norm = norm;
          best = c;
        }
      }
      auto chosen = candidates[best];
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
      const double inv = 1.0 / std::sqrt(best_norm);
      for (auto& zc : chosen) zc *= inv;
      for (auto& cand : candidates) {
        std::complex<double> proj = 0.0;
        for (int r = 0; r < n; ++r) proj += std::conj(chosen[r]) * cand[r];
        for (int r = 0; r < n; ++r) cand[r] -= proj * chosen[r];
      }
      // Rayleigh quotient recovers the eigenvalue for this vector.
      std::complex<double> rq = 0.0;
      for (int r = 0; r < n; ++r) {
        std::complex<double> mv = 0.0;
        for (int s = 0; s < n; ++s) mv += m.at(r, s) * chosen[s];
        rq += std::conj(chosen[r]) * mv;
      }
      dec.values.push_back(rq.real());
      dec.vectors.push_back(std::move(chosen));
    }
    start = stop;
  }

  std::vector<int> perm(dec.values.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int x, int y) { return dec.values[x] > dec.values[y]; });
  SpectralDecomposition sorted;
  sorted.dim = n;
  for (int i : perm) {
    sorted.values.push_back(dec.values[i]);
    sorted.vectors.push_back(std::move(dec.vectors[i]));
  }
  return sorted;
}

SpectralDecomposition spectral_decomposition(const HermitianMatrixExact& m, double tol) {
  return spectral_decomposition(to_numeric(m), tol);
}

IntPolynomial char_poly_exact(const HermitianMatrixExact& m) {
  const int n = m.dim();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));

  using RatMatrix = std::vector<EisensteinRational>;
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  RatMatrix a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[idx(i, j)] = EisensteinRational(m.at(i, j));
  }
  const auto mul = [&](const RatMatrix& x, const RatMatrix& y) {
    RatMatrix out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (x[idx(i, k)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (y[idx(k, j)].is_zero()) continue;
          out[idx(i, j)] += x[idx(i, k)] * y[idx(k, j)];
        }
      }
    }
    return out;
  };
  const auto store = [&](const EisensteinRational& c, int position) {
    if (!c.is_rational_integer()) {
      throw std::logic_error("char_poly_exact: non-integer coefficient " + c.num.str() + "/" +
                             c.den.get_str() + "; exact arithmetic is broken");
    }
    coeffs[position] = c.num.a;
  };

  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  RatMatrix am = a;  // A * M_1
  EisensteinRational c;
  for (int i = 0; i < n; ++i) c += am[idx(i, i)];
  c = -c;
  store(c, n - 1);
  for (int k = 2; k <= n; ++k) {
    RatMatrix mk = std::move(am);
    for (int i = 0; i < n; ++i) mk[idx(i, i)] += c;
    am = mul(a, mk);
    EisensteinRational t;
    for (int i = 0; i < n; ++i) t += am[idx(i, i)];
    c = (-t).divided_by(k);
    store(c, n - k);
  }
  return IntPolynomial(std::move(coeffs));
}

mpz_class det_exact(const HermitianMatrixExact& m) {
  const mpz_class c0 = char_poly_exact(m).coeffs.at(0);
  return (m.dim() % 2 == 0) ? c0 : mpz_class(-c0);
}

bool is_singular_exact(const HermitianMatrixExact& m) {
  return char_poly_exact(m).coeffs.at(0) == 0;
}

TheoremReport unit_vector_inequalities(const std::vector<std::complex<double>>& x, double tol) {
  TheoremReport r;
  r.name = "unit_vector_inequalities";
  double norm = 0.0;
  for (const auto& xi : x) norm += std::norm(xi);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("unit_vector_inequalities: vector is not unit length");
  }
  std::complex<double> total = 0.0;
  for (const auto& xi : x) total += xi;
  const double grand_sum = std::norm(total);  // sum_{i,j} conj(x_i) x_j

  double max_pair = 0.0;
  for (const auto& xj : x) {
    const double w = std::norm(xj);
    max_pair = std::max(max_pair, w * (1.0 - w));
  }
  r.detail("grand_sum", std::to_string(grand_sum));
  r.lhs = max_pair;
  r.rhs = 0.25;
  r.slack = 0.25 - max_pair;
  r.holds = grand_sum >= -tol && max_pair <= 0.25 + tol;
  return r;
}

}  // namespace mixedspectra

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mixedspectra/matrices.hpp"
#include "mixedspectra/spectra.hpp"

using namespace mixedspectra;

namespace {

const double kTwoPiThirds = 2.0 * std::numbers::pi / 3.0;

MixedGraph campaign_graph(std::uint64_t trial, int n_max) {
  std::mt19937_64 rng(trial * 0x9e3779b97f4a7c15ULL + 1);
  const int n = 1 + static_cast<int>(rng() % n_max);
  return random_mixed_graph(n, 0.3, 0.3, rng());
}

double max_spectrum_gap(const Spectrum& a, const Spectrum& b) {
  REQUIRE(a.values.size() == b.values.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("H entries follow the four-way case split") {
  const auto digon = build_H_gamma(MixedGraph(2, {{0, 1}}, {}));
  CHECK(digon.at(0, 1) == Eisenstein(1));
  CHECK(digon.at(1, 0) == Eisenstein(1));
  CHECK(digon.at(0, 0) == Eisenstein(0));

  const auto arc = build_H_gamma(MixedGraph(2, {}, {{0, 1}}));
  CHECK(arc.at(0, 1) == Eisenstein::omega());
  CHECK(arc.at(1, 0) == Eisenstein::omega_sq());

  const auto empty = build_H_gamma(MixedGraph(3, {}, {}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(empty.at(i, j).is_zero());
  }
}

TEST_CASE("hermitian invariant is enforced") {
  EisensteinMatrix bad(2, 2);
  bad.at(0, 1) = Eisenstein::omega();
  bad.at(1, 0) = Eisenstein::omega();  // should be the conjugate
  CHECK_THROWS_AS(HermitianMatrixExact(std::move(bad)), std::invalid_argument);

  EisensteinMatrix bad_diag(1, 1);
  bad_diag.at(0, 0) = Eisenstein::omega();
  CHECK_THROWS_AS(HermitianMatrixExact(std::move(bad_diag)), std::invalid_argument);
}

TEST_CASE("general-angle H matches the exact matrix at 2pi/3") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const MixedGraph x = campaign_graph(trial, 9);
    const auto exact = build_H_gamma(x);
    const auto numeric = build_H_alpha(x, kTwoPiThirds);
    for (int i = 0; i < x.vertex_count(); ++i) {
      for (int j = 0; j < x.vertex_count(); ++j) {
        CHECK(std::abs(numeric.at(i, j) - exact.at(i, j).to_complex()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("H at angle zero is the underlying adjacency matrix") {
  const MixedGraph x(3, {{0, 1}}, {{1, 2}});
  const auto h = build_H_alpha(x, 0.0);
  CHECK(h.at(0, 1) == std::complex<double>(1.0, 0.0));
  CHECK(h.at(1, 2) == std::complex<double>(1.0, 0.0));
  CHECK(h.at(2, 1) == std::complex<double>(1.0, 0.0));
  CHECK(h.at(0, 2) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("H at angle pi/2 uses i on arcs") {
  const auto h = build_H_alpha(MixedGraph(2, {}, {{0, 1}}), std::numbers::pi / 2.0);
  CHECK(std::abs(h.at(0, 1) - std::complex<double>(0.0, 1.0)) <= 1e-15);
  CHECK(std::abs(h.at(1, 0) - std::complex<double>(0.0, -1.0)) <= 1e-15);
}

TEST_CASE("incidence columns") {
  const auto digon = build_incidence(MixedGraph(2, {{0, 1}}, {}));
  CHECK(digon.mat.at(0, 0) == Eisenstein(1));
  CHECK(digon.mat.at(1, 0) == Eisenstein(1));

  const auto arc = build_incidence(MixedGraph(2, {}, {{0, 1}}));
  CHECK(arc.mat.at(0, 0) == Eisenstein::omega_sq());  // initial vertex
  CHECK(arc.mat.at(1, 0) == Eisenstein::omega());     // terminal vertex

  const auto path = build_incidence(MixedGraph(3, {{0, 1}}, {{1, 2}}));
  REQUIRE(path.mat.rows() == 3);
  REQUIRE(path.mat.cols() == 2);
  CHECK(path.mat.at(0, 0) == Eisenstein(1));
  CHECK(path.mat.at(1, 0) == Eisenstein(1));
  CHECK(path.mat.at(2, 0) == Eisenstein(0));
  CHECK(path.mat.at(0, 1) == Eisenstein(0));
  CHECK(path.mat.at(1, 1) == Eisenstein::omega_sq());
  CHECK(path.mat.at(2, 1) == Eisenstein::omega());
}

TEST_CASE("incidence columns carry exactly two unit entries") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const MixedGraph x = campaign_graph(trial, 10);
    const auto b = build_incidence(x);
    for (int j = 0; j < b.mat.cols(); ++j) {
      int nonzeros = 0;
      Eisenstein product(1);
      for (int i = 0; i < b.mat.rows(); ++i) {
        if (!b.mat.at(i, j).is_zero()) {
          ++nonzeros;
          product *= b.mat.at(i, j);
        }
      }
      CHECK(nonzeros == 2);
      CHECK(product.norm() == 1);
    }
  }
}

TEST_CASE("Q on the desk examples") {
  const auto q_digon = build_Q(MixedGraph(2, {{0, 1}}, {}));
  CHECK(q_digon.at(0, 0) == Eisenstein(1));
  CHECK(q_digon.at(0, 1) == Eisenstein(1));
  CHECK(q_digon.at(1, 1) == Eisenstein(1));

  const auto q_arc = build_Q(MixedGraph(2, {}, {{0, 1}}));
  CHECK(q_arc.at(0, 0) == Eisenstein(1));
  CHECK(q_arc.at(0, 1) == Eisenstein::omega());
  CHECK(q_arc.at(1, 0) == Eisenstein::omega_sq());
  CHECK(q_arc.at(1, 1) == Eisenstein(1));

  // all-digon triangle: Q = I + J
  const auto q_triangle = build_Q(MixedGraph(3, {{0, 1}, {1, 2}, {0, 2}}, {}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(q_triangle.at(i, j) == Eisenstein(i == j ? 2 : 1));
    }
  }
}

TEST_CASE("incidence product identities hold exactly") {
  CHECK(verify_incidence_products(MixedGraph(4, {{0, 1}, {2, 3}, {1, 2}}, {})).holds);
  CHECK(verify_incidence_products(MixedGraph(3, {}, {{0, 1}, {1, 2}, {2, 0}})).holds);
  CHECK(verify_incidence_products(random_mixed_graph(8, 0.3, 0.3, 7)).holds);
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    CHECK(verify_incidence_products(campaign_graph(trial, 10)).holds);
  }
}

TEST_CASE("switching by the identity gauge is a no-op") {
  const MixedGraph x = random_mixed_graph(6, 0.3, 0.3, 5);
  CHECK(apply_switching(x, std::vector<int>(6, 0)) == x);
}

TEST_CASE("switching a digon to an arc") {
  const MixedGraph digon(2, {{0, 1}}, {});
  const MixedGraph switched = apply_switching(digon, {0, 1});
  CHECK(switched == MixedGraph(2, {}, {{0, 1}}));
}

TEST_CASE("switching requires a total gauge") {
  CHECK_THROWS_AS(apply_switching(MixedGraph(3, {}, {}), {0, 1}), std::invalid_argument);
}

TEST_CASE("switching conjugates H by the gauge diagonal") {
  std::mt19937_64 rng(17);
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const MixedGraph x = campaign_graph(trial, 9);
    std::vector<int> gauge(x.vertex_count());
    for (auto& g : gauge) g = static_cast<int>(rng() % 3);
    const MixedGraph y = apply_switching(x, gauge);
    const auto hx = build_H_gamma(x);
    const auto hy = build_H_gamma(y);
    for (int u = 0; u < x.vertex_count(); ++u) {
      for (int v = 0; v < x.vertex_count(); ++v) {
        const Eisenstein expected =
            Eisenstein::unit(-gauge[u]) * hx.at(u, v) * Eisenstein::unit(gauge[v]);
        CHECK(hy.at(u, v) == expected);
      }
    }
  }
}

TEST_CASE("switching preserves the Q-spectrum") {
  std::mt19937_64 rng(23);
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    const MixedGraph x = campaign_graph(trial, 9);
    std::vector<int> gauge(x.vertex_count());
    for (auto& g : gauge) g = static_cast<int>(rng() % 3);
    const MixedGraph y = apply_switching(x, gauge);
    CHECK(max_spectrum_gap(eigenvalues(build_Q(x)), eigenvalues(build_Q(y))) <= 1e-9);
  }
}

TEST_CASE("seven-vertex diagonal gauge preserves the Q-spectrum") {
  // diag(1, w, 1, 1, w^2, w, w)
  const std::vector<int> gauge = {0, 1, 0, 0, 2, 1, 1};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MixedGraph x = random_mixed_graph(7, 0.35, 0.35, seed);
    const MixedGraph y = apply_switching(x, gauge);
    CHECK(max_spectrum_gap(eigenvalues(build_Q(x)), eigenvalues(build_Q(y))) <= 1e-9);
  }
}

TEST_CASE("monostore gauge switches H to the underlying adjacency matrix") {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    const MixedGraph x = campaign_graph(trial, 9);
    const auto result = is_monostore(x);
    if (!result.monostore) continue;
    const MixedGraph switched = apply_switching(x, result.gauge);
    CHECK(build_H_gamma(switched) == build_H_gamma(to_mixed(underlying_graph(x))));
  }
}

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin exact identity campaigns, oracle agreement, and bound
// tightness cases at fixed tolerances.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mixedspectra/graph_io.hpp"
#include "mixedspectra/line_graph.hpp"
#include "mixedspectra/matrices.hpp"
#include "mixedspectra/spectra.hpp"
#include "mixedspectra/theorems.hpp"
#include "oracles.hpp"

namespace ms = mixedspectra;

namespace {

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
};

ms::MixedGraph campaign_graph(std::uint64_t trial, int n_max) {
  std::mt19937_64 rng(trial * 0x9e3779b97f4a7c15ULL + 1);
  const int n = 1 + static_cast<int>(rng() % n_max);
  return ms::random_mixed_graph(n, 0.3, 0.3, rng());
}

ms::MixedGraph digon_triangle() { return {3, {{0, 1}, {1, 2}, {0, 2}}, {}}; }
ms::MixedGraph digon_c4() { return {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}}; }
ms::MixedGraph single_digon() { return {2, {{0, 1}}, {}}; }

ms::HermitianMatrixExact random_hermitian(std::uint64_t seed, int max_dim) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % max_dim);
  const auto draw = [&rng](int lo, int hi) {
    return static_cast<long>(lo + static_cast<int>(rng() % (hi - lo + 1)));
  };
  ms::EisensteinMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = ms::Eisenstein(draw(-3, 3));
    for (int j = i + 1; j < n; ++j) {
      const ms::Eisenstein e(draw(-2, 2), draw(-2, 2));
      m.at(i, j) = e;
      m.at(j, i) = e.conj();
    }
  }
  return ms::HermitianMatrixExact(std::move(m));
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool criterion_incidence_products(std::string& note) {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial, 10);
    if (!ms::verify_incidence_products(x).holds) ++failures;
    if (!ms::verify_line_graph_product(x).holds) ++failures;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "1000 graphs, " << failures << " failures, " << seconds << " s";
  note = os.str();
  return failures == 0 && seconds < 60.0;
}

bool criterion_underlying_line_graph(std::string& note) {
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    if (!ms::verify_underlying_line_graph(campaign_graph(trial, 10)).holds) ++failures;
  }
  note = "1000 graphs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_charpoly_relation(std::string& note) {
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    if (!ms::check_charpoly_line_graph_relation(campaign_graph(trial, 8)).holds) ++failures;
  }
  note = "500 graphs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_trace_identities(std::string& note) {
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    if (!ms::check_trace_identities(campaign_graph(trial, 10)).holds) ++failures;
  }
  note = "1000 graphs (exact + 1e-7 numeric), " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_singularity(std::string& note) {
  int failures = 0;
  int connected_seen = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial, 10);
    if (!ms::is_connected(x)) continue;
    ++connected_seen;
    if (!ms::check_singularity_characterization(x).holds) ++failures;
  }
  bool hand_cases = true;
  hand_cases &= ms::is_singular_exact(ms::build_Q(digon_c4()));
  hand_cases &=
      !ms::is_singular_exact(ms::build_Q({4, {{0, 1}, {1, 2}, {2, 3}}, {{3, 0}}}));
  hand_cases &= !ms::is_singular_exact(ms::build_Q({3, {}, {{0, 1}, {1, 2}, {2, 0}}}));
  note = std::to_string(connected_seen) + " connected graphs, " + std::to_string(failures) +
         " mismatches; hand cases " + (hand_cases ? "ok" : "WRONG");
  return failures == 0 && hand_cases;
}

bool criterion_bound_suite(std::string& note) {
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial, 10);
    const auto sandwich = ms::check_lambda1_degree_sandwich(x);
    if (sandwich.applicable && (!sandwich.holds || *sandwich.slack < -1e-8)) ++failures;
    const auto spread = ms::check_spread(x);
    if (spread.applicable && !spread.holds) ++failures;
    const auto digon_arc = ms::check_digon_arc_bound(x);
    if (digon_arc.applicable && !digon_arc.holds) ++failures;
  }

  // tightness witnesses
  const auto k3 = ms::eigenvalues(ms::build_Q(digon_triangle()));
  const bool k3_tight = std::abs(k3.largest() - 4.0) <= 1e-8;  // = max degree sum

  const auto digon = ms::eigenvalues(ms::build_Q(single_digon()));
  const bool digon_tight = std::abs((digon.largest() - digon.smallest()) - 2.0) <= 1e-9;

  const auto k3_bound = ms::check_digon_arc_bound(digon_triangle());
  const auto c4_bound = ms::check_digon_arc_bound(digon_c4());
  const bool regular_tight = k3_bound.holds && std::abs(*k3_bound.slack) <= 1e-8 &&
                             c4_bound.holds && std::abs(*c4_bound.slack) <= 1e-8;

  std::ostringstream os;
  os << failures << " bound failures; tightness: K3 sandwich " << (k3_tight ? "ok" : "WRONG")
     << ", digon spread " << (digon_tight ? "ok" : "WRONG") << ", regular (4l+k)/n "
     << (regular_tight ? "ok" : "WRONG");
  note = os.str();
  return failures == 0 && k3_tight && digon_tight && regular_tight;
}

bool criterion_edge_count_bounds(std::string& note) {
  int failures = 0;
  int gated = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial, 10);
    const auto r = ms::check_edge_count_bounds(x);
    if (!r.applicable) continue;
    ++gated;
    if (!r.holds || *r.slack < -1e-8) ++failures;
  }
  const auto digon = ms::check_edge_count_bounds(single_digon());
  const bool equality =
      digon.holds && std::abs(*digon.lhs - 1.0) <= 1e-8 && std::abs(*digon.rhs - 1.0) <= 1e-8;
  note = std::to_string(gated) + " digon-bearing graphs, " + std::to_string(failures) +
         " failures; single-digon equality " + (equality ? "ok" : "WRONG");
  return failures == 0 && equality;
}

bool criterion_eigensolver_oracle(std::string& note) {
  int failures = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto m = random_hermitian(seed * 1315423911ULL + 3, 6);
    const auto jacobi = ms::eigenvalues(m).values;
    const auto roots = oracles::real_roots_with_multiplicity(ms::char_poly_exact(m));
    const double gap = max_gap(jacobi, roots);
    worst = std::max(worst, gap);
    if (gap > 1e-8) ++failures;
  }
  std::ostringstream os;
  os << "200 matrices, worst multiset gap " << worst;
  note = os.str();
  return failures == 0;
}

bool criterion_monostore_transfer(std::string& note) {
  std::mt19937_64 rng(2024);
  int transfer_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const ms::MixedGraph plain = ms::random_mixed_graph(n, 0.5, 0.0, rng());
    std::vector<int> gauge(n);
    for (auto& g : gauge) g = static_cast<int>(rng() % 3);
    const ms::MixedGraph x = ms::apply_switching(plain, gauge);  // monostore by construction
    const auto h_spec = ms::eigenvalues(ms::build_H_gamma(x));
    const auto a_spec = ms::eigenvalues(ms::build_H_gamma(ms::to_mixed(ms::underlying_graph(x))));
    if (max_gap(h_spec.values, a_spec.values) > 1e-8) ++transfer_failures;
  }

  int switching_failures = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial, 9);
    std::vector<int> gauge(x.vertex_count());
    for (auto& g : gauge) g = static_cast<int>(rng() % 3);
    const auto before = ms::eigenvalues(ms::build_Q(x));
    const auto after = ms::eigenvalues(ms::build_Q(ms::apply_switching(x, gauge)));
    if (max_gap(before.values, after.values) > 1e-9) ++switching_failures;
  }
  note = "100 gauged graphs, " + std::to_string(transfer_failures) + " transfer failures; " +
         std::to_string(switching_failures) + " switching-invariance failures";
  return transfer_failures == 0 && switching_failures == 0;
}

bool criterion_projectors(std::string& note) {
  int failures = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const ms::MixedGraph x = campaign_graph(trial * 7 + 1, 9);
    const auto q = ms::build_Q(x);
    const int n = q.dim();
    if (n == 0) continue;
    const auto dec = ms::spectral_decomposition(q);

    std::vector<std::complex<double>> sum_p(static_cast<std::size_t>(n) * n);
    std::vector<std::complex<double>> recon(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      const auto p = dec.projector(i);
      for (std::size_t k = 0; k < p.size(); ++k) {
        sum_p[k] += p[k];
        recon[k] += dec.values[i] * p[k];
      }
    }
    double id_residual = 0.0, recon_residual = 0.0, q_norm = 0.0;
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        const std::size_t k = static_cast<std::size_t>(r) * n + s;
        const std::complex<double> qrs = q.at(r, s).to_complex();
        q_norm += std::norm(qrs);
        id_residual += std::norm(sum_p[k] - (r == s ? 1.0 : 0.0));
        recon_residual += std::norm(recon[k] - qrs);
      }
    }
    if (std::sqrt(id_residual) > 1e-8) ++failures;
    if (std::sqrt(recon_residual) > 1e-8 * std::max(1.0, std::sqrt(q_norm))) ++failures;
    for (const auto& vec : dec.vectors) {
      if (!ms::unit_vector_inequalities(vec).holds) ++failures;
    }
  }
  note = "100 Q matrices, " + std::to_string(failures) + " residual/inequality failures";
  return failures == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "incidence products exact suite", criterion_incidence_products},
      {2, "underlying line graph suite", criterion_underlying_line_graph},
      {3, "characteristic polynomial relation", criterion_charpoly_relation},
      {4, "trace identities", criterion_trace_identities},
      {5, "singularity characterization", criterion_singularity},
      {6, "bound suite with tightness witnesses", criterion_bound_suite},
      {7, "edge count bounds (digon-gated)", criterion_edge_count_bounds},
      {8, "eigensolver vs exact charpoly roots", criterion_eigensolver_oracle},
      {9, "monostore spectrum transfer + switching", criterion_monostore_transfer},
      {10, "projector identities and unit-vector bounds", criterion_projectors},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.label
              << (note.empty() ? "" : ": " + note) << "\n";
  }
  if (failed == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  } else {
    std::cout << "acceptance: " << failed << " criteria FAILED\n";
  }
  return failed == 0 ? 0 : 1;
}

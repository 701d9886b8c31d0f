#pragma once

#include <string>
#include <vector>

#include "mixedspectra/mixed_graph.hpp"
#include "mixedspectra/report.hpp"
#include "mixedspectra/spectra.hpp"

namespace mixedspectra {

struct Tolerances {
  double convergence = kDefaultConvergenceTol;
  double assertion = kDefaultAssertTol;
  /// Largest matrix dimension the characteristic-polynomial checkers accept.
  /// Exact char-poly work costs O(dim^4) big-integer operations; beyond the
  /// budget those checkers report inapplicable instead of running for hours.
  int exact_size_limit = 64;
};

/// Exact integer-polynomial identity relating the characteristic polynomials
/// of H(AL) and Q, in the cross-multiplied form
/// (x+2)^n charpoly_H(AL)(x) = (x+2)^m charpoly_Q(x+2).
TheoremReport check_charpoly_line_graph_relation(const MixedGraph& x,
                                                 const Tolerances& tol = {});

/// tr(Q) = 2m and tr(Q^2) = 2m + sum over connections of (deg u + deg v),
/// exactly; the numeric spectrum reproduces both sums.
TheoremReport check_trace_identities(const MixedGraph& x, const Tolerances& tol = {});

/// Q is singular iff the graph is monostore and the underlying graph is
/// bipartite. Verified per connected component.
TheoremReport check_singularity_characterization(const MixedGraph& x,
                                                 const Tolerances& tol = {});

/// max |mu_i| <= max degree, for the H-spectrum.
TheoremReport check_h_spectral_radius(const MixedGraph& x, const Tolerances& tol = {});

/// max degree <= lambda_1 <= max over connections of (deg u + deg v).
TheoremReport check_lambda1_degree_sandwich(const MixedGraph& x, const Tolerances& tol = {});

/// n/2 lambda_n + 1 <= m <= n/2 lambda_1 - 1. Asserted only on graphs with at
/// least one digon; arc-only graphs get an exploratory (inapplicable) record.
TheoremReport check_edge_count_bounds(const MixedGraph& x, const Tolerances& tol = {});

/// lambda_1 - lambda_n >= 2, and >= 4/n on graphs with a digon.
TheoremReport check_spread(const MixedGraph& x, const Tolerances& tol = {});

/// lambda_1 >= (4l + k)/n for l digons and k arcs.
TheoremReport check_digon_arc_bound(const MixedGraph& x, const Tolerances& tol = {});

/// On connected monostore graphs the H-spectrum equals the spectrum of the
/// underlying adjacency matrix, and the Q-spectrum equals that of D + A.
TheoremReport check_monostore_spectrum(const MixedGraph& x, const Tolerances& tol = {});

/// The Cassels-derived bound on nonsingular Q, evaluated exactly as stated:
/// (2m + 2 + sum(deg u + deg v))/(m-1)^2 <= (l1 + ln)^2/(n l1 ln).
/// Advisory: violations are recorded and flagged, never asserted.
TheoremReport check_cassels_bound(const MixedGraph& x, const Tolerances& tol = {});

/// Every verifier above plus the incidence-product and line-graph checks.
std::vector<TheoremReport> run_all(const MixedGraph& x, const Tolerances& tol = {});

/// Exact ring identities (as opposed to numeric inequality checks); a failure
/// is an implementation bug, not a finding.
bool is_exact_identity_check(const std::string& name);

}  // namespace mixedspectra

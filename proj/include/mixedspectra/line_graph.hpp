#pragma once

#include "mixedspectra/mixed_graph.hpp"
#include "mixedspectra/report.hpp"

namespace mixedspectra {

/// Line graph of an unoriented graph: one vertex per edge (canonical order),
/// edges between pairs sharing an endpoint.
Graph classic_line_graph(const Graph& g);

/// Algebraic line mixed graph: one vertex per edge of x (canonical order).
/// Connections between edges e_i, e_j sharing a vertex:
///   - arc e_i -> e_j when e_i, e_j are arcs and terminal(e_i) = initial(e_j);
///   - arc e_i -> e_j when e_i is a digon containing terminal(e_j);
///   - arc e_j -> e_i when e_i is a digon containing initial(e_j);
///   - digon when both are arcs with a common initial or common terminal vertex;
///   - digon when both are digons.
/// The rules are mutually exclusive for a simple mixed graph; the builder
/// asserts that and throws logic_error if two rules ever fire for one pair.
MixedGraph algebraic_line_graph(const MixedGraph& x);

/// Exact check of B* B = 2I + H(AL) under the shared canonical edge order.
TheoremReport verify_line_graph_product(const MixedGraph& x);

/// Check that the underlying graph of AL equals the classic line graph of the
/// underlying graph, identifying each edge of x with its underlying pair.
TheoremReport verify_underlying_line_graph(const MixedGraph& x);

}  // namespace mixedspectra

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mixedspectra/eisenstein.hpp"

namespace mixedspectra {

using VertexPair = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph(int n, std::set<VertexPair> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::set<VertexPair>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;

  /// Edges as a vector, sorted by (u, v) with u < v.
  std::vector<VertexPair> canonical_edges() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

private:
  int n_ = 0;
  std::set<VertexPair> edges_;  // normalized u < v
};

/// One connection of a mixed graph. Digons store u < v; arcs store (tail, head).
struct MixedEdge {
  enum class Kind { digon, arc };
  Kind kind;
  int u;
  int v;

  bool is_arc() const { return kind == Kind::arc; }
  int initial() const { return u; }   // arcs only
  int terminal() const { return v; }  // arcs only
  bool touches(int w) const { return u == w || v == w; }

  friend bool operator==(const MixedEdge& a, const MixedEdge& b) {
    return a.kind == b.kind && a.u == b.u && a.v == b.v;
  }
};

/// A mixed graph: a vertex set plus disjoint sets of digons (unordered pairs)
/// and arcs (ordered pairs). Every vertex pair carries at most one connection
/// and anti-parallel arc pairs are rejected; a digon must be declared as such.
class MixedGraph {
public:
  MixedGraph(int n, std::set<VertexPair> digons, std::set<VertexPair> arcs);

  int vertex_count() const { return n_; }
  const std::set<VertexPair>& digons() const { return digons_; }
  const std::set<VertexPair>& arcs() const { return arcs_; }

  int digon_count() const { return static_cast<int>(digons_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int edge_count() const { return digon_count() + arc_count(); }

  bool has_digon(int u, int v) const;
  bool has_arc(int u, int v) const;
  bool connected_pair(int u, int v) const;

  /// H entry for the ordered pair (u, v): 1 on digons, w for an arc u->v,
  /// w^2 for an arc v->u, 0 otherwise.
  Eisenstein h_entry(int u, int v) const;

  /// Unit exponent of h_entry for a connected pair: 0, 1 or 2.
  int h_exponent(int u, int v) const;

  /// Digons first (sorted), then arcs sorted by (min endpoint, max endpoint).
  /// This order fixes incidence columns and line-graph vertex numbering.
  std::vector<MixedEdge> canonical_edges() const;

  friend bool operator==(const MixedGraph& x, const MixedGraph& y) {
    return x.n_ == y.n_ && x.digons_ == y.digons_ && x.arcs_ == y.arcs_;
  }

private:
  int n_ = 0;
  std::set<VertexPair> digons_;  // normalized u < v
  std::set<VertexPair> arcs_;    // (tail, head)
};

Graph underlying_graph(const MixedGraph& x);

/// The mixed graph with every edge of g declared as a digon.
MixedGraph to_mixed(const Graph& g);

int degree(const MixedGraph& x, int u);
std::vector<int> degrees(const MixedGraph& x);

bool is_connected(const MixedGraph& x);
std::vector<std::vector<int>> connected_components(const MixedGraph& x);

/// Subgraph induced by `vertices` (sorted, duplicate-free), reindexed 0..k-1.
MixedGraph induced_subgraph(const MixedGraph& x, const std::vector<int>& vertices);

/// Two-coloring of g when bipartite (color per vertex), nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);

struct Walk {
  std::vector<int> vertices;  // length >= 1
};

/// Product of H entries along consecutive walk pairs; a unit of Z[w].
Eisenstein gamma_weight(const MixedGraph& x, const Walk& w);

struct MonostoreResult {
  bool monostore = false;
  /// Omega exponents of a vertex gauge, filled only when monostore. Switching
  /// by this gauge turns H into the 0/1 adjacency matrix of the underlying
  /// graph (see apply_switching).
  std::vector<int> gauge;

  explicit operator bool() const { return monostore; }
};

/// True iff every cycle has weight 1. Runs a spanning-tree potential per
/// component and checks consistency on the non-tree edges; linear time.
MonostoreResult is_monostore(const MixedGraph& x);

/// Per unordered pair independently: digon with probability p_digon, an arc
/// with probability p_arc (direction uniform), nothing otherwise.
/// Deterministic for a fixed seed.
MixedGraph random_mixed_graph(int n, double p_digon, double p_arc, std::uint64_t seed);

}  // namespace mixedspectra

#include "mixedspectra/mixed_graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace mixedspectra {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void check_vertex_range(int n, int u, int v, const char* what) {
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range(std::string(what) + " " + pair_str(u, v) +
                            " out of range for " + std::to_string(n) + " vertices");
  }
}

}  // namespace

Graph::Graph(int n, std::set<VertexPair> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    check_vertex_range(n_, u, v, "edge");
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
}

bool Graph::has_edge(int u, int v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::vector<VertexPair> Graph::canonical_edges() const {
  return {edges_.begin(), edges_.end()};
}

MixedGraph::MixedGraph(int n, std::set<VertexPair> digons, std::set<VertexPair> arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("MixedGraph: negative vertex count");
  for (const auto& [u, v] : digons) {
    if (u == v) throw std::invalid_argument("MixedGraph: self-loop digon at vertex " + std::to_string(u));
    check_vertex_range(n_, u, v, "digon");
    digons_.insert({std::min(u, v), std::max(u, v)});
  }
  for (const auto& [u, v] : arcs) {
    if (u == v) throw std::invalid_argument("MixedGraph: self-loop arc at vertex " + std::to_string(u));
    check_vertex_range(n_, u, v, "arc");
    if (digons_.count({std::min(u, v), std::max(u, v)})) {
      throw std::invalid_argument("MixedGraph: pair " + pair_str(u, v) +
                                  " declared both digon and arc");
    }
    if (arcs.count({v, u})) {
      throw std::invalid_argument("MixedGraph: anti-parallel arcs on pair " + pair_str(u, v) +
                                  "; declare a digon instead");
    }
    arcs_.insert({u, v});
  }
}

bool MixedGraph::has_digon(int u, int v) const {
  return digons_.count({std::min(u, v), std::max(u, v)}) > 0;
}

bool MixedGraph::has_arc(int u, int v) const { return arcs_.count({u, v}) > 0; }

bool MixedGraph::connected_pair(int u, int v) const {
  return has_digon(u, v) || has_arc(u, v) || has_arc(v, u);
}

Eisenstein MixedGraph::h_entry(int u, int v) const {
  if (has_digon(u, v)) return Eisenstein(1);
  if (has_arc(u, v)) return Eisenstein::omega();
  if (has_arc(v, u)) return Eisenstein::omega_sq();
  return Eisenstein(0);
}

int MixedGraph::h_exponent(int u, int v) const {
  if (has_digon(u, v)) return 0;
  if (has_arc(u, v)) return 1;
  if (has_arc(v, u)) return 2;
  throw std::domain_error("h_exponent: pair " + pair_str(u, v) + " is not connected");
}

std::vector<MixedEdge> MixedGraph::canonical_edges() const {
  std::vector<MixedEdge> out;
  out.reserve(edge_count());
  for (const auto& [u, v] : digons_) out.push_back({MixedEdge::Kind::digon, u, v});
  std::vector<VertexPair> sorted_arcs(arcs_.begin(), arcs_.end());
  std::sort(sorted_arcs.begin(), sorted_arcs.end(), [](const VertexPair& a, const VertexPair& b) {
    return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
  });
  for (const auto& [u, v] : sorted_arcs) out.push_back({MixedEdge::Kind::arc, u, v});
  return out;
}

Graph underlying_graph(const MixedGraph& x) {
  std::set<VertexPair> edges = x.digons();
  for (const auto& [u, v] : x.arcs()) edges.insert({std::min(u, v), std::max(u, v)});
  return {x.vertex_count(), std::move(edges)};
}

MixedGraph to_mixed(const Graph& g) {
  return {g.vertex_count(), g.edges(), {}};
}

int degree(const MixedGraph& x, int u) {
  if (u < 0 || u >= x.vertex_count()) {
    throw std::out_of_range("degree: vertex " + std::to_string(u) + " out of range");
  }
  return degrees(x)[u];
}

std::vector<int> degrees(const MixedGraph& x) {
  std::vector<int> deg(x.vertex_count(), 0);
  for (const auto& [u, v] : x.digons()) {
    ++deg[u];
    ++deg[v];
  }
  for (const auto& [u, v] : x.arcs()) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> connected_components(const MixedGraph& x) {
  const auto adj = underlying_graph(x).adjacency();
  const int n = x.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> queue;
    queue.push(root);
    comp[root] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      out[id].push_back(u);
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = id;
          queue.push(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const MixedGraph& x) {
  if (x.vertex_count() == 0) throw std::domain_error("is_connected: empty graph");
  return connected_components(x).size() == 1;
}

MixedGraph induced_subgraph(const MixedGraph& x, const std::vector<int>& vertices) {
  std::vector<int> index(x.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::set<VertexPair> digons, arcs;
  for (const auto& [u, v] : x.digons()) {
    if (index[u] >= 0 && index[v] >= 0) digons.insert({index[u], index[v]});
  }
  for (const auto& [u, v] : x.arcs()) {
    if (index[u] >= 0 && index[v] >= 0) arcs.insert({index[u], index[v]});
  }
  return {static_cast<int>(vertices.size()), std::move(digons), std::move(arcs)};
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const auto adj = g.adjacency();
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Eisenstein gamma_weight(const MixedGraph& x, const Walk& w) {
  if (w.vertices.empty()) throw std::invalid_argument("gamma_weight: empty walk");
  int exponent = 0;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    const int u = w.vertices[i], v = w.vertices[i + 1];
    if (u < 0 || u >= x.vertex_count() || v < 0 || v >= x.vertex_count() ||
        !x.connected_pair(u, v)) {
      throw std::invalid_argument("gamma_weight: pair " + pair_str(u, v) +
                                  " is not an edge of the underlying graph");
    }
    exponent += x.h_exponent(u, v);
  }
  return Eisenstein::unit(exponent);
}

MonostoreResult is_monostore(const MixedGraph& x) {
  const int n = x.vertex_count();
  const auto adj = underlying_graph(x).adjacency();
  // potential[v] = exponent of the tree walk weight from the component root
  std::vector<int> potential(n, -1);
  for (int root = 0; root < n; ++root) {
    if (potential[root] >= 0) continue;
    potential[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        const int via = (potential[u] + x.h_exponent(u, v)) % 3;
        if (potential[v] < 0) {
          potential[v] = via;
          queue.push(v);
        } else if (potential[v] != via) {
          return {};  // a cycle with weight != 1
        }
      }
    }
  }
  MonostoreResult result;
  result.monostore = true;
  result.gauge.resize(n);
  for (int v = 0; v < n; ++v) result.gauge[v] = (3 - potential[v]) % 3;
  return result;
}

MixedGraph random_mixed_graph(int n, double p_digon, double p_arc, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_mixed_graph: need n >= 1");
  if (p_digon < 0.0 || p_arc < 0.0 || p_digon + p_arc > 1.0) {
    throw std::invalid_argument("random_mixed_graph: probabilities must be non-negative with sum <= 1");
  }
  std::mt19937_64 rng(seed);
  // fixed-layout draws, independent of std::distribution internals
  const auto draw_unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::set<VertexPair> digons, arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double r = draw_unit();
      const bool forward = (rng() & 1) != 0;
      if (r < p_digon) {
        digons.insert({u, v});
      } else if (r < p_digon + p_arc) {
        arcs.insert(forward ? VertexPair{u, v} : VertexPair{v, u});
      }
    }
  }
  return {n, std::move(digons), std::move(arcs)};
}

}  // namespace mixedspectra

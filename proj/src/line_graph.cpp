#include "mixedspectra/line_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "mixedspectra/matrices.hpp"

namespace mixedspectra {

Graph classic_line_graph(const Graph& g) {
  const auto edges = g.canonical_edges();
  const int m = static_cast<int>(edges.size());
  std::set<VertexPair> line_edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) line_edges.insert({i, j});
    }
  }
  return {m, std::move(line_edges)};
}

namespace {

struct Connection {
  enum class Type { digon, arc_ij, arc_ji };
  Type type;
  const char* rule;
};

// All rules that fire for the edge pair (e_i, e_j); a valid mixed graph
// admits at most one.
std::vector<Connection> matching_rules(const MixedEdge& ei, const MixedEdge& ej) {
  std::vector<Connection> out;
  if (ei.is_arc() && ej.is_arc()) {
    if (ei.terminal() == ej.initial()) out.push_back({Connection::Type::arc_ij, "arc chain i->j"});
    if (ej.terminal() == ei.initial()) out.push_back({Connection::Type::arc_ji, "arc chain j->i"});
    if (ei.initial() == ej.initial() || ei.terminal() == ej.terminal()) {
      out.push_back({Connection::Type::digon, "arcs with common initial or terminal"});
    }
  } else if (!ei.is_arc() && ej.is_arc()) {
    if (ei.touches(ej.terminal())) out.push_back({Connection::Type::arc_ij, "digon to arc terminal"});
    if (ei.touches(ej.initial())) out.push_back({Connection::Type::arc_ji, "arc initial to digon"});
  } else if (ei.is_arc() && !ej.is_arc()) {
    if (ej.touches(ei.terminal())) out.push_back({Connection::Type::arc_ji, "digon to arc terminal"});
    if (ej.touches(ei.initial())) out.push_back({Connection::Type::arc_ij, "arc initial to digon"});
  } else {
    if (ei.touches(ej.u) || ei.touches(ej.v)) out.push_back({Connection::Type::digon, "digons sharing a vertex"});
  }
  return out;
}

}  // namespace

MixedGraph algebraic_line_graph(const MixedGraph& x) {
  const auto edges = x.canonical_edges();
  const int m = static_cast<int>(edges.size());
  std::set<VertexPair> digons, arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto rules = matching_rules(edges[i], edges[j]);
      if (rules.size() > 1) {
        throw std::logic_error("algebraic_line_graph: rules '" + std::string(rules[0].rule) +
                               "' and '" + rules[1].rule + "' both fire for edges " +
                               std::to_string(i) + ", " + std::to_string(j));
      }
      if (rules.empty()) continue;
      switch (rules[0].type) {
        case Connection::Type::digon: digons.insert({i, j}); break;
        case Connection::Type::arc_ij: arcs.insert({i, j}); break;
        case Connection::Type::arc_ji: arcs.insert({j, i}); break;
      }
    }
  }
  return {m, std::move(digons), std::move(arcs)};
}

TheoremReport verify_line_graph_product(const MixedGraph& x) {
  TheoremReport r;
  r.name = "line_graph_product";
  const auto b = build_incidence(x);
  const EisensteinMatrix lhs = b.mat.conj_transpose() * b.mat;
  EisensteinMatrix rhs = build_H_gamma(algebraic_line_graph(x)).matrix();
  for (int i = 0; i < rhs.rows(); ++i) rhs.at(i, i) += Eisenstein(2);
  r.detail("edges", std::to_string(b.mat.cols()));
  if (lhs == rhs) {
    r.holds = true;
    return r;
  }
  for (int i = 0; i < lhs.rows() && r.witness.empty(); ++i) {
    for (int j = 0; j < lhs.cols(); ++j) {
      if (!(lhs.at(i, j) == rhs.at(i, j))) {
        r.witness = "B* B vs 2I + H(AL) at (" + std::to_string(i) + ", " + std::to_string(j) +
                    "): " + lhs.at(i, j).str() + " vs " + rhs.at(i, j).str();
        break;
      }
    }
  }
  return r;
}

TheoremReport verify_underlying_line_graph(const MixedGraph& x) {
  TheoremReport r;
  r.name = "underlying_line_graph";
  const Graph gamma = underlying_graph(x);
  const Graph expected = classic_line_graph(gamma);
  const Graph actual = underlying_graph(algebraic_line_graph(x));

  // Vertex i of AL is the i-th edge of x; vertex of the classic line graph is
  // the index of the same pair in the canonical edge order of the underlying
  // graph. Compare through that bijection.
  std::map<VertexPair, int> pair_index;
  {
    int j = 0;
    for (const auto& e : gamma.canonical_edges()) pair_index[e] = j++;
  }
  const auto edges = x.canonical_edges();
  std::vector<int> relabel(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    relabel[i] = pair_index.at({std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)});
  }
  std::set<VertexPair> mapped;
  for (const auto& [a, b] : actual.edges()) {
    mapped.insert({std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b])});
  }
  r.detail("line_graph_vertices", std::to_string(expected.vertex_count()));
  if (actual.vertex_count() == expected.vertex_count() && mapped == expected.edges()) {
    r.holds = true;
    return r;
  }
  r.witness = "underlying(AL) has " + std::to_string(actual.edge_count()) +
              " edges vs " + std::to_string(expected.edge_count()) + " in the classic line graph";
  return r;
}

}  // namespace mixedspectra

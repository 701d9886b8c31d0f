#include "mixedspectra/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mixedspectra {

namespace {

std::string trimmed(std::string s) {
  const auto cut = s.find('#');
  if (cut != std::string::npos) s.erase(cut);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& message) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + message);
}

int parse_label(const std::string& token, int n, const std::string& origin, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(origin, line, "expected a vertex label, got '" + token + "'");
  }
  if (used != token.size()) fail(origin, line, "trailing characters in label '" + token + "'");
  if (value < 0 || value >= n) {
    fail(origin, line, "vertex " + token + " out of range [0, " + std::to_string(n) + ")");
  }
  return value;
}

}  // namespace

MixedGraph parse_mixed_graph(std::istream& in, const std::string& origin) {
  int n = -1;
  std::set<VertexPair> digons, arcs;
  std::string raw;
  int line_no = 0;
  const auto pair_name = [](int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    if (n < 0) {
      std::string keyword;
      tokens >> keyword;
      if (keyword != "vertices") fail(origin, line_no, "expected 'vertices N' header");
      if (!(tokens >> n) || n < 1) fail(origin, line_no, "vertex count must be a positive integer");
      std::string extra;
      if (tokens >> extra) fail(origin, line_no, "unexpected token '" + extra + "' after header");
      continue;
    }
    std::string lhs, op, rhs, extra;
    tokens >> lhs >> op >> rhs;
    if (op.empty() || rhs.empty() || (tokens >> extra)) {
      fail(origin, line_no, "expected 'u -- v' or 'u -> v'");
    }
    const int u = parse_label(lhs, n, origin, line_no);
    const int v = parse_label(rhs, n, origin, line_no);
    if (u == v) fail(origin, line_no, "self-loop at vertex " + std::to_string(u));
    const VertexPair key{std::min(u, v), std::max(u, v)};
    const bool seen = digons.count(key) || arcs.count({u, v}) || arcs.count({v, u});
    if (op == "--") {
      if (seen) fail(origin, line_no, "pair " + pair_name(u, v) + " already declared");
      digons.insert(key);
    } else if (op == "->") {
      if (seen) {
        const std::string what = arcs.count({v, u}) ? "anti-parallel arcs on pair "
                                                    : "pair already declared: ";
        fail(origin, line_no, what + pair_name(u, v));
      }
      arcs.insert({u, v});
    } else {
      fail(origin, line_no, "unknown connector '" + op + "' (use -- or ->)");
    }
  }
  if (n < 0) throw ParseError(origin + ": missing 'vertices N' header");
  return {n, std::move(digons), std::move(arcs)};
}

MixedGraph load_mixed_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_mixed_graph(in, path);
}

std::string emit_mixed_graph(const MixedGraph& x) {
  std::ostringstream out;
  out << "vertices " << x.vertex_count() << "\n";
  for (const auto& e : x.canonical_edges()) {
    out << e.u << (e.is_arc() ? " -> " : " -- ") << e.v << "\n";
  }
  return out.str();
}

void save_mixed_graph(const MixedGraph& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << emit_mixed_graph(x);
}

}  // namespace mixedspectra

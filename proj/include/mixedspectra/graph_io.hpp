#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mixedspectra/mixed_graph.hpp"

namespace mixedspectra {

/// Input problem in a graph file: bad syntax, bad labels, or a violated
/// graph invariant. The message carries "<origin>:<line>".
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text format:
///   vertices N
///   u -- v        digon
///   u -> v        arc
/// '#' starts a comment; blank lines are ignored; labels are integers < N.
MixedGraph parse_mixed_graph(std::istream& in, const std::string& origin = "<stream>");

MixedGraph load_mixed_graph(const std::string& path);

/// Canonical emission: header, digons sorted, then arcs sorted. Loading the
/// result reproduces the graph exactly.
std::string emit_mixed_graph(const MixedGraph& x);

void save_mixed_graph(const MixedGraph& x, const std::string& path);

}  // namespace mixedspectra

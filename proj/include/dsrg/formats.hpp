#pragma once

#include <iosfwd>
#include <string>

#include "dsrg/digraph.hpp"

namespace dsrg {

enum class GraphFormat { Matrix, Edges, Json, Dot };

GraphFormat parse_format(const std::string& name);  // "matrix" | "edges" | "json" | "dot"

// matrix: n lines of n space-separated 0/1 entries.
// edges:  "# n=<n>" header, then one "u v" line per arc.
// json:   {"n": .., "arcs": [[u,v], ..], "labels": [..], "tuple": {..}?}.
// dot:    digraph with one node per vertex and one edge per arc (write-only).
void write_graph(std::ostream& os, const Digraph& d, GraphFormat fmt);
std::string graph_to_string(const Digraph& d, GraphFormat fmt);

// Parse failures throw PreconditionError.  Dot input is not supported.
Digraph read_graph(std::istream& is, GraphFormat fmt);
Digraph read_graph_auto(std::istream& is);  // sniffs matrix / edges / json

// FNV-1a over the adjacency bits, rendered as 16 hex digits; stable across
// runs because vertex order is canonical.
std::string adjacency_hash(const Digraph& d);

}  // namespace dsrg

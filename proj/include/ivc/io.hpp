#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"
#include "ivc/product.hpp"

namespace ivc {

// Edge-list format: a header line "n m", then m lines "u v" with 0-based
// vertex ids. Lines starting with '#' and blank lines are ignored. Writing
// emits the canonical edge order, so read -> write is byte-exact on canonical
// input.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Coloring format: header "t=<K>", then one line "edge_id u v color" per edge.
struct ColoringFile {
    int t = 0;
    EdgeColoring coloring;
};

/// Checks ids and endpoints against g. Throws ParseError.
ColoringFile read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c, int t);

// Provenance sidecar: one line "edge_id origin i p j q" per product edge,
// where (i, p) and (j, q) are the coordinates of the edge's endpoints.
void write_provenance(std::ostream& out, const ProductGraph& p);

struct ProvenanceLine {
    EdgeId edge;
    EdgeOrigin origin;
    Coord a;
    Coord b;
};

std::vector<ProvenanceLine> read_provenance(std::istream& in);

/// Graphviz DOT with `label=<color>` and a 12-entry palette cycling by color.
void write_dot(std::ostream& out, const Graph& g, const EdgeColoring& c);

Graph load_graph(const std::filesystem::path& path);
ColoringFile load_coloring(const std::filesystem::path& path, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g);
void save_coloring(const std::filesystem::path& path, const Graph& g, const EdgeColoring& c, int t);

}  // namespace ivc

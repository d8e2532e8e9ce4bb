#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

enum class ProductKind { cartesian, tensor, strong_tensor, strong, lexicographic };

/// Which coordinates an edge of a product moves in.
enum class EdgeOrigin {
    g_layer,  // left coordinate differs, right equal
    h_layer,  // left equal, right differs
    cross,    // both differ
};

std::string_view to_string(ProductKind kind);
std::string_view to_string(EdgeOrigin origin);
/// Accepts the CLI tokens: cartesian, tensor, strong-tensor, strong, lex.
std::optional<ProductKind> parse_product_kind(std::string_view token);
std::optional<EdgeOrigin> parse_edge_origin(std::string_view token);

struct Coord {
    int i;  // left factor vertex
    int j;  // right factor vertex

    friend bool operator==(const Coord&, const Coord&) = default;
};

/// A product graph with provenance. Vertex (i, j) has index i * right_n + j.
struct ProductGraph {
    Graph graph;
    ProductKind kind = ProductKind::cartesian;
    int left_n = 0;
    int right_n = 0;
    std::vector<EdgeOrigin> edge_origin;

    /// Throws OutOfRange.
    Coord coord_of(Vertex x) const;
    Vertex vertex_of(Coord c) const;
};

/// Throws EmptyFactor when either factor has no vertices.
ProductGraph product(ProductKind kind, const Graph& left, const Graph& right);

}  // namespace ivc

#include "ivc/product.hpp"

#include <string>

#include "ivc/error.hpp"

namespace ivc {

std::string_view to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::tensor: return "tensor";
        case ProductKind::strong_tensor: return "strong-tensor";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lex";
    }
    return "?";
}

std::string_view to_string(EdgeOrigin origin) {
    switch (origin) {
        case EdgeOrigin::g_layer: return "G_layer";
        case EdgeOrigin::h_layer: return "H_layer";
        case EdgeOrigin::cross: return "cross";
    }
    return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view token) {
    if (token == "cartesian") return ProductKind::cartesian;
    if (token == "tensor") return ProductKind::tensor;
    if (token == "strong-tensor") return ProductKind::strong_tensor;
    if (token == "strong") return ProductKind::strong;
    if (token == "lex") return ProductKind::lexicographic;
    return std::nullopt;
}

std::optional<EdgeOrigin> parse_edge_origin(std::string_view token) {
    if (token == "G_layer") return EdgeOrigin::g_layer;
    if (token == "H_layer") return EdgeOrigin::h_layer;
    if (token == "cross") return EdgeOrigin::cross;
    return std::nullopt;
}

Coord ProductGraph::coord_of(Vertex x) const {
    if (x < 0 || x >= left_n * right_n) {
        throw Error(ErrorCode::OutOfRange, "product vertex " + std::to_string(x));
    }
    return Coord{x / right_n, x % right_n};
}

Vertex ProductGraph::vertex_of(Coord c) const {
    if (c.i < 0 || c.i >= left_n || c.j < 0 || c.j >= right_n) {
        throw Error(ErrorCode::OutOfRange,
                    "coordinate (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    }
    return c.i * right_n + c.j;
}

namespace {

bool has_edge(ProductKind kind, bool g_adj, bool g_eq, bool h_adj, bool h_eq) {
    switch (kind) {
        case ProductKind::cartesian: return (g_eq && h_adj) || (h_eq && g_adj);
        case ProductKind::tensor: return g_adj && h_adj;
        case ProductKind::strong_tensor: return (g_adj && h_adj) || (h_eq && g_adj);
        case ProductKind::strong: return (g_adj && h_adj) || (g_eq && h_adj) || (h_eq && g_adj);
        case ProductKind::lexicographic: return g_adj || (g_eq && h_adj);
    }
    return false;
}

}  // namespace

ProductGraph product(ProductKind kind, const Graph& left, const Graph& right) {
    if (left.num_vertices() == 0 || right.num_vertices() == 0) {
        throw Error(ErrorCode::EmptyFactor, "product factor with no vertices");
    }
    const int n = left.num_vertices();
    const int m = right.num_vertices();

    // Only pairs whose left coordinates are equal or adjacent can be joined.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < m; ++p) {
            // (i, p) to (j, q) with j >= i; j == i needs q > p.
            auto consider = [&](int j, int q) {
                bool g_eq = i == j;
                bool g_adj = !g_eq && left.adjacent(i, j);
                bool h_eq = p == q;
                bool h_adj = !h_eq && right.adjacent(p, q);
                if (has_edge(kind, g_adj, g_eq, h_adj, h_eq)) {
                    pairs.emplace_back(i * m + p, j * m + q);
                }
            };
            for (int q = p + 1; q < m; ++q) consider(i, q);
            for (int j : left.neighbors(i)) {
                if (j <= i) continue;
                for (int q = 0; q < m; ++q) consider(j, q);
            }
        }
    }

    ProductGraph result;
    result.graph = Graph(n * m, pairs);
    result.kind = kind;
    result.left_n = n;
    result.right_n = m;
    result.edge_origin.reserve(pairs.size());
    for (const auto& e : result.graph.edges()) {
        Coord a = result.coord_of(e.u);
        Coord b = result.coord_of(e.v);
        if (a.i == b.i) {
            result.edge_origin.push_back(EdgeOrigin::h_layer);
        } else if (a.j == b.j) {
            result.edge_origin.push_back(EdgeOrigin::g_layer);
        } else {
            result.edge_origin.push_back(EdgeOrigin::cross);
        }
    }
    return result;
}

}  // namespace ivc

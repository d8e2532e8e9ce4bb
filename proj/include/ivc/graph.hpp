#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ivc {

using Vertex = int;
using EdgeId = int;
using Color = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically (u < v) in sorted order; an edge's id is its
/// position in that list, so colorings can be plain arrays indexed by id.
class Graph {
public:
    Graph() = default;

    /// Throws LoopEdge, DuplicateEdge or VertexOutOfRange.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Sorted neighbor list of v.
    std::span<const Vertex> neighbors(Vertex v) const;
    /// Edge ids incident to v, aligned with neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<EdgeId> inc_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree = 0;
    bool is_regular = true;
    std::optional<int> regularity;
};

DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    /// side[v] in {0,1}; only meaningful when bipartite.
    std::vector<int> side;
};

Bipartition is_bipartite(const Graph& g);

}  // namespace ivc

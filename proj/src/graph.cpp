#include "ivc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ivc/error.hpp"

namespace ivc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::EmptyFactor: return "EmptyFactor";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NotClass1: return "NotClass1";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::BadDims: return "BadDims";
        case ErrorCode::MissingParameter: return "MissingParameter";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    }
    return "Unknown";
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    if (n < 0) {
        throw Error(ErrorCode::BadParameter, "negative vertex count");
    }
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                            std::to_string(n));
        }
        if (a == b) {
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
        }
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw Error(ErrorCode::DuplicateEdge,
                    "(" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(offsets_.back());
    inc_.resize(offsets_.back());

    // Edges are sorted by (u, v), so filling in edge order leaves each
    // neighbor list sorted for the smaller endpoint; sort the rest after.
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < num_edges(); ++id) {
        const auto& e = edges_[id];
        adj_[fill[e.u]] = e.v;
        inc_[fill[e.u]++] = id;
        adj_[fill[e.v]] = e.u;
        inc_[fill[e.v]++] = id;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<Vertex, EdgeId>> row;
        for (auto k = offsets_[v]; k < offsets_[v + 1]; ++k) row.emplace_back(adj_[k], inc_[k]);
        std::sort(row.begin(), row.end());
        for (std::size_t k = 0; k < row.size(); ++k) {
            adj_[offsets_[v] + k] = row[k].first;
            inc_[offsets_[v] + k] = row[k].second;
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
    check_vertex(v);
    return {inc_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        p.degrees[v] = g.degree(v);
        p.max_degree = std::max(p.max_degree, p.degrees[v]);
    }
    p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                               [&](int d) { return d == p.degrees.front(); });
    if (p.is_regular) p.regularity = p.degrees.empty() ? 0 : p.degrees.front();
    return p;
}

Bipartition is_bipartite(const Graph& g) {
    Bipartition result;
    result.side.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (result.side[s] != -1) continue;
        result.side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (result.side[w] == -1) {
                    result.side[w] = 1 - result.side[v];
                    q.push(w);
                } else if (result.side[w] == result.side[v]) {
                    result.side.clear();
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

}  // namespace ivc

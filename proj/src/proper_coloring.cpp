#include "ivc/proper_coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "ivc/error.hpp"

namespace ivc {

namespace {

// Kuhn's augmenting-path matching restricted to edges still marked alive.
class ResidualMatcher {
public:
    ResidualMatcher(const Graph& g, const std::vector<int>& side, const std::vector<bool>& alive)
        : g_(g), side_(side), alive_(alive),
          match_edge_(static_cast<std::size_t>(g.num_vertices()), -1) {}

    /// Returns, per left vertex, the matched edge id (or -1).
    std::vector<EdgeId> run() {
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (side_[v] != 0) continue;
            visited_.assign(static_cast<std::size_t>(g_.num_vertices()), false);
            augment(v);
        }
        std::vector<EdgeId> out;
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            if (side_[v] == 0) out.push_back(match_edge_[v]);
        return out;
    }

private:
    bool augment(Vertex left) {
        auto nb = g_.neighbors(left);
        auto inc = g_.incident_edges(left);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            Vertex right = nb[k];
            if (!alive_[inc[k]] || visited_[right]) continue;
            visited_[right] = true;
            EdgeId held = match_edge_[right];
            Vertex other = held < 0 ? -1 : g_.edge(held).u + g_.edge(held).v - right;
            if (held < 0 || augment(other)) {
                match_edge_[right] = inc[k];
                match_edge_[left] = inc[k];
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const std::vector<int>& side_;
    const std::vector<bool>& alive_;
    std::vector<EdgeId> match_edge_;
    std::vector<bool> visited_;
};

}  // namespace

EdgeColoring bipartite_regular_coloring(const Graph& g) {
    auto profile = degree_profile(g);
    if (!profile.is_regular) throw Error(ErrorCode::NotRegular, "graph is not regular");
    const int r = *profile.regularity;
    if (r == 0) throw Error(ErrorCode::BadParameter, "regular degree must be at least 1");
    auto parts = is_bipartite(g);
    if (!parts.bipartite) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");

    EdgeColoring coloring(static_cast<std::size_t>(g.num_edges()));
    std::vector<bool> alive(static_cast<std::size_t>(g.num_edges()), true);
    for (Color k = 1; k <= r; ++k) {
        auto matching = ResidualMatcher(g, parts.side, alive).run();
        for (EdgeId e : matching) {
            // A regular bipartite residual always has a perfect matching.
            if (e < 0) throw Error(ErrorCode::ConstructionFailed, "perfect matching not found");
            coloring[e] = k;
            alive[e] = false;
        }
    }
    return coloring;
}

namespace {

class ProperSearch {
public:
    ProperSearch(const Graph& g, int k, std::uint64_t& nodes, std::uint64_t budget)
        : g_(g), k_(k), nodes_(nodes), budget_(budget),
          used_(static_cast<std::size_t>(g.num_vertices()), 0),
          remaining_(static_cast<std::size_t>(g.num_vertices()), 0),
          colors_(static_cast<std::size_t>(g.num_edges()), 0) {
        order_.resize(static_cast<std::size_t>(g.num_edges()));
        std::iota(order_.begin(), order_.end(), 0);
        auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
        for (Vertex v = 0; v < g.num_vertices(); ++v) remaining_[v] = g.degree(v);
    }

    bool solve() { return extend(0, 0); }
    EdgeColoring witness() const { return EdgeColoring(colors_); }

private:
    // Every color class is a matching: color c can still take at most
    // floor(free_c / 2) edges, where free_c counts vertices missing c that
    // still have uncolored edges.
    bool capacity_ok(int left) const {
        long capacity = 0;
        for (Color c = 1; c <= k_ && capacity < left; ++c) {
            std::uint64_t bit = std::uint64_t{1} << (c - 1);
            int free_count = 0;
            for (Vertex v = 0; v < g_.num_vertices(); ++v)
                if (remaining_[v] > 0 && !(used_[v] & bit)) ++free_count;
            capacity += free_count / 2;
        }
        return capacity >= left;
    }

    bool extend(std::size_t pos, int max_used) {
        if (pos == order_.size()) return true;
        if (!capacity_ok(static_cast<int>(order_.size() - pos))) return false;
        EdgeId e = order_[pos];
        Vertex u = g_.edge(e).u;
        Vertex v = g_.edge(e).v;
        std::uint64_t blocked = used_[u] | used_[v];
        int limit = std::min(k_, max_used + 1);
        for (Color c = 1; c <= limit; ++c) {
            std::uint64_t bit = std::uint64_t{1} << (c - 1);
            if (blocked & bit) continue;
            if (++nodes_ > budget_) {
                throw Error(ErrorCode::BudgetExceeded,
                            "chromatic index search exceeded " + std::to_string(budget_) + " nodes");
            }
            colors_[e] = c;
            used_[u] |= bit;
            used_[v] |= bit;
            --remaining_[u];
            --remaining_[v];
            if (extend(pos + 1, std::max(max_used, c))) return true;
            ++remaining_[u];
            ++remaining_[v];
            used_[u] &= ~bit;
            used_[v] &= ~bit;
            colors_[e] = 0;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<EdgeId> order_;
    std::vector<std::uint64_t> used_;
    std::vector<int> remaining_;
    std::vector<Color> colors_;
};

}  // namespace

ChromaticIndexResult exact_chromatic_index(const Graph& g, std::uint64_t budget) {
    ChromaticIndexResult result;
    const int delta = degree_profile(g).max_degree;
    if (g.num_edges() == 0) {
        result.class1 = true;
        return result;
    }
    if (delta + 1 > 64) throw Error(ErrorCode::BadParameter, "maximum degree above 63");
    for (int k = delta; k <= delta + 1; ++k) {
        ProperSearch search(g, k, result.nodes, budget);
        if (search.solve()) {
            result.chi_prime = k;
            result.witness = search.witness();
            result.class1 = k == delta;
            return result;
        }
    }
    // Vizing: unreachable for simple graphs.
    throw Error(ErrorCode::ConstructionFailed, "no proper (Delta+1)-edge-coloring found");
}

bool regular_membership(const Graph& g, std::uint64_t budget) {
    if (!degree_profile(g).is_regular) throw Error(ErrorCode::NotRegular, "graph is not regular");
    // An interval coloring needs at least one colored edge.
    if (g.num_edges() == 0) return false;
    return exact_chromatic_index(g, budget).class1;
}

}  // namespace ivc

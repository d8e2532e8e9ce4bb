#include "naive_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivc::testing {

bool naive_is_interval(const Graph& g, const std::vector<Color>& colors, int t) {
    if (t < 1 || colors.size() != static_cast<std::size_t>(g.num_edges())) return false;
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (colors[a] < 1 || colors[a] > t) return false;
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            bool share = edges[a].u == edges[b].u || edges[a].u == edges[b].v ||
                         edges[a].v == edges[b].u || edges[a].v == edges[b].v;
            if (share && colors[a] == colors[b]) return false;
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int lo = t + 1, hi = 0;
        for (std::size_t a = 0; a < edges.size(); ++a) {
            if (edges[a].u == v || edges[a].v == v) {
                lo = std::min(lo, colors[a]);
                hi = std::max(hi, colors[a]);
            }
        }
        for (int c = lo; c <= hi; ++c) {
            bool present = false;
            for (std::size_t a = 0; a < edges.size(); ++a)
                if ((edges[a].u == v || edges[a].v == v) && colors[a] == c) present = true;
            if (!present) return false;
        }
    }
    for (int c = 1; c <= t; ++c)
        if (std::find(colors.begin(), colors.end(), c) == colors.end()) return false;
    return true;
}

namespace {

struct Enumerator {
    const Graph& g;
    int t;
    std::uint64_t budget;
    std::uint64_t stop_after;
    std::uint64_t nodes = 0;
    std::vector<Color> colors;
    std::vector<int> uncolored;
    NaiveCount result;

    bool vertex_ok(Vertex v) const {
        if (uncolored[v] != 0) return true;
        int lo = t + 1, hi = 0;
        for (EdgeId e : g.incident_edges(v)) {
            lo = std::min(lo, colors[e]);
            hi = std::max(hi, colors[e]);
        }
        return hi - lo + 1 == g.degree(v);
    }

    bool clashes(EdgeId e, Color c) const {
        const Edge& ed = g.edge(e);
        for (Vertex v : {ed.u, ed.v})
            for (EdgeId f : g.incident_edges(v))
                if (f != e && colors[f] == c) return true;
        return false;
    }

    void run(EdgeId e) {
        if (result.count >= stop_after) return;
        if (e < 0) {
            for (int c = 1; c <= t; ++c)
                if (std::find(colors.begin(), colors.end(), c) == colors.end()) return;
            if (result.count++ == 0) result.first = colors;
            return;
        }
        const Edge& ed = g.edge(e);
        for (Color c = 1; c <= t; ++c) {
            if (++nodes > budget) throw std::runtime_error("naive enumeration budget exceeded");
            if (clashes(e, c)) continue;
            colors[e] = c;
            --uncolored[ed.u];
            --uncolored[ed.v];
            if (vertex_ok(ed.u) && vertex_ok(ed.v)) run(e - 1);
            ++uncolored[ed.u];
            ++uncolored[ed.v];
            colors[e] = 0;
            if (result.count >= stop_after) return;
        }
    }
};

}  // namespace

NaiveCount naive_enumerate(const Graph& g, int t, std::uint64_t budget, std::uint64_t stop_after) {
    Enumerator en{g, t, budget, stop_after};
    en.colors.assign(static_cast<std::size_t>(g.num_edges()), 0);
    en.uncolored.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) en.uncolored[v] = g.degree(v);
    if (g.num_edges() == 0 || t < 1) return en.result;
    en.run(g.num_edges() - 1);
    return en.result;
}

NaiveOracle naive_oracle(const Graph& g, int max_t, std::uint64_t budget_per_t) {
    NaiveOracle out;
    for (int t = 1; t <= max_t; ++t) {
        if (naive_enumerate(g, t, budget_per_t).count > 0) out.feasible.push_back(t);
    }
    out.member = !out.feasible.empty();
    if (out.member) {
        out.w = out.feasible.front();
        out.W = out.feasible.back();
    }
    return out;
}

}  // namespace ivc::testing

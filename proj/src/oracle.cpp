#include "ivc/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>

#include "ivc/error.hpp"
#include "ivc/interval.hpp"

namespace ivc {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

std::string_view to_string(CrossValidation::Status s) {
    switch (s) {
        case CrossValidation::Status::consistent: return "consistent";
        case CrossValidation::Status::partial: return "partial";
        case CrossValidation::Status::contradiction: return "contradiction";
    }
    return "?";
}

int search_ceiling(const Graph& g) {
    const int n = g.num_vertices();
    const int delta = degree_profile(g).max_degree;
    return std::max(delta, n >= 3 ? 2 * n - 4 : 2 * n - 3);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr int kMaxT = 64;

struct BudgetExhausted {};

std::vector<EdgeId> bfs_edge_order(const Graph& g) {
    std::vector<EdgeId> order;
    std::vector<bool> seen_vertex(static_cast<std::size_t>(g.num_vertices()), false);
    std::vector<bool> seen_edge(static_cast<std::size_t>(g.num_edges()), false);
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (seen_vertex[root]) continue;
        seen_vertex[root] = true;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            auto nb = g.neighbors(v);
            auto inc = g.incident_edges(v);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                if (!seen_edge[inc[k]]) {
                    seen_edge[inc[k]] = true;
                    order.push_back(inc[k]);
                }
                if (!seen_vertex[nb[k]]) {
                    seen_vertex[nb[k]] = true;
                    q.push(nb[k]);
                }
            }
        }
    }
    return order;
}

/// dist[e][f]: bound on |c(e) - c(f)| in any interval coloring, from
/// shortest paths in the line graph where passing vertex v costs deg(v) - 1.
std::vector<std::vector<int>> color_distance(const Graph& g) {
    const auto m = static_cast<std::size_t>(g.num_edges());
    std::vector<std::vector<int>> d(m, std::vector<int>(m, kInf));
    for (std::size_t e = 0; e < m; ++e) d[e][e] = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto inc = g.incident_edges(v);
        const int w = g.degree(v) - 1;
        for (EdgeId a : inc)
            for (EdgeId b : inc)
                if (a != b) d[a][b] = std::min(d[a][b], w);
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (d[i][k] >= kInf) continue;
            for (std::size_t j = 0; j < m; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    return d;
}

class IntervalSearch {
public:
    IntervalSearch(const Graph& g, int t, std::uint64_t budget,
                   const std::vector<EdgeId>& order, const std::vector<std::vector<int>>& dist)
        : g_(g), t_(t), budget_(budget), order_(order), dist_(dist) {
        const auto n = static_cast<std::size_t>(g.num_vertices());
        const auto m = static_cast<std::size_t>(g.num_edges());
        colors_.assign(m, 0);
        range_lo_.assign(m, 1);
        range_hi_.assign(m, t);
        used_.assign(n, 0);
        lo_.assign(n, kInf);
        hi_.assign(n, 0);
        color_count_.assign(static_cast<std::size_t>(t) + 1, 0);
    }

    bool solve() { return extend(0); }
    std::uint64_t nodes() const { return nodes_; }
    EdgeColoring witness() const { return EdgeColoring(colors_); }

private:
    static std::uint64_t bit(Color c) { return std::uint64_t{1} << (c - 1); }

    std::uint64_t range_mask(EdgeId f) const {
        std::uint64_t mask = 0;
        for (Color c = range_lo_[f]; c <= range_hi_[f]; ++c) mask |= bit(c);
        return mask;
    }

    // Adding c at v must leave a degree-length window inside [1, t].
    bool window_ok(Vertex v, Color c) const {
        const int d = g_.degree(v);
        const int lo = std::min(lo_[v], c);
        const int hi = std::max(hi_[v], c);
        if (hi - lo + 1 > d) return false;
        return std::min(t_, lo + d - 1) - std::max(1, hi - d + 1) + 1 >= d;
    }

    // Some uncolored edge at v has no color left in its range.
    bool starved(Vertex v) const {
        for (EdgeId f : g_.incident_edges(v)) {
            if (colors_[f] != 0) continue;
            const Edge& fe = g_.edge(f);
            if ((range_mask(f) & ~(used_[fe.u] | used_[fe.v])) == 0) return true;
        }
        return false;
    }

    // Colors 1 and t must both appear somewhere.
    bool extremes_reachable(std::size_t pos) const {
        bool need_low = color_count_[1] == 0;
        bool need_high = color_count_[t_] == 0;
        for (std::size_t k = pos; k < order_.size() && (need_low || need_high); ++k) {
            EdgeId f = order_[k];
            if (range_lo_[f] <= 1) need_low = false;
            if (range_hi_[f] >= t_) need_high = false;
        }
        return !need_low && !need_high;
    }

    void assign(EdgeId e, Color c) {
        const Edge& ed = g_.edge(e);
        colors_[e] = c;
        ++color_count_[c];
        for (Vertex v : {ed.u, ed.v}) {
            used_[v] |= bit(c);
            lo_[v] = std::min(lo_[v], c);
            hi_[v] = std::max(hi_[v], c);
        }
    }

    void unassign(EdgeId e, Color c, const std::array<int, 4>& saved) {
        const Edge& ed = g_.edge(e);
        colors_[e] = 0;
        --color_count_[c];
        used_[ed.u] &= ~bit(c);
        used_[ed.v] &= ~bit(c);
        lo_[ed.u] = saved[0];
        hi_[ed.u] = saved[1];
        lo_[ed.v] = saved[2];
        hi_[ed.v] = saved[3];
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size()) {
            for (Color c = 1; c <= t_; ++c)
                if (color_count_[c] == 0) return false;
            return true;
        }
        const EdgeId e = order_[pos];
        const Edge& ed = g_.edge(e);
        const std::uint64_t blocked = used_[ed.u] | used_[ed.v];
        Color first = range_lo_[e];
        Color last = range_hi_[e];
        if (pos == 0) last = std::min(last, (t_ + 1) / 2);

        for (Color c = first; c <= last; ++c) {
            if (blocked & bit(c)) continue;
            if (!window_ok(ed.u, c) || !window_ok(ed.v, c)) continue;
            if (++nodes_ > budget_) throw BudgetExhausted{};

            const std::array<int, 4> saved{lo_[ed.u], hi_[ed.u], lo_[ed.v], hi_[ed.v]};
            assign(e, c);
            const std::size_t mark = trail_.size();
            bool ok = true;
            for (std::size_t k = pos + 1; k < order_.size() && ok; ++k) {
                EdgeId f = order_[k];
                const int dist = dist_[e][f];
                if (dist >= kInf) continue;
                const int nlo = std::max(range_lo_[f], c - dist);
                const int nhi = std::min(range_hi_[f], c + dist);
                if (nlo != range_lo_[f] || nhi != range_hi_[f]) {
                    trail_.push_back({f, range_lo_[f], range_hi_[f]});
                    range_lo_[f] = nlo;
                    range_hi_[f] = nhi;
                }
                if (nlo > nhi) ok = false;
            }
            ok = ok && !starved(ed.u) && !starved(ed.v) && extremes_reachable(pos + 1);
            if (ok && extend(pos + 1)) return true;

            while (trail_.size() > mark) {
                auto [f, l, h] = trail_.back();
                trail_.pop_back();
                range_lo_[f] = l;
                range_hi_[f] = h;
            }
            unassign(e, c, saved);
        }
        return false;
    }

    struct TrailEntry {
        EdgeId edge;
        int lo;
        int hi;
    };

    const Graph& g_;
    const int t_;
    const std::uint64_t budget_;
    const std::vector<EdgeId>& order_;
    const std::vector<std::vector<int>>& dist_;
    std::uint64_t nodes_ = 0;

    std::vector<Color> colors_;
    std::vector<int> range_lo_;
    std::vector<int> range_hi_;
    std::vector<std::uint64_t> used_;
    std::vector<int> lo_;
    std::vector<int> hi_;
    std::vector<int> color_count_;
    std::vector<TrailEntry> trail_;
};

/// Precomputed per-graph data shared by all probes of one oracle call.
struct SearchContext {
    std::vector<EdgeId> order;
    std::vector<std::vector<int>> dist;
    int delta = 0;
    std::optional<int> span_limit;  // connected graphs: t <= max dist + 1

    explicit SearchContext(const Graph& g)
        : order(bfs_edge_order(g)), dist(color_distance(g)), delta(degree_profile(g).max_degree) {
        int far = 0;
        bool connected = true;
        for (const auto& row : dist)
            for (int d : row) {
                if (d >= kInf) connected = false;
                else far = std::max(far, d);
            }
        if (connected) span_limit = far + 1;
    }
};

SearchOutcome probe(const Graph& g, const SearchContext& ctx, int t, std::uint64_t budget) {
    if (t > kMaxT) throw Error(ErrorCode::BadParameter, "t above 64 is not supported");
    SearchOutcome out;
    if (g.num_edges() == 0 || t < std::max(ctx.delta, 1)) return out;
    if (ctx.span_limit && t > *ctx.span_limit) return out;
    IntervalSearch search(g, t, budget, ctx.order, ctx.dist);
    try {
        if (search.solve()) {
            out.status = SearchStatus::found;
            out.coloring = search.witness();
        }
    } catch (const BudgetExhausted&) {
        out.status = SearchStatus::budget_exceeded;
    }
    out.nodes = search.nodes();
    return out;
}

}  // namespace

SearchOutcome find_interval_coloring(const Graph& g, int t, std::uint64_t budget) {
    SearchContext ctx(g);
    return probe(g, ctx, t, budget);
}

namespace {

/// Oracle for a graph whose edges all lie in one component and that has no
/// isolated vertices.
OracleResult connected_oracle(const Graph& g, const OracleOptions& options) {
    OracleResult result;
    result.ceiling = search_ceiling(g);
    SearchContext ctx(g);
    const auto profile = degree_profile(g);
    const bool shortcut = options.regular_shortcut && profile.is_regular;
    const int first = ctx.delta;
    int last = result.ceiling;
    if (ctx.span_limit) last = std::min(last, *ctx.span_limit);

    // Colors live in a 64-bit mask; t beyond that stays unprobed and leaves
    // the result incomplete.
    for (int t = first; t <= std::min(last, kMaxT); ++t) {
        const std::uint64_t left =
            options.budget > result.nodes_explored ? options.budget - result.nodes_explored : 0;
        auto outcome = probe(g, ctx, t, left);
        result.nodes_explored += outcome.nodes;
        result.probes[t] = outcome.status;
        if (outcome.status == SearchStatus::found) {
            result.witnesses.emplace(t, std::move(*outcome.coloring));
        }
        if (outcome.status == SearchStatus::budget_exceeded) break;
        if (shortcut && outcome.status == SearchStatus::absent) break;
    }

    auto status_of = [&](int t) -> std::optional<SearchStatus> {
        if (t < first || t > last) return SearchStatus::absent;
        auto it = result.probes.find(t);
        if (it == result.probes.end()) return std::nullopt;
        return it->second;
    };

    if (!result.witnesses.empty()) {
        result.member = true;
        const int lo = result.witnesses.begin()->first;
        const int hi = result.witnesses.rbegin()->first;
        bool lo_exact = true;
        for (int t = first; t < lo; ++t)
            if (status_of(t) != SearchStatus::absent) lo_exact = false;
        if (lo_exact) result.w = lo;

        bool hi_exact = true;
        if (shortcut) {
            // Contiguity for regular graphs: one absent t above the last found
            // rules out everything beyond it.
            hi_exact = hi == last || status_of(hi + 1) == SearchStatus::absent;
        } else {
            for (int t = hi + 1; t <= last; ++t)
                if (status_of(t) != SearchStatus::absent) hi_exact = false;
        }
        if (hi_exact) result.W = hi;
        result.complete = result.w.has_value() && result.W.has_value();
    } else {
        bool all_absent = true;
        if (shortcut) {
            all_absent = status_of(first) == SearchStatus::absent;
        } else {
            for (int t = first; t <= last; ++t)
                if (status_of(t) != SearchStatus::absent) all_absent = false;
        }
        if (all_absent) result.member = false;
        result.complete = all_absent;
    }
    return result;
}

struct Component {
    Graph graph;
    std::vector<EdgeId> to_parent;  // component edge id -> edge id in the whole graph
};

/// Components that carry edges; isolated vertices are dropped.
std::vector<Component> edge_components(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<std::vector<Vertex>> members;
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (label[root] >= 0 || g.degree(root) == 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<Vertex> stack{root};
        label[root] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
    }
    std::vector<Component> out;
    for (auto& verts : members) {
        std::sort(verts.begin(), verts.end());
        auto local = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        std::vector<std::pair<int, int>> edges;
        for (Vertex v : verts)
            for (Vertex w : g.neighbors(v))
                if (v < w) edges.emplace_back(local(v), local(w));
        Component c{Graph(static_cast<int>(verts.size()), edges), {}};
        for (const Edge& e : c.graph.edges()) c.to_parent.push_back(*g.edge_id(verts[e.u], verts[e.v]));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

OracleResult oracle(const Graph& g, const OracleOptions& options) {
    if (g.num_edges() == 0) {
        OracleResult result;
        result.ceiling = search_ceiling(g);
        result.complete = true;
        result.member = false;
        return result;
    }
    auto comps = edge_components(g);
    if (comps.size() == 1 && comps[0].graph.num_vertices() == g.num_vertices()) {
        return connected_oracle(g, options);
    }

    // A disjoint union is colored component by component. With feasible sets
    // T_i, t is feasible iff some t_i in T_i satisfy max t_i <= t <= sum t_i:
    // the component intervals can then be slid to cover 1..t.
    OracleResult result;
    result.ceiling = search_ceiling(g);
    std::vector<OracleResult> parts;
    for (const auto& c : comps) {
        OracleOptions sub = options;
        sub.budget = options.budget > result.nodes_explored ? options.budget - result.nodes_explored : 0;
        parts.push_back(oracle(c.graph, sub));
        result.nodes_explored += parts.back().nodes_explored;
        if (parts.back().member == false) {
            result.complete = true;
            result.member = false;
            return result;
        }
    }
    for (const auto& p : parts)
        if (!p.complete) return result;

    result.complete = true;
    result.member = true;
    int top = 0;
    for (const auto& p : parts) top += *p.W;
    const int first = degree_profile(g).max_degree;
    for (int t = first; t <= top; ++t) {
        // Per component, the largest feasible t_i not above t maximizes the sum.
        std::vector<int> pick;
        int sum = 0;
        for (const auto& p : parts) {
            auto it = p.witnesses.upper_bound(t);
            if (it == p.witnesses.begin()) break;
            pick.push_back(std::prev(it)->first);
            sum += pick.back();
        }
        if (pick.size() != parts.size() || sum < t) {
            result.probes[t] = SearchStatus::absent;
            continue;
        }
        EdgeColoring c(static_cast<std::size_t>(g.num_edges()));
        int cursor = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const int offset = std::min(cursor, t - pick[k]);
            const auto& local = parts[k].witnesses.at(pick[k]);
            for (EdgeId e = 0; e < comps[k].graph.num_edges(); ++e)
                c[comps[k].to_parent[e]] = local[e] + offset;
            cursor = offset + pick[k];
        }
        result.probes[t] = SearchStatus::found;
        result.witnesses.emplace(t, std::move(c));
    }
    result.w = result.witnesses.begin()->first;
    result.W = result.witnesses.rbegin()->first;
    return result;
}

CrossValidation cross_validate(int construction_colors, const OracleResult& r) {
    using S = CrossValidation::Status;
    CrossValidation cv;
    const int c = construction_colors;
    auto note = [&](std::string s) { cv.notes.push_back(std::move(s)); };

    if (r.member == false) {
        cv.status = S::contradiction;
        note("oracle says not interval colorable but a construction exists");
    }
    if (auto it = r.probes.find(c); it != r.probes.end() && it->second == SearchStatus::absent) {
        cv.status = S::contradiction;
        note("oracle proved no interval " + std::to_string(c) + "-coloring exists");
    }
    if (r.w && *r.w > c) {
        cv.status = S::contradiction;
        note("oracle w = " + std::to_string(*r.w) + " exceeds construction's " + std::to_string(c));
    }
    if (r.W && *r.W < c) {
        cv.status = S::contradiction;
        note("oracle W = " + std::to_string(*r.W) + " is below construction's " + std::to_string(c));
    }
    if (cv.status != S::contradiction && !r.complete) {
        cv.status = S::partial;
        note("oracle incomplete within budget");
    }
    return cv;
}

}  // namespace ivc

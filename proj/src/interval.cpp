#include "ivc/interval.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ivc/error.hpp"

namespace ivc {

namespace {

void check_size(const Graph& g, const EdgeColoring& c) {
    if (c.size() != static_cast<std::size_t>(g.num_edges())) {
        throw Error(ErrorCode::BadParameter, "coloring has " + std::to_string(c.size()) +
                                                 " entries for " + std::to_string(g.num_edges()) +
                                                 " edges");
    }
}

}  // namespace

Spectrum spectrum(const Graph& g, const EdgeColoring& c, Vertex v) {
    check_size(g, c);
    Spectrum s;
    s.vertex = v;
    for (EdgeId e : g.incident_edges(v)) s.colors.push_back(c[e]);
    std::sort(s.colors.begin(), s.colors.end());
    s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
    if (!s.colors.empty()) {
        s.lo = s.colors.front();
        s.hi = s.colors.back();
    }
    return s;
}

IntervalReport verify_interval(const Graph& g, const EdgeColoring& c, int t) {
    check_size(g, c);
    IntervalReport report;
    report.t = t;

    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (c[e] < 1 || c[e] > t) report.out_of_range.push_back({e, c[e]});
    }

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::map<Color, EdgeId> first_with;
        for (EdgeId e : g.incident_edges(v)) {
            auto [it, fresh] = first_with.emplace(c[e], e);
            if (!fresh) report.properness_violations.push_back({v, it->second, e, c[e]});
        }
        auto s = spectrum(g, c, v);
        if (!s.is_interval()) report.gap_violations.push_back({v, s.colors});
    }

    std::vector<bool> seen(static_cast<std::size_t>(std::max(t, 0)) + 1, false);
    for (Color col : c.colors())
        if (col >= 1 && col <= t) seen[col] = true;
    for (Color col = 1; col <= t; ++col)
        if (!seen[col]) report.unused_colors.push_back(col);

    report.valid = t >= 1 && report.properness_violations.empty() &&
                   report.gap_violations.empty() && report.unused_colors.empty() &&
                   report.out_of_range.empty();
    return report;
}

EdgeColoring shift(const EdgeColoring& c, int offset) {
    if (offset < 0) throw Error(ErrorCode::BadParameter, "negative shift");
    auto colors = c.colors();
    for (auto& col : colors) col += offset;
    return EdgeColoring(std::move(colors));
}

SpectrumBounds spectrum_bounds(const Graph& g, const EdgeColoring& c) {
    check_size(g, c);
    SpectrumBounds b;
    b.lo.assign(static_cast<std::size_t>(g.num_vertices()), 1);
    b.hi.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto inc = g.incident_edges(v);
        if (inc.empty()) continue;
        b.lo[v] = c[inc.front()];
        b.hi[v] = c[inc.front()];
        for (EdgeId e : inc) {
            b.lo[v] = std::min(b.lo[v], c[e]);
            b.hi[v] = std::max(b.hi[v], c[e]);
        }
    }
    return b;
}

}  // namespace ivc

#include "ivc/constructions.hpp"

#include <string>

#include "ivc/error.hpp"
#include "ivc/generators.hpp"
#include "ivc/interval.hpp"

namespace ivc {

namespace {

/// Returns t for a valid interval coloring alpha of g.
int require_interval(const Graph& g, const EdgeColoring& alpha, const char* what) {
    if (alpha.size() != static_cast<std::size_t>(g.num_edges())) {
        throw Error(ErrorCode::InvalidAlpha, std::string(what) + " has the wrong number of entries");
    }
    const int t = alpha.max_color();
    if (!verify_interval(g, alpha, t).valid) {
        throw Error(ErrorCode::InvalidAlpha, std::string(what) + " is not an interval coloring");
    }
    return t;
}

int require_regular(const Graph& h) {
    auto p = degree_profile(h);
    if (!p.is_regular) throw Error(ErrorCode::NotRegular, "right factor must be regular");
    return *p.regularity;
}

Construction finish(ProductGraph product, EdgeColoring coloring, int t, const char* name) {
    auto report = verify_interval(product.graph, coloring, t);
    if (!report.valid) {
        throw Error(ErrorCode::ConstructionFailed,
                    std::string(name) + ": output is not an interval " + std::to_string(t) +
                        "-coloring (" + std::to_string(report.properness_violations.size()) +
                        " properness, " + std::to_string(report.gap_violations.size()) + " gap, " +
                        std::to_string(report.unused_colors.size()) + " unused, " +
                        std::to_string(report.out_of_range.size()) + " out of range)");
    }
    return Construction{std::move(product), std::move(coloring), t};
}

EdgeId left_edge(const Graph& g, int i, int j) {
    auto e = g.edge_id(i, j);
    if (!e) throw Error(ErrorCode::ConstructionFailed, "missing factor edge");
    return *e;
}

/// beta((x_p, y_q)) on K2 x H or K2 (x) H, whose vertices are x_p = p, y_q = m + q.
struct DoubleCover {
    Graph graph;
    EdgeColoring beta;
    int m;

    Color operator()(int p, int q) const {
        auto e = graph.edge_id(p, m + q);
        if (!e) throw Error(ErrorCode::ConstructionFailed, "missing double-cover edge");
        return beta[*e];
    }
};

DoubleCover double_cover(ProductKind kind, const Graph& h) {
    auto cover = product(kind, complete_graph(2), h).graph;
    auto beta = bipartite_regular_coloring(cover);
    return DoubleCover{std::move(cover), std::move(beta), h.num_vertices()};
}

/// Shared by the strong-tensor and strong constructions: colors every edge
/// that is not inside a copy of H.
void color_strong_tensor_part(const ProductGraph& prod, const Graph& g, const EdgeColoring& alpha,
                              const DoubleCover& cover, int stride, EdgeColoring& out) {
    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        if (prod.edge_origin[e] == EdgeOrigin::h_layer) continue;
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        out[e] = (alpha[left_edge(g, a.i, b.i)] - 1) * stride + cover(a.j, b.j);
    }
}

/// The w_form value for copy indices p, q given as 0-based.
Color lex_w_value(Color a, int p0, int q0, int n) {
    const int s = (p0 + 1) + (q0 + 1);
    if (s == n + 1) return a * n;
    // s - 1 is not a multiple of n here, so the residue lies in 1..n-1.
    return (a - 1) * n + (s - 1) % n;
}

}  // namespace

EdgeColoring regular_interval_coloring(const Graph& h, std::uint64_t budget) {
    const int r = require_regular(h);
    if (r == 0) return EdgeColoring(std::size_t{0});
    if (is_bipartite(h).bipartite) return bipartite_regular_coloring(h);
    auto chi = exact_chromatic_index(h, budget);
    if (!chi.class1) {
        throw Error(ErrorCode::NotClass1, "right factor is class 2 (chi' = " +
                                              std::to_string(chi.chi_prime) + ")");
    }
    return chi.witness;
}

Construction tensor_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h) {
    const int t = require_interval(g, alpha, "alpha");
    const int r = require_regular(h);
    if (r == 0) throw Error(ErrorCode::NotRegular, "right factor must be r-regular with r >= 1");

    auto prod = product(ProductKind::tensor, g, h);
    auto cover = double_cover(ProductKind::tensor, h);
    EdgeColoring gamma(static_cast<std::size_t>(prod.graph.num_edges()));
    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        gamma[e] = (alpha[left_edge(g, a.i, b.i)] - 1) * r + cover(a.j, b.j);
    }
    return finish(std::move(prod), std::move(gamma), t * r, "tensor_interval");
}

Construction strong_tensor_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h) {
    const int t = require_interval(g, alpha, "alpha");
    const int r = require_regular(h);

    auto prod = product(ProductKind::strong_tensor, g, h);
    auto cover = double_cover(ProductKind::strong_tensor, h);
    EdgeColoring gamma(static_cast<std::size_t>(prod.graph.num_edges()));
    color_strong_tensor_part(prod, g, alpha, cover, r + 1, gamma);
    return finish(std::move(prod), std::move(gamma), t * (r + 1), "strong_tensor_interval");
}

Construction strong_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                             std::uint64_t budget) {
    const int t = require_interval(g, alpha, "alpha");
    const int r = require_regular(h);
    auto h_coloring = regular_interval_coloring(h, budget);

    auto prod = product(ProductKind::strong, g, h);
    auto cover = double_cover(ProductKind::strong_tensor, h);
    EdgeColoring gamma(static_cast<std::size_t>(prod.graph.num_edges()));
    color_strong_tensor_part(prod, g, alpha, cover, r + 1, gamma);

    auto bounds = spectrum_bounds(g, alpha);
    // The copies of H start right above the strong-tensor spectrum at each
    // vertex; check that the spectrum really ends at max S(u_i) * (r + 1).
    for (Vertex x = 0; x < prod.graph.num_vertices(); ++x) {
        Coord c = prod.coord_of(x);
        if (g.degree(c.i) == 0) continue;
        Color top = 0;
        for (EdgeId e : prod.graph.incident_edges(x))
            if (prod.edge_origin[e] != EdgeOrigin::h_layer) top = std::max(top, gamma[e]);
        if (top != bounds.hi[c.i] * (r + 1)) {
            throw Error(ErrorCode::ConstructionFailed,
                        "strong_interval: strong-tensor spectrum at vertex " + std::to_string(x) +
                            " ends at " + std::to_string(top));
        }
    }

    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        if (prod.edge_origin[e] != EdgeOrigin::h_layer) continue;
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        gamma[e] = bounds.hi[a.i] * (r + 1) + h_coloring[*h.edge_id(a.j, b.j)];
    }
    return finish(std::move(prod), std::move(gamma), t * (r + 1) + r, "strong_interval");
}

Construction lex_empty_interval(const Graph& g, const EdgeColoring& alpha, int n, LexForm form) {
    if (n < 1) throw Error(ErrorCode::BadN, "number of copies must be >= 1");
    const int t = require_interval(g, alpha, "alpha");

    auto prod = product(ProductKind::lexicographic, g, empty_graph(n));
    EdgeColoring beta(static_cast<std::size_t>(prod.graph.num_edges()));
    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        Color base = alpha[left_edge(g, a.i, b.i)];
        beta[e] = form == LexForm::w_form ? lex_w_value(base, a.j, b.j, n)
                                          : (base - 1) * n + (a.j + 1) + (b.j + 1) - 1;
    }
    const int colors = form == LexForm::w_form ? t * n : t * n + n - 1;
    return finish(std::move(prod), std::move(beta), colors, "lex_empty_interval");
}

Construction lex_regular_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                                  std::uint64_t budget) {
    const int t = require_interval(g, alpha, "alpha");
    const int r = require_regular(h);
    const int n = h.num_vertices();
    auto h_coloring = regular_interval_coloring(h, budget);

    auto prod = product(ProductKind::lexicographic, g, h);
    auto bounds = spectrum_bounds(g, alpha);
    EdgeColoring beta(static_cast<std::size_t>(prod.graph.num_edges()));
    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        if (prod.edge_origin[e] == EdgeOrigin::h_layer) {
            beta[e] = (bounds.lo[a.i] - 1) * n + h_coloring[*h.edge_id(a.j, b.j)];
        } else {
            beta[e] = r + lex_w_value(alpha[left_edge(g, a.i, b.i)], a.j, b.j, n);
        }
    }
    return finish(std::move(prod), std::move(beta), t * n + r, "lex_regular_interval");
}

Construction cartesian_interval(const Graph& g, const EdgeColoring& alpha_g, const Graph& h,
                                const EdgeColoring& alpha_h) {
    const int tg = require_interval(g, alpha_g, "left coloring");
    const int th = require_interval(h, alpha_h, "right coloring");

    auto prod = product(ProductKind::cartesian, g, h);
    auto g_bounds = spectrum_bounds(g, alpha_g);
    auto h_bounds = spectrum_bounds(h, alpha_h);
    EdgeColoring gamma(static_cast<std::size_t>(prod.graph.num_edges()));
    for (EdgeId e = 0; e < prod.graph.num_edges(); ++e) {
        Coord a = prod.coord_of(prod.graph.edge(e).u);
        Coord b = prod.coord_of(prod.graph.edge(e).v);
        if (prod.edge_origin[e] == EdgeOrigin::g_layer) {
            gamma[e] = alpha_g[left_edge(g, a.i, b.i)] + h_bounds.lo[a.j] - 1;
        } else {
            gamma[e] = alpha_h[*h.edge_id(a.j, b.j)] + g_bounds.hi[a.i];
        }
    }
    const int t = gamma.max_color();
    if (t > tg + th) {
        throw Error(ErrorCode::ConstructionFailed, "cartesian_interval exceeded tG + tH colors");
    }
    return finish(std::move(prod), std::move(gamma), t, "cartesian_interval");
}

bool torus_hamming_membership(const std::vector<int>& dims, MembershipFamily family) {
    if (family == MembershipFamily::torus) {
        if (dims.size() != 2 || dims[0] < 2 || dims[1] < 2) {
            throw Error(ErrorCode::BadDims, "torus needs exactly two sides, each >= 2");
        }
    } else {
        if (dims.empty()) throw Error(ErrorCode::BadDims, "hamming needs at least one dimension");
        for (int d : dims)
            if (d < 2) throw Error(ErrorCode::BadDims, "hamming dimensions must be >= 2");
    }
    for (int d : dims)
        if (d % 2 == 0) return true;
    return false;
}

}  // namespace ivc

#include "ivc/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ivc/error.hpp"

namespace ivc {

namespace {

/// Next non-blank, non-comment line; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_error(int lineno, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
}

/// Parses exactly `count` integers from the line, nothing else.
template <std::size_t N>
std::array<long long, N> ints(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::array<long long, N> out{};
    for (auto& x : out)
        if (!(ss >> x)) parse_error(lineno, "expected " + std::to_string(N) + " integers");
    std::string extra;
    if (ss >> extra) parse_error(lineno, "trailing input '" + extra + "'");
    return out;
}

template <class F>
void with_output(const std::filesystem::path& path, F&& write) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    write(out);
    if (!out) throw Error(ErrorCode::ParseError, "failed writing " + path.string());
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
    return in;
}

constexpr std::array<const char*, 12> kPalette = {
    "red",   "blue",    "forestgreen", "orange", "purple", "brown",
    "cyan3", "magenta", "gold3",       "gray40", "navy",   "olivedrab"};

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) parse_error(lineno, "missing header 'n m'");
    auto [n, m] = ints<2>(line, lineno);
    if (n < 0 || m < 0) parse_error(lineno, "negative size in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!next_line(in, line, lineno)) parse_error(lineno, "expected " + std::to_string(m) + " edges");
        auto [u, v] = ints<2>(line, lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(in, line, lineno)) parse_error(lineno, "more edges than the header declares");
    return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

ColoringFile read_coloring(std::istream& in, const Graph& g) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) parse_error(lineno, "missing header 't=<K>'");
    ColoringFile file;
    {
        auto first = line.find_first_not_of(" \t");
        if (line.compare(first, 2, "t=") != 0) parse_error(lineno, "header must be 't=<K>'");
        file.t = static_cast<int>(ints<1>(line.substr(first + 2), lineno)[0]);
    }
    file.coloring = EdgeColoring(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId expect = 0; expect < g.num_edges(); ++expect) {
        if (!next_line(in, line, lineno)) parse_error(lineno, "coloring ends early");
        auto [id, u, v, c] = ints<4>(line, lineno);
        if (id != expect) parse_error(lineno, "edge ids must run 0..m-1 in order");
        const Edge& e = g.edge(expect);
        if (u != e.u || v != e.v) {
            parse_error(lineno, "edge " + std::to_string(id) + " does not match the graph");
        }
        file.coloring[expect] = static_cast<Color>(c);
    }
    if (next_line(in, line, lineno)) parse_error(lineno, "more lines than graph edges");
    return file;
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c, int t) {
    out << "t=" << t << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c[e] << '\n';
    }
}

void write_provenance(std::ostream& out, const ProductGraph& p) {
    for (EdgeId e = 0; e < p.graph.num_edges(); ++e) {
        Coord a = p.coord_of(p.graph.edge(e).u);
        Coord b = p.coord_of(p.graph.edge(e).v);
        out << e << ' ' << to_string(p.edge_origin[e]) << ' ' << a.i << ' ' << a.j << ' ' << b.i
            << ' ' << b.j << '\n';
    }
}

std::vector<ProvenanceLine> read_provenance(std::istream& in) {
    std::vector<ProvenanceLine> out;
    std::string line;
    int lineno = 0;
    while (next_line(in, line, lineno)) {
        std::istringstream ss(line);
        ProvenanceLine p{};
        std::string origin;
        if (!(ss >> p.edge >> origin >> p.a.i >> p.a.j >> p.b.i >> p.b.j)) {
            parse_error(lineno, "expected 'edge_id origin i p j q'");
        }
        auto o = parse_edge_origin(origin);
        if (!o) parse_error(lineno, "unknown origin '" + origin + "'");
        p.origin = *o;
        out.push_back(p);
    }
    return out;
}

void write_dot(std::ostream& out, const Graph& g, const EdgeColoring& c) {
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Color col = c[e];
        const char* name = col >= 1 ? kPalette[static_cast<std::size_t>(col - 1) % kPalette.size()]
                                    : "black";
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=" << col << ", color=\""
            << name << "\"];\n";
    }
    out << "}\n";
}

Graph load_graph(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_graph(in);
}

ColoringFile load_coloring(const std::filesystem::path& path, const Graph& g) {
    auto in = open_input(path);
    return read_coloring(in, g);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
    with_output(path, [&](std::ostream& out) { write_graph(out, g); });
}

void save_coloring(const std::filesystem::path& path, const Graph& g, const EdgeColoring& c, int t) {
    with_output(path, [&](std::ostream& out) { write_coloring(out, g, c, t); });
}

}  // namespace ivc

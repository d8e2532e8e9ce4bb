#include "ivc/generators.hpp"

#include <string>
#include <utility>

#include "ivc/error.hpp"
#include "ivc/product.hpp"

namespace ivc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParameter, what);
}

using EdgeList = std::vector<std::pair<int, int>>;

Graph cartesian_power(const std::vector<Graph>& factors) {
    Graph g = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) {
        g = product(ProductKind::cartesian, g, factors[k]).graph;
    }
    return g;
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "P_n needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "C_n needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    require(n >= 1, "K_n needs n >= 1");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite_graph(int m, int n) {
    require(m >= 1 && n >= 1, "K_{m,n} needs m, n >= 1");
    EdgeList e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, e);
}

Graph empty_graph(int n) {
    require(n >= 1, "nK1 needs n >= 1");
    return Graph(n, EdgeList{});
}

Graph hypercube_graph(int n) {
    require(n >= 1, "Q_n needs n >= 1");
    return cartesian_power(std::vector<Graph>(static_cast<std::size_t>(n), complete_graph(2)));
}

Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

Graph k113_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph k13_plus_e_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

Graph grid_graph(const std::vector<int>& dims) {
    require(!dims.empty(), "grid needs at least one dimension");
    std::vector<Graph> f;
    for (int d : dims) f.push_back(path_graph(d));
    return cartesian_power(f);
}

Graph cylinder_graph(int m, int n) { return cartesian_power({path_graph(m), cycle_graph(n)}); }

Graph torus_graph(int a, int b) {
    require(a >= 2 && b >= 2, "torus sides must be >= 2");
    auto side = [](int k) { return k == 2 ? complete_graph(2) : cycle_graph(k); };
    return cartesian_power({side(a), side(b)});
}

Graph hamming_graph(const std::vector<int>& dims) {
    require(!dims.empty(), "hamming needs at least one dimension");
    std::vector<Graph> f;
    for (int d : dims) {
        require(d >= 2, "hamming dimensions must be >= 2");
        f.push_back(complete_graph(d));
    }
    return cartesian_power(f);
}

Graph generate(const FamilySpec& spec) {
    const auto& name = spec.name;
    auto need_n = [&] {
        require(spec.n >= 0, name + " needs parameter n");
        return spec.n;
    };
    auto need_dims = [&](std::size_t count) {
        require(count == 0 ? !spec.dims.empty() : spec.dims.size() == count,
                name + " needs " + (count == 0 ? std::string("dims") : std::to_string(count) + " dims"));
        return spec.dims;
    };
    if (name == "P") return path_graph(need_n());
    if (name == "C") return cycle_graph(need_n());
    if (name == "K") return complete_graph(need_n());
    if (name == "E") return empty_graph(need_n());
    if (name == "Q") return hypercube_graph(need_n());
    if (name == "Kmn") {
        require(spec.m >= 0, "Kmn needs parameter m");
        return complete_bipartite_graph(spec.m, need_n());
    }
    if (name == "petersen") return petersen_graph();
    if (name == "K113") return k113_graph();
    if (name == "K13e") return k13_plus_e_graph();
    if (name == "grid") return grid_graph(need_dims(0));
    if (name == "cylinder") {
        auto d = need_dims(2);
        return cylinder_graph(d[0], d[1]);
    }
    if (name == "torus") {
        auto d = need_dims(2);
        return torus_graph(d[0], d[1]);
    }
    if (name == "hamming") return hamming_graph(need_dims(0));
    throw Error(ErrorCode::BadParameter, "unknown family '" + name + "'");
}

}  // namespace ivc

#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "ivc/error.hpp"
#include "ivc/generators.hpp"
#include "ivc/interval.hpp"
#include "ivc/proper_coloring.hpp"
#include "matrix.hpp"
#include "naive_oracle.hpp"

using namespace ivc;

namespace {

EdgeColoring by_pairs(const Graph& g, std::initializer_list<std::tuple<int, int, Color>> items) {
    EdgeColoring c(static_cast<std::size_t>(g.num_edges()));
    for (auto [u, v, col] : items) c[*g.edge_id(u, v)] = col;
    return c;
}

}  // namespace

TEST_CASE("spectrum") {
    auto k2 = complete_graph(2);
    EdgeColoring one(std::vector<Color>{1});
    for (Vertex v : {0, 1}) {
        auto s = spectrum(k2, one, v);
        CHECK(s.colors == std::vector<Color>{1});
        CHECK(s.is_interval());
    }

    auto k13e = k13_plus_e_graph();
    auto a = by_pairs(k13e, {{0, 1, 1}, {0, 2, 3}, {0, 3, 2}, {1, 2, 2}});
    auto center = spectrum(k13e, a, 0);
    CHECK(center.colors == std::vector<Color>{1, 2, 3});
    CHECK(center.lo == 1);
    CHECK(center.hi == 3);
    CHECK(verify_interval(k13e, a, 3).valid);

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto gap = spectrum(star, EdgeColoring(std::vector<Color>{1, 2, 4}), 0);
    CHECK_FALSE(gap.is_interval());
}

TEST_CASE("verify_interval examples") {
    auto c4 = cycle_graph(4);
    // Edges of C4 sorted: (0,1) (0,3) (1,2) (2,3).
    auto alt = by_pairs(c4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
    auto ok = verify_interval(c4, alt, 2);
    CHECK(ok.valid);
    CHECK(ok.t == 2);

    auto c3 = cycle_graph(3);
    auto rep = verify_interval(c3, EdgeColoring(std::vector<Color>{1, 2, 3}), 3);
    CHECK_FALSE(rep.valid);
    CHECK(rep.properness_violations.empty());
    CHECK(rep.gap_violations.size() == 1);

    auto high = verify_interval(c4, alt, 3);
    CHECK_FALSE(high.valid);
    CHECK(high.unused_colors == std::vector<Color>{3});

    auto clash = verify_interval(c4, EdgeColoring(std::vector<Color>{1, 1, 2, 2}), 2);
    CHECK_FALSE(clash.valid);
    CHECK(clash.properness_violations.size() == 2);

    auto low = verify_interval(c4, alt, 1);
    CHECK_FALSE(low.valid);
    CHECK(low.out_of_range.size() == 2);

    CHECK_THROWS_AS(verify_interval(c4, EdgeColoring(std::vector<Color>{1}), 1), Error);
}

TEST_CASE("no coloring of C3 is an interval coloring") {
    auto c3 = cycle_graph(3);
    for (int t = 1; t <= 3; ++t)
        for (Color a = 1; a <= t; ++a)
            for (Color b = 1; b <= t; ++b)
                for (Color c = 1; c <= t; ++c)
                    CHECK_FALSE(verify_interval(c3, EdgeColoring(std::vector<Color>{a, b, c}), t).valid);
}

TEST_CASE("a full palette on a regular graph is an interval coloring") {
    for (const auto& g : {complete_graph(4), complete_graph(6), cycle_graph(6), hypercube_graph(4),
                          torus_graph(2, 4), complete_bipartite_graph(4, 4)}) {
        auto res = exact_chromatic_index(g);
        REQUIRE(res.class1);
        auto rep = verify_interval(g, res.witness, res.chi_prime);
        CHECK(rep.valid);
    }
}

TEST_CASE("verifier agrees with the naive re-implementation on random colorings") {
    std::mt19937 rng(testing::kMatrixSeed);
    int valid_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing::random_connected_graph(rng, 10, 0.35);
        const int delta = degree_profile(g).max_degree;
        std::uniform_int_distribution<int> tdist(delta, delta + 3);
        const int t = tdist(rng);
        std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()));
        // Every fourth trial swaps in a naive witness when one exists.
        std::uniform_int_distribution<int> cdist(1, t);
        for (auto& c : colors) c = cdist(rng);
        if (trial % 4 == 0 && g.num_edges() <= 14) {
            if (auto hit = testing::naive_enumerate(g, t, 2'000'000).first) colors = *hit;
        }
        const EdgeColoring ec(colors);
        const bool lib = verify_interval(g, ec, t).valid;
        CHECK(lib == testing::naive_is_interval(g, colors, t));
        valid_seen += lib;
        if (lib) {
            CHECK(ec.max_color() == t);
            CHECK(*std::min_element(colors.begin(), colors.end()) == 1);
        }
    }
    MESSAGE("valid colorings among 200 trials: " << valid_seen);
    CHECK(valid_seen > 0);
}

TEST_CASE("shift") {
    EdgeColoring base(std::vector<Color>{1, 2, 2, 1});
    CHECK(shift(base, 3).colors() == std::vector<Color>{4, 5, 5, 4});
    CHECK(shift(base, 0) == base);
    CHECK_THROWS_AS(shift(base, -1), Error);

    auto k13e = k13_plus_e_graph();
    auto a = by_pairs(k13e, {{0, 1, 1}, {0, 2, 3}, {0, 3, 2}, {1, 2, 2}});
    for (int off : {1, 2, 7}) {
        auto before = verify_interval(k13e, a, 3);
        auto after = verify_interval(k13e, shift(a, off), 3 + off);
        CHECK(before.gap_violations.size() == after.gap_violations.size());
        CHECK(before.properness_violations.size() == after.properness_violations.size());
        CHECK(after.unused_colors.size() == static_cast<std::size_t>(off));
    }
}

TEST_CASE("spectrum_bounds") {
    Graph g(3, {{0, 1}});
    auto b = spectrum_bounds(g, EdgeColoring(std::vector<Color>{4}));
    CHECK(b.lo == std::vector<Color>{4, 4, 1});
    CHECK(b.hi == std::vector<Color>{4, 4, 0});
}

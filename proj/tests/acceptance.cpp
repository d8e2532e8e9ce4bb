// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ivc/bounds.hpp"
#include "ivc/constructions.hpp"
#include "ivc/error.hpp"
#include "ivc/generators.hpp"
#include "ivc/interval.hpp"
#include "ivc/io.hpp"
#include "ivc/oracle.hpp"
#include "ivc/proper_coloring.hpp"
#include "matrix.hpp"
#include "naive_oracle.hpp"

using namespace ivc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failures for one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

int failed = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " -- " << o.detail
              << std::endl;
}

Outcome finish(const Check& c, const std::string& ok_detail) {
    if (c.failures.empty()) return {true, ok_detail};
    std::string all;
    for (const auto& f : c.failures) all += (all.empty() ? "" : "; ") + f;
    return {false, all};
}

/// Writes the product and coloring, then runs the CLI verifier on them.
int cli_verify(const Construction& c, const std::string& name) {
    auto dir = fs::temp_directory_path() / "ivc_acceptance";
    fs::create_directories(dir);
    auto g = (dir / (name + ".g")).string();
    auto col = (dir / (name + ".col")).string();
    save_graph(g, c.product.graph);
    save_coloring(col, c.product.graph, c.coloring, c.t);
    std::ostringstream out, err;
    return cli::run({"verify", g, col}, out, err);
}

EdgeColoring witness(const Graph& g, int t) { return oracle(g).witnesses.at(t); }

Outcome reference_colorings() {
    struct Fig {
        std::string name;
        std::function<Construction()> build;
        int expected;
    };
    const EdgeColoring p4_alpha(std::vector<Color>{1, 2, 3});
    const Graph k13e = k13_plus_e_graph();
    EdgeColoring k13e_alpha(static_cast<std::size_t>(k13e.num_edges()));
    k13e_alpha[*k13e.edge_id(0, 1)] = 1;
    k13e_alpha[*k13e.edge_id(0, 2)] = 3;
    k13e_alpha[*k13e.edge_id(0, 3)] = 2;
    k13e_alpha[*k13e.edge_id(1, 2)] = 2;
    const Graph k4 = complete_graph(4);
    const EdgeColoring k4_alpha = witness(k4, 4);

    std::vector<Fig> figs = {
        {"t12 P4 x C5", [&] { return tensor_interval(path_graph(4), p4_alpha, cycle_graph(5)); }, 6},
        {"t13 P4 (x) C5", [&] { return strong_tensor_interval(path_graph(4), p4_alpha, cycle_graph(5)); }, 9},
        {"t14 P4 [x] C4", [&] { return strong_interval(path_graph(4), p4_alpha, cycle_graph(4)); }, 11},
        {"t16w K13e[2K1]", [&] { return lex_empty_interval(k13e, k13e_alpha, 2, LexForm::w_form); }, 6},
        {"t17 K4[K2]", [&] { return lex_regular_interval(k4, k4_alpha, complete_graph(2)); }, 9},
    };
    Check c;
    std::string detail;
    for (const auto& f : figs) {
        auto start = Clock::now();
        auto built = f.build();
        const bool valid = verify_interval(built.product.graph, built.coloring, built.t).valid;
        const int code = cli_verify(built, f.name.substr(0, 3));
        const double secs = seconds_since(start);
        c.expect(valid, f.name + " invalid");
        c.expect(built.t == f.expected && built.coloring.num_colors() == f.expected,
                 f.name + " t=" + std::to_string(built.t));
        c.expect(code == 0, f.name + " verifier exit " + std::to_string(code));
        c.expect(secs < 1.0, f.name + " took " + std::to_string(secs) + "s");
        std::ostringstream d;
        d << f.name << " t=" << built.t << " (" << secs << "s)";
        detail += (detail.empty() ? "" : ", ") + d.str();
    }
    return finish(c, detail);
}

Outcome negatives() {
    Check c;
    std::string detail;
    std::vector<std::pair<std::string, Graph>> graphs = {
        {"C3", cycle_graph(3)}, {"C5", cycle_graph(5)}, {"K113", k113_graph()}};
    for (const auto& [name, g] : graphs) {
        auto start = Clock::now();
        auto r = oracle(g);
        const double secs = seconds_since(start);
        c.expect(r.complete && r.member == false, name + " not proven outside");
        c.expect(secs < 10.0, name + " took " + std::to_string(secs) + "s");
        std::ostringstream d;
        d << name << " not a member (" << r.nodes_explored << " nodes, " << secs << "s)";
        detail += (detail.empty() ? "" : ", ") + d.str();
    }
    auto start = Clock::now();
    auto pet = exact_chromatic_index(petersen_graph());
    const double secs = seconds_since(start);
    c.expect(pet.chi_prime == 4 && !pet.class1, "Petersen chi' = " + std::to_string(pet.chi_prime));
    c.expect(secs < 10.0, "Petersen took " + std::to_string(secs) + "s");
    std::ostringstream d;
    d << ", Petersen chi'=" << pet.chi_prime << " class 2 (" << secs << "s)";
    return finish(c, detail + d.str());
}

Outcome parity() {
    Check c;
    auto start = Clock::now();
    const bool t33_parity = torus_hamming_membership({3, 3}, MembershipFamily::torus);
    auto chi = exact_chromatic_index(torus_graph(3, 3));
    c.expect(!t33_parity, "parity says T(3,3) is a member");
    c.expect(!chi.class1, "T(3,3) is class 1");

    const bool t24_parity = torus_hamming_membership({2, 4}, MembershipFamily::torus);
    const Graph c4 = cycle_graph(4);
    auto built = cartesian_interval(complete_graph(2), EdgeColoring(std::vector<Color>{1}), c4, witness(c4, 2));
    const bool built_valid = verify_interval(built.product.graph, built.coloring, built.t).valid;
    c.expect(t24_parity, "parity says T(2,4) is not a member");
    c.expect(built_valid, "T(2,4) construction invalid");
    c.expect(built.product.graph.num_edges() == torus_graph(2, 4).num_edges(), "T(2,4) size mismatch");
    const double secs = seconds_since(start);
    c.expect(secs < 60.0, "took " + std::to_string(secs) + "s");
    std::ostringstream d;
    d << "T(3,3) parity=no, chi'=" << chi.chi_prime << "; T(2,4) parity=yes, interval " << built.t
      << "-coloring built (" << secs << "s)";
    return finish(c, d.str());
}

Outcome bound_arithmetic() {
    Check c;
    struct Row {
        std::string label;
        std::string theorem;
        std::map<std::string, long long> params;
        long long expected;
    };
    std::vector<Row> rows = {{"W(K4)", "t7", {{"n", 2}}, 4},
                             {"W(Q3)", "t6", {{"n", 3}}, 6},
                             {"W(T(4,4))", "t5", {{"m", 2}, {"n", 2}}, 8},
                             {"W(C(1,4))", "t4", {{"m", 1}, {"n", 2}}, 3}};
    std::string detail;
    for (const auto& r : rows) {
        auto b = bound_report(r.theorem, r.params);
        c.expect(b.W_lower == r.expected, r.label + " got " + std::to_string(b.W_lower.value_or(-1)));
        detail += (detail.empty() ? "" : ", ") + r.label + ">=" + std::to_string(b.W_lower.value_or(-1));
    }
    return finish(c, detail);
}

Outcome matrix_suite() {
    Check c;
    auto start = Clock::now();
    auto cases = testing::construction_matrix();
    for (const auto& mc : cases) {
        auto built = testing::run_case(mc);
        const bool valid = verify_interval(built.product.graph, built.coloring, built.t).valid;
        c.expect(valid, mc.label + " invalid");
        c.expect(built.t == mc.expected && built.coloring.num_colors() == mc.expected,
                 mc.label + " t=" + std::to_string(built.t) + " want " + std::to_string(mc.expected));
    }
    const double secs = seconds_since(start);
    c.expect(secs < 120.0, "took " + std::to_string(secs) + "s");
    std::ostringstream d;
    d << cases.size() << " (G, alpha, H) cases, all exact (" << secs << "s)";
    return finish(c, d.str());
}

Outcome oracle_vs_naive() {
    Check c;
    auto start = Clock::now();
    std::vector<std::pair<std::string, Graph>> graphs;
    std::set<std::pair<int, std::vector<Edge>>> seen;
    auto add = [&](const std::string& name, const Graph& g) {
        if (g.num_edges() > 12) return;
        if (seen.emplace(g.num_vertices(), g.edges()).second) graphs.emplace_back(name, g);
    };
    for (const auto& f : testing::left_factors()) add(f.name, f.graph);
    for (const auto& f : testing::regular_right_factors()) add(f.name, f.graph);
    for (const auto& mc : testing::construction_matrix()) add(mc.label, testing::run_case(mc).product.graph);

    for (const auto& [name, g] : graphs) {
        auto lib = oracle(g);
        const int limit = std::max(degree_profile(g).max_degree, std::min(2 * g.num_vertices() - 3, g.num_edges()));
        auto ref = testing::naive_oracle(g, limit, 100'000'000);
        c.expect(lib.complete, name + " oracle incomplete");
        c.expect(lib.member == ref.member && lib.w == ref.w && lib.W == ref.W,
                 name + " disagrees with naive enumeration");
    }
    std::ostringstream d;
    d << graphs.size() << " distinct graphs with <= 12 edges agree on member, w, W (" << seconds_since(start)
      << "s)";
    return finish(c, d.str());
}

Outcome cartesian_composition() {
    Check c;
    const std::uint32_t seed = testing::kMatrixSeed;
    std::mt19937 rng(seed);
    auto member = [&](Graph& g, OracleResult& r) {
        do {
            g = testing::random_connected_graph(rng, 5, 0.5);
            r = oracle(g);
        } while (!(r.complete && *r.member));
    };
    int completed = 0;
    int colorings = 0;
    for (int pair = 0; pair < 20; ++pair) {
        Graph g(0, {}), h(0, {});
        OracleResult rg, rh;
        member(g, rg);
        member(h, rh);
        // Both extreme witnesses of each factor.
        const std::vector<int> tg = {*rg.w, *rg.W}, th = {*rh.w, *rh.W};
        for (int a : tg)
            for (int b : th) {
                auto built = cartesian_interval(g, rg.witnesses.at(a), h, rh.witnesses.at(b));
                ++colorings;
                c.expect(verify_interval(built.product.graph, built.coloring, built.t).valid,
                         "pair " + std::to_string(pair) + " invalid");
                c.expect(built.t <= a + b, "pair " + std::to_string(pair) + " uses " +
                                               std::to_string(built.t) + " > " + std::to_string(a + b));
            }
        OracleOptions opts;
        opts.budget = 2'000'000;
        auto prod = oracle(product(ProductKind::cartesian, g, h).graph, opts);
        if (prod.complete) {
            ++completed;
            c.expect(*prod.member, "pair " + std::to_string(pair) + " product not a member");
            c.expect(*prod.w <= *rg.w + *rh.w, "pair " + std::to_string(pair) + " w bound broken");
            c.expect(*prod.W >= *rg.W + *rh.W, "pair " + std::to_string(pair) + " W bound broken");
        }
    }
    std::ostringstream d;
    d << "seed " << seed << ", 20 pairs, " << colorings << " colorings verified within tG+tH; oracle completed on "
      << completed << " products, bounds hold";
    return finish(c, d.str());
}

}  // namespace

int main() {
    std::cout << "acceptance suite, seed " << testing::kMatrixSeed << std::endl;
    report(1, "reference color counts", reference_colorings);
    report(2, "negative membership", negatives);
    report(3, "torus parity cross-check", parity);
    report(4, "bound arithmetic", bound_arithmetic);
    report(5, "construction matrix", matrix_suite);
    report(6, "oracle vs naive enumeration", oracle_vs_naive);
    report(7, "cartesian composition", cartesian_composition);
    fs::remove_all(fs::temp_directory_path() / "ivc_acceptance");
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}

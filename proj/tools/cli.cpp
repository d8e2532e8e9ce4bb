#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "ivc/bounds.hpp"
#include "ivc/constructions.hpp"
#include "ivc/error.hpp"
#include "ivc/generators.hpp"
#include "ivc/interval.hpp"
#include "ivc/io.hpp"
#include "ivc/oracle.hpp"
#include "ivc/product.hpp"
#include "ivc/proper_coloring.hpp"

namespace ivc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaPrefix = "ivc.";
constexpr const char* kSchemaVersion = ".v1";

json with_schema(const std::string& command) {
    json j;
    j["schema"] = std::string(kSchemaPrefix) + command + kSchemaVersion;
    return j;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("INTERVAL_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParameter, "INTERVAL_BUDGET is not a number");
        }
    }
    return kDefaultBudget;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParameter, "not an integer list: '" + text + "'");
        }
    }
    return out;
}

std::map<std::string, long long> parse_params(const std::string& text) {
    std::map<std::string, long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::BadParameter, "expected k=v in '" + item + "'");
        try {
            out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParameter, "bad value in '" + item + "'");
        }
    }
    return out;
}

json report_lines_summary(const IntervalReport& r) {
    json j = with_schema("verify");
    j["kind"] = "summary";
    j["valid"] = r.valid;
    j["t"] = r.t;
    j["violations"] = r.properness_violations.size() + r.gap_violations.size() +
                      r.unused_colors.size() + r.out_of_range.size();
    return j;
}

void print_report(std::ostream& out, const IntervalReport& r) {
    for (const auto& v : r.properness_violations) {
        json j = with_schema("verify");
        j["kind"] = "properness";
        j["vertex"] = v.vertex;
        j["edges"] = {v.first, v.second};
        j["color"] = v.color;
        out << j.dump() << '\n';
    }
    for (const auto& v : r.gap_violations) {
        json j = with_schema("verify");
        j["kind"] = "gap";
        j["vertex"] = v.vertex;
        j["colors"] = v.colors;
        out << j.dump() << '\n';
    }
    for (Color c : r.unused_colors) {
        json j = with_schema("verify");
        j["kind"] = "unused";
        j["color"] = c;
        out << j.dump() << '\n';
    }
    for (const auto& v : r.out_of_range) {
        json j = with_schema("verify");
        j["kind"] = "out_of_range";
        j["edge"] = v.edge;
        j["color"] = v.color;
        out << j.dump() << '\n';
    }
    out << report_lines_summary(r).dump() << '\n';
}

/// Default factor coloring when none is given: the oracle's w or W witness.
EdgeColoring oracle_coloring(const Graph& g, bool widest, std::uint64_t budget) {
    auto r = oracle(g, OracleOptions{budget, true});
    if (r.witnesses.empty()) {
        if (r.member == false) {
            throw Error(ErrorCode::InvalidAlpha, "factor is not interval colorable");
        }
        throw Error(ErrorCode::BudgetExceeded, "no factor coloring found within budget");
    }
    return widest ? r.witnesses.rbegin()->second : r.witnesses.begin()->second;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

// --- subcommands -----------------------------------------------------------

struct GenArgs {
    std::string family;
    int n = -1;
    int m = -1;
    std::string dims;
    std::string out;
};

int cmd_gen(Context& ctx, const GenArgs& a) {
    FamilySpec spec{a.family, a.n, a.m, a.dims.empty() ? std::vector<int>{} : parse_int_list(a.dims)};
    Graph g = generate(spec);
    if (a.out.empty()) {
        write_graph(ctx.out, g);
        return kOk;
    }
    save_graph(a.out, g);
    if (ctx.json) {
        json j = with_schema("gen");
        j["vertices"] = g.num_vertices();
        j["edges"] = g.num_edges();
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    }
    return kOk;
}

struct ProductArgs {
    std::string kind;
    std::string left;
    std::string right;
    std::string out;
};

int cmd_product(Context& ctx, const ProductArgs& a) {
    auto kind = parse_product_kind(a.kind);
    if (!kind) throw Error(ErrorCode::BadParameter, "unknown product kind '" + a.kind + "'");
    auto p = product(*kind, load_graph(a.left), load_graph(a.right));
    save_graph(a.out, p.graph);
    std::ofstream prov(a.out + ".prov", std::ios::binary);
    if (!prov) throw Error(ErrorCode::ParseError, "cannot write " + a.out + ".prov");
    write_provenance(prov, p);
    if (ctx.json) {
        json j = with_schema("product");
        j["kind"] = std::string(to_string(*kind));
        j["vertices"] = p.graph.num_vertices();
        j["edges"] = p.graph.num_edges();
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << p.graph.num_vertices() << ' ' << p.graph.num_edges() << '\n';
    }
    return kOk;
}

struct ConstructArgs {
    std::string theorem;
    std::string left;
    std::string left_coloring;
    std::string right;
    std::string right_coloring;
    int n = -1;
    std::string out;
    std::string graph_out;
    std::optional<std::uint64_t> budget;
};

int cmd_construct(Context& ctx, const ConstructArgs& a) {
    const std::uint64_t budget = a.budget.value_or(default_budget());
    const std::string& th = a.theorem;
    static const std::vector<std::string> known = {"t2", "t12", "t13", "t14", "t16w", "t16W", "t17"};
    if (std::find(known.begin(), known.end(), th) == known.end()) {
        throw Error(ErrorCode::BadParameter, "unknown construction id '" + th + "'");
    }
    Graph g = load_graph(a.left);
    EdgeColoring alpha = a.left_coloring.empty() ? oracle_coloring(g, th == "t16W", budget)
                                                 : load_coloring(a.left_coloring, g).coloring;
    auto need_right = [&] {
        if (a.right.empty()) throw Error(ErrorCode::MissingParameter, th + " needs --right");
        return load_graph(a.right);
    };

    Construction c;
    if (th == "t16w" || th == "t16W") {
        if (a.n < 0) throw Error(ErrorCode::MissingParameter, th + " needs --n");
        c = lex_empty_interval(g, alpha, a.n, th == "t16w" ? LexForm::w_form : LexForm::W_form);
    } else {
        Graph h = need_right();
        if (th == "t2") {
            EdgeColoring alpha_h = a.right_coloring.empty()
                                       ? oracle_coloring(h, false, budget)
                                       : load_coloring(a.right_coloring, h).coloring;
            c = cartesian_interval(g, alpha, h, alpha_h);
        } else if (th == "t12") {
            c = tensor_interval(g, alpha, h);
        } else if (th == "t13") {
            c = strong_tensor_interval(g, alpha, h);
        } else if (th == "t14") {
            c = strong_interval(g, alpha, h, budget);
        } else {
            c = lex_regular_interval(g, alpha, h, budget);
        }
    }
    save_coloring(a.out, c.product.graph, c.coloring, c.t);
    if (!a.graph_out.empty()) save_graph(a.graph_out, c.product.graph);

    if (ctx.json) {
        json j = with_schema("construct");
        j["theorem"] = th;
        j["t"] = c.t;
        j["vertices"] = c.product.graph.num_vertices();
        j["edges"] = c.product.graph.num_edges();
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << th << ": interval " << c.t << "-coloring of a graph with "
                << c.product.graph.num_vertices() << " vertices and "
                << c.product.graph.num_edges() << " edges\n";
    }
    return kOk;
}

struct VerifyArgs {
    std::string graph;
    std::string coloring;
    std::optional<int> t;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
    Graph g = load_graph(a.graph);
    auto file = load_coloring(a.coloring, g);
    auto report = verify_interval(g, file.coloring, a.t.value_or(file.t));
    print_report(ctx.out, report);
    return report.valid ? kOk : kNegative;
}

struct OracleArgs {
    std::string graph;
    std::optional<int> t;
    std::optional<std::uint64_t> budget;
    std::string out;
};

int cmd_oracle(Context& ctx, const OracleArgs& a) {
    Graph g = load_graph(a.graph);
    const std::uint64_t budget = a.budget.value_or(default_budget());
    if (a.t) {
        auto s = find_interval_coloring(g, *a.t, budget);
        if (s.coloring && !a.out.empty()) save_coloring(a.out, g, *s.coloring, *a.t);
        if (ctx.json) {
            json j = with_schema("oracle");
            j["t"] = *a.t;
            j["status"] = std::string(to_string(s.status));
            j["nodes"] = s.nodes;
            ctx.out << j.dump() << '\n';
        } else {
            ctx.out << "t=" << *a.t << ": " << to_string(s.status) << " (" << s.nodes << " nodes)\n";
        }
        switch (s.status) {
            case SearchStatus::found: return kOk;
            case SearchStatus::absent: return kNegative;
            case SearchStatus::budget_exceeded: return kUnknown;
        }
    }

    auto r = oracle(g, OracleOptions{budget, true});
    if (!a.out.empty() && !r.witnesses.empty()) {
        const auto& [t, col] = *r.witnesses.begin();
        save_coloring(a.out, g, col, t);
    }
    if (ctx.json) {
        json j = with_schema("oracle");
        j["member"] = r.member ? json(*r.member) : json(nullptr);
        j["w"] = r.w ? json(*r.w) : json(nullptr);
        j["W"] = r.W ? json(*r.W) : json(nullptr);
        j["nodes"] = r.nodes_explored;
        j["status"] = r.complete ? "complete" : "partial";
        ctx.out << j.dump() << '\n';
    } else {
        auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
        ctx.out << "member: " << (r.member ? (*r.member ? "yes" : "no") : "unknown") << '\n'
                << "w: " << opt(r.w) << '\n'
                << "W: " << opt(r.W) << '\n'
                << "nodes: " << r.nodes_explored << '\n'
                << "status: " << (r.complete ? "complete" : "partial") << '\n';
    }
    if (!r.complete) return kUnknown;
    return *r.member ? kOk : kNegative;
}

struct BoundsArgs {
    std::string theorem;
    std::string params;
};

int cmd_bounds(Context& ctx, const BoundsArgs& a) {
    auto b = bound_report(a.theorem, parse_params(a.params));
    if (ctx.json) {
        json j = with_schema("bounds");
        j["source"] = b.source;
        j["kind"] = b.kind ? json(std::string(to_string(*b.kind))) : json(nullptr);
        j["w_upper"] = b.w_upper ? json(*b.w_upper) : json(nullptr);
        j["W_lower"] = b.W_lower ? json(*b.W_lower) : json(nullptr);
        ctx.out << j.dump() << '\n';
    } else {
        if (b.w_upper) ctx.out << "w <= " << *b.w_upper << '\n';
        if (b.W_lower) ctx.out << "W >= " << *b.W_lower << '\n';
    }
    return kOk;
}

struct MembershipArgs {
    std::string family;
    std::string dims;
};

int cmd_membership(Context& ctx, const MembershipArgs& a) {
    MembershipFamily fam;
    if (a.family == "torus") fam = MembershipFamily::torus;
    else if (a.family == "hamming") fam = MembershipFamily::hamming;
    else throw Error(ErrorCode::BadParameter, "family must be torus or hamming");
    bool member = torus_hamming_membership(parse_int_list(a.dims), fam);
    if (ctx.json) {
        json j = with_schema("membership");
        j["family"] = a.family;
        j["dims"] = parse_int_list(a.dims);
        j["member"] = member;
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << (member ? "interval colorable" : "not interval colorable") << '\n';
    }
    return member ? kOk : kNegative;
}

struct DotArgs {
    std::string graph;
    std::string coloring;
    std::string out;
};

int cmd_export_dot(Context& ctx, const DotArgs& a) {
    Graph g = load_graph(a.graph);
    auto file = load_coloring(a.coloring, g);
    if (a.out.empty()) {
        write_dot(ctx.out, g, file.coloring);
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + a.out);
        write_dot(f, g, file.coloring);
    }
    return kOk;
}

struct ChiArgs {
    std::string graph;
    std::optional<std::uint64_t> budget;
    std::string out;
};

int cmd_chi_prime(Context& ctx, const ChiArgs& a) {
    Graph g = load_graph(a.graph);
    auto r = exact_chromatic_index(g, a.budget.value_or(default_budget()));
    if (!a.out.empty()) save_coloring(a.out, g, r.witness, r.chi_prime);
    const int delta = degree_profile(g).max_degree;
    if (ctx.json) {
        json j = with_schema("chi-prime");
        j["chi_prime"] = r.chi_prime;
        j["delta"] = delta;
        j["class1"] = r.class1;
        j["nodes"] = r.nodes;
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << "chi' = " << r.chi_prime << " (Delta = " << delta << ", class "
                << (r.class1 ? 1 : 2) << ")\n";
    }
    return kOk;
}

struct BipartiteArgs {
    std::string graph;
    std::string out;
};

int cmd_bipartite_color(Context& ctx, const BipartiteArgs& a) {
    Graph g = load_graph(a.graph);
    auto c = bipartite_regular_coloring(g);
    const int t = c.max_color();
    if (a.out.empty()) {
        write_coloring(ctx.out, g, c, t);
    } else {
        save_coloring(a.out, g, c, t);
        ctx.out << "t=" << t << '\n';
    }
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return kUnknown;
        case ErrorCode::ConstructionFailed: return kNegative;
        default: return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval edge colorings of graph products", "ivc"};
    app.require_subcommand(1);
    Context ctx{out, err};

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json, "JSON output"); };

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "Generate a named graph family");
    s_gen->add_option("--family", gen.family, "P C K E Kmn Q petersen K113 K13e grid cylinder torus hamming")->required();
    s_gen->add_option("--n", gen.n);
    s_gen->add_option("--m", gen.m);
    s_gen->add_option("--dims", gen.dims, "comma-separated sizes");
    s_gen->add_option("--out", gen.out);
    add_json(s_gen);

    ProductArgs prod;
    auto* s_prod = app.add_subcommand("product", "Build a graph product");
    s_prod->add_option("--kind", prod.kind, "cartesian tensor strong-tensor strong lex")->required();
    s_prod->add_option("--left", prod.left)->required();
    s_prod->add_option("--right", prod.right)->required();
    s_prod->add_option("--out", prod.out)->required();
    add_json(s_prod);

    ConstructArgs con;
    auto* s_con = app.add_subcommand("construct", "Interval coloring of a product from a factor coloring");
    s_con->add_option("--theorem", con.theorem, "t2 t12 t13 t14 t16w t16W t17")->required();
    s_con->add_option("--left", con.left)->required();
    s_con->add_option("--left-coloring", con.left_coloring);
    s_con->add_option("--right", con.right);
    s_con->add_option("--right-coloring", con.right_coloring);
    s_con->add_option("--n", con.n, "copies for t16w/t16W");
    s_con->add_option("--out", con.out)->required();
    s_con->add_option("--graph-out", con.graph_out, "also write the product graph");
    s_con->add_option("--budget", con.budget);
    add_json(s_con);

    VerifyArgs ver;
    auto* s_ver = app.add_subcommand("verify", "Check an interval coloring; JSON-lines report");
    s_ver->add_option("graph", ver.graph)->required();
    s_ver->add_option("coloring", ver.coloring)->required();
    s_ver->add_option("--t", ver.t, "declared t (default: coloring header)");

    OracleArgs orc;
    auto* s_orc = app.add_subcommand("oracle", "Exhaustive membership, w and W");
    s_orc->add_option("graph", orc.graph)->required();
    s_orc->add_option("--t", orc.t, "probe a single t");
    s_orc->add_option("--budget", orc.budget);
    s_orc->add_option("--out", orc.out, "write a witness coloring");
    add_json(s_orc);

    BoundsArgs bnd;
    auto* s_bnd = app.add_subcommand("bounds", "Evaluate bound formulas by id");
    s_bnd->add_option("--theorem", bnd.theorem)->required();
    s_bnd->add_option("--params", bnd.params, "k=v,...");
    add_json(s_bnd);

    MembershipArgs mem;
    auto* s_mem = app.add_subcommand("membership", "Parity decision for tori and Hamming graphs");
    s_mem->add_option("--family", mem.family, "torus or hamming")->required();
    s_mem->add_option("--dims", mem.dims)->required();
    add_json(s_mem);

    DotArgs dot;
    auto* s_dot = app.add_subcommand("export-dot", "Graphviz export of a colored graph");
    s_dot->add_option("graph", dot.graph)->required();
    s_dot->add_option("coloring", dot.coloring)->required();
    s_dot->add_option("--out", dot.out);

    ChiArgs chi;
    auto* s_chi = app.add_subcommand("chi-prime", "Exact chromatic index");
    s_chi->add_option("graph", chi.graph)->required();
    s_chi->add_option("--budget", chi.budget);
    s_chi->add_option("--out", chi.out, "write the witness coloring");
    add_json(s_chi);

    BipartiteArgs bip;
    auto* s_bip = app.add_subcommand("bipartite-color", "Konig coloring of a regular bipartite graph");
    s_bip->add_option("graph", bip.graph)->required();
    s_bip->add_option("--out", bip.out);

    std::vector<const char*> argv{"ivc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (s_gen->parsed()) return cmd_gen(ctx, gen);
        if (s_prod->parsed()) return cmd_product(ctx, prod);
        if (s_con->parsed()) return cmd_construct(ctx, con);
        if (s_ver->parsed()) return cmd_verify(ctx, ver);
        if (s_orc->parsed()) return cmd_oracle(ctx, orc);
        if (s_bnd->parsed()) return cmd_bounds(ctx, bnd);
        if (s_mem->parsed()) return cmd_membership(ctx, mem);
        if (s_dot->parsed()) return cmd_export_dot(ctx, dot);
        if (s_chi->parsed()) return cmd_chi_prime(ctx, chi);
        if (s_bip->parsed()) return cmd_bipartite_color(ctx, bip);
    } catch (const Error& e) {
        err << "ivc: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

}  // namespace ivc::cli

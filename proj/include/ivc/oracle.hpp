#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"
#include "ivc/proper_coloring.hpp"

namespace ivc {

enum class SearchStatus { found, absent, budget_exceeded };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::absent;
    std::optional<EdgeColoring> coloring;
    std::uint64_t nodes = 0;
};

/// Largest t worth probing: 2|V| - 4 for |V| >= 3, 2|V| - 3 below that,
/// and never less than Delta.
int search_ceiling(const Graph& g);

/// Exhaustive search for an interval t-coloring of g.
///
/// Edges are assigned in BFS order from vertex 0, colors ascending, so the
/// witness is the first one in that order. Prunes on properness, on each
/// vertex's spectrum still fitting a degree-length window inside [1, t], and
/// on color distances: two edges joined through vertices of degrees d1..dk
/// differ by at most sum(d - 1). The global reflection c -> t + 1 - c is
/// broken on the first edge. Throws BadParameter for t > 64.
SearchOutcome find_interval_coloring(const Graph& g, int t, std::uint64_t budget = kDefaultBudget);

struct OracleOptions {
    /// Total node budget over all probes.
    std::uint64_t budget = kDefaultBudget;
    /// For regular graphs, feasible t are contiguous from Delta: stop at
    /// the first absent t, and at t = Delta decide membership outright.
    bool regular_shortcut = true;
};

struct OracleResult {
    /// True when every probe needed for member, w and W resolved.
    bool complete = false;
    std::optional<bool> member;
    std::optional<int> w;
    std::optional<int> W;
    std::map<int, EdgeColoring> witnesses;
    std::map<int, SearchStatus> probes;
    int ceiling = 0;
    std::uint64_t nodes_explored = 0;
};

/// Membership in the interval-colorable class and exact w, W for small graphs.
/// A budget overrun yields complete = false with whatever is already proven.
/// Disconnected graphs are solved per component and recombined; their
/// witnesses are shifted component witnesses.
OracleResult oracle(const Graph& g, const OracleOptions& options = {});

struct CrossValidation {
    enum class Status { consistent, partial, contradiction };
    Status status = Status::consistent;
    std::vector<std::string> notes;
};

std::string_view to_string(CrossValidation::Status s);

/// Checks a construction's color count against the oracle for the same
/// product graph. A contradiction means one side is wrong.
CrossValidation cross_validate(int construction_colors, const OracleResult& result);

}  // namespace ivc

#pragma once

#include <string>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

Graph path_graph(int n);                        // P_n, n >= 1
Graph cycle_graph(int n);                       // C_n, n >= 3
Graph complete_graph(int n);                    // K_n, n >= 1
Graph complete_bipartite_graph(int m, int n);   // K_{m,n}
Graph empty_graph(int n);                       // nK1
Graph hypercube_graph(int n);                   // Q_n as the n-fold Cartesian power of K2
Graph petersen_graph();
Graph k113_graph();                             // K_{1,1,3}
Graph k13_plus_e_graph();                       // K_{1,3} plus an edge between two leaves

Graph grid_graph(const std::vector<int>& dims);  // P_{n1} [] ... [] P_{nk}
Graph cylinder_graph(int m, int n);             // P_m [] C_n
/// C_a [] C_b. A side of length 2 is taken as K2, the simple graph under a 2-cycle.
Graph torus_graph(int a, int b);
Graph hamming_graph(const std::vector<int>& dims);  // K_{n1} [] ... [] K_{nk}

/// Named family with parameters, as accepted by the CLI `gen` command.
///
/// Names: P, C, K, E (empty), Kmn, Q, petersen, K113, K13e, grid, cylinder,
/// torus, hamming. `n`/`m` are scalar parameters, `dims` a list.
struct FamilySpec {
    std::string name;
    int n = -1;
    int m = -1;
    std::vector<int> dims;
};

/// Throws BadParameter for unknown names or out-of-range parameters.
Graph generate(const FamilySpec& spec);

}  // namespace ivc

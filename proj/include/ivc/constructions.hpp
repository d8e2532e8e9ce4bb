#pragma once

#include <cstdint>
#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"
#include "ivc/product.hpp"
#include "ivc/proper_coloring.hpp"

namespace ivc {

/// A product graph together with an interval coloring built for it.
struct Construction {
    ProductGraph product;
    EdgeColoring coloring;
    int t = 0;  // number of colors; the coloring is an interval t-coloring
};

// Every constructor below validates its input coloring (InvalidAlpha when it
// is not an interval coloring) and re-verifies its own output, throwing
// ConstructionFailed rather than returning an unchecked coloring.
//
// Cross edges ((i,p),(j,q)) of a product are always oriented with i < j; the
// i-side copy of H plays the x side of the K2 double cover, the j-side the y side.

/// Interval r-coloring of an r-regular class-1 graph: the Konig coloring when
/// h is bipartite, else the exact chromatic index witness. An edgeless h gets
/// the empty coloring. Throws NotRegular, NotClass1, BudgetExceeded.
EdgeColoring regular_interval_coloring(const Graph& h, std::uint64_t budget = kDefaultBudget);

/// G x H for r-regular H (r >= 1): (alpha - 1) * r + beta on K2 x H.
/// Uses exactly t * r colors.
Construction tensor_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h);

/// G (x) H for r-regular H: stride r + 1 over beta on K2 (x) H.
/// Uses exactly t * (r + 1) colors.
Construction strong_tensor_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h);

/// G [x] H for r-regular class-1 H. The strong-tensor part is colored as in
/// strong_tensor_interval; the copy of H at u_i is colored with an interval
/// r-coloring of H shifted by max S(u_i) * (r + 1).
/// Uses exactly t * (r + 1) + r colors.
Construction strong_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                             std::uint64_t budget = kDefaultBudget);

enum class LexForm {
    w_form,  // t * n colors
    W_form,  // t * n + n - 1 colors
};

/// G[nK1]. With 1-based copy indices p, q:
///   w_form: (alpha - 1) * n + ((p + q - 1) mod n), or alpha * n when p + q = n + 1;
///   W_form: (alpha - 1) * n + p + q - 1.
/// Throws BadN when n < 1.
Construction lex_empty_interval(const Graph& g, const EdgeColoring& alpha, int n, LexForm form);

/// G[H] for r-regular class-1 H on n vertices: cross edges get r plus the
/// w_form value, the copy of H at u_i gets (min S(u_i) - 1) * n plus an
/// interval r-coloring of H. Uses exactly t * n + r colors.
Construction lex_regular_interval(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                                  std::uint64_t budget = kDefaultBudget);

/// G [] H from interval colorings of both factors. A G-layer edge at right
/// vertex v_p is shifted by min S(v_p) - 1, an H-layer edge at left vertex u_i
/// by max S(u_i). Uses at most tG + tH colors.
Construction cartesian_interval(const Graph& g, const EdgeColoring& alpha_g, const Graph& h,
                                const EdgeColoring& alpha_h);

enum class MembershipFamily { torus, hamming };

/// Parity decision for tori C_a [] C_b and Hamming graphs: member iff the
/// product of the dimensions is even. A torus side of 2 is read as K2.
/// Throws BadDims.
bool torus_hamming_membership(const std::vector<int>& dims, MembershipFamily family);

}  // namespace ivc

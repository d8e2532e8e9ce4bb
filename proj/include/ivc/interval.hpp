#pragma once

#include <vector>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

/// Colors on the edges at one vertex.
struct Spectrum {
    Vertex vertex = 0;
    std::vector<Color> colors;  // sorted, distinct
    Color lo = 0;               // 0 when empty
    Color hi = 0;

    bool empty() const { return colors.empty(); }
    bool is_interval() const {
        return colors.empty() || static_cast<int>(colors.size()) == hi - lo + 1;
    }
};

Spectrum spectrum(const Graph& g, const EdgeColoring& c, Vertex v);

struct PropernessViolation {
    Vertex vertex;
    EdgeId first;
    EdgeId second;
    Color color;
};

struct GapViolation {
    Vertex vertex;
    std::vector<Color> colors;
};

struct OutOfRangeColor {
    EdgeId edge;
    Color color;
};

/// Outcome of checking a coloring against the interval t-coloring definition.
/// All violations are collected, not just the first.
struct IntervalReport {
    bool valid = false;
    int t = 0;
    std::vector<PropernessViolation> properness_violations;
    std::vector<GapViolation> gap_violations;
    std::vector<Color> unused_colors;
    /// Edges whose color lies outside 1..t (including uncolored edges).
    std::vector<OutOfRangeColor> out_of_range;
};

/// Throws BadParameter if the coloring does not have one entry per edge.
IntervalReport verify_interval(const Graph& g, const EdgeColoring& c, int t);

/// Convenience: verify with t taken as the largest color used.
inline IntervalReport verify_interval(const Graph& g, const EdgeColoring& c) {
    return verify_interval(g, c, c.max_color());
}

/// Adds offset (>= 0) to every color. Throws BadParameter on negative offset.
EdgeColoring shift(const EdgeColoring& c, int offset);

/// Per-vertex min and max color of a coloring; an edgeless vertex reports
/// the empty interval lo = 1, hi = 0 so that offsets built from it vanish.
struct SpectrumBounds {
    std::vector<Color> lo;
    std::vector<Color> hi;
};

SpectrumBounds spectrum_bounds(const Graph& g, const EdgeColoring& c);

}  // namespace ivc

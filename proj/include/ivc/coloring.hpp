#pragma once

#include <cstdint>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

/// Colors indexed by edge id. Colors are 1-based; 0 marks an uncolored edge
/// and only appears inside searches.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}
    explicit EdgeColoring(std::size_t num_edges) : colors_(num_edges, 0) {}

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    Color& operator[](EdgeId e) { return colors_[static_cast<std::size_t>(e)]; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    /// Sorted distinct colors.
    std::vector<Color> palette() const;
    /// Number of distinct colors.
    int num_colors() const { return static_cast<int>(palette().size()); }
    Color max_color() const;

    /// True when adjacent edges always differ (uncolored edges are ignored).
    bool is_proper(const Graph& g) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
};

}  // namespace ivc

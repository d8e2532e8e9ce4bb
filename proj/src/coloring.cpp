#include "ivc/coloring.hpp"

#include <algorithm>

namespace ivc {

std::vector<Color> EdgeColoring::palette() const {
    std::vector<Color> p;
    for (Color c : colors_)
        if (c > 0) p.push_back(c);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

Color EdgeColoring::max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

bool EdgeColoring::is_proper(const Graph& g) const {
    if (colors_.size() != static_cast<std::size_t>(g.num_edges())) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<Color> seen;
        for (EdgeId e : g.incident_edges(v))
            if ((*this)[e] > 0) seen.push_back((*this)[e]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

}  // namespace ivc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/numeric.hpp"

namespace forge {

/// Finite multigraph; loops allowed, edges unordered vertex pairs (1-indexed).
struct MultiGraph {
    int p = 0;
    std::vector<std::pair<int, int>> edges;

    int q() const { return static_cast<int>(edges.size()); }
    void check() const;  // endpoint ranges

    bool has_loop() const;
    bool connected() const;
    std::optional<std::vector<int>> bipartition() const;  // 2-coloring, empty if none
    std::optional<int> regular_degree() const;

    std::vector<int> degrees() const;
};

MultiGraph cycle_graph(int n);
MultiGraph complete_bipartite(int a, int b);

}  // namespace forge

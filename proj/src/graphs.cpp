#include "forge/graphs.hpp"

#include <algorithm>

namespace forge {

void MultiGraph::check() const {
    if (p < 1) throw input_error("graph must have at least one vertex");
    for (auto [u, v] : edges)
        if (u < 1 || u > p || v < 1 || v > p) throw input_error("edge endpoint out of range");
}

bool MultiGraph::has_loop() const {
    for (auto [u, v] : edges)
        if (u == v) return true;
    return false;
}

std::vector<int> MultiGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(p), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

bool MultiGraph::connected() const {
    if (p == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u - 1)].push_back(v - 1);
        adj[static_cast<std::size_t>(v - 1)].push_back(u - 1);
    }
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == p;
}

std::optional<std::vector<int>> MultiGraph::bipartition() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p));
    for (auto [u, v] : edges) {
        if (u == v) return std::nullopt;
        adj[static_cast<std::size_t>(u - 1)].push_back(v - 1);
        adj[static_cast<std::size_t>(v - 1)].push_back(u - 1);
    }
    std::vector<int> color(static_cast<std::size_t>(p), -1);
    for (int s = 0; s < p; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<int> MultiGraph::regular_degree() const {
    std::vector<int> deg = degrees();
    if (deg.empty()) return std::nullopt;
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

MultiGraph cycle_graph(int n) {
    MultiGraph g;
    g.p = n;
    for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, i % n + 1);
    return g;
}

MultiGraph complete_bipartite(int a, int b) {
    MultiGraph g;
    g.p = a + b;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) g.edges.emplace_back(i, a + j);
    return g;
}

}  // namespace forge

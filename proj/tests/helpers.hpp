#pragma once

#include <vector>

#include "forge/polytope.hpp"

namespace forge::testing {

inline LinearForm form(std::vector<Int> normal, Int offset) {
    return LinearForm{std::move(normal), std::move(offset)};
}

/// [0,1]^2 with the four edge facets.
inline IntegerPolytope unit_square() {
    IntegerPolytope p;
    p.id = "unit_square";
    p.ambient_dim = 2;
    p.vertices = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    p.facets.push_back(form({-1, 0}, 0));
    p.facets.push_back(form({0, -1}, 0));
    p.facets.push_back(form({1, 0}, 1));
    p.facets.push_back(form({0, 1}, 1));
    require_valid(p);
    return p;
}

/// conv{(0,0),(1,0),(0,1)}.
inline IntegerPolytope unit_triangle() {
    IntegerPolytope p;
    p.id = "unit_triangle";
    p.ambient_dim = 2;
    p.vertices = {{0, 0}, {0, 1}, {1, 0}};
    p.facets.push_back(form({-1, 0}, 0));
    p.facets.push_back(form({0, -1}, 0));
    p.facets.push_back(form({1, 1}, 1));
    require_valid(p);
    return p;
}

/// conv{±e_1, ±e_2, ±e_3}: eight facets ±x±y±z <= 1.
inline IntegerPolytope octahedron() {
    IntegerPolytope p;
    p.id = "octahedron";
    p.ambient_dim = 3;
    p.vertices = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) p.facets.push_back(form({sx, sy, sz}, 1));
    require_valid(p);
    return p;
}

/// A single integer point.
inline IntegerPolytope point_polytope() {
    IntegerPolytope p;
    p.id = "point";
    p.ambient_dim = 1;
    p.vertices = {{1}};
    p.equalities.push_back(form({1}, 1));
    require_valid(p);
    return p;
}

/// Segment from (0,0) to (2,0); the lattice of its hull is finer than the
/// vertex differences.
inline IntegerPolytope long_segment() {
    IntegerPolytope p;
    p.id = "long_segment";
    p.ambient_dim = 2;
    p.vertices = {{0, 0}, {2, 0}};
    p.facets.push_back(form({-1, 0}, 0));
    p.facets.push_back(form({1, 0}, 2));
    p.equalities.push_back(form({0, 1}, 0));
    require_valid(p);
    return p;
}

/// [0,2]x[0,1]: integer rectangle whose long edges break unimodularity.
inline IntegerPolytope rectangle_2x1() {
    IntegerPolytope p;
    p.id = "rectangle_2x1";
    p.ambient_dim = 2;
    p.vertices = {{0, 0}, {0, 1}, {2, 0}, {2, 1}};
    p.facets.push_back(form({-1, 0}, 0));
    p.facets.push_back(form({0, -1}, 0));
    p.facets.push_back(form({1, 0}, 2));
    p.facets.push_back(form({0, 1}, 1));
    require_valid(p);
    return p;
}

/// Deterministic Fisher-Yates with a tiny LCG, so shuffles are identical
/// across platforms.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
};

inline std::vector<int> shuffled_range(int n, std::uint64_t seed) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    Lcg rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
    return v;
}

}  // namespace forge::testing

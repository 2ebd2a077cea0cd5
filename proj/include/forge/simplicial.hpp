#pragma once

#include <set>
#include <string>
#include <vector>

#include "forge/macaulay.hpp"
#include "forge/numeric.hpp"
#include "forge/polynomial.hpp"

namespace forge {

/// Abstract simplicial complex given by its maximal faces (sorted vertex
/// labels, mutually incomparable). The complex {∅} — one empty maximal face —
/// is the identity for joins and has h-polynomial 1; it is distinct from the
/// void complex, which has no faces at all.
struct SimplicialComplex {
    std::vector<std::vector<int>> maximal_faces;

    static SimplicialComplex empty_face_complex() { return SimplicialComplex{{{}}}; }

    bool is_void() const { return maximal_faces.empty(); }
    /// dimension = max face size - 1; the complex {∅} has dimension -1
    int dimension() const;
    bool is_pure() const;
    std::size_t vertex_count() const;
    std::vector<int> vertices() const;

    bool contains_face(const std::vector<int>& face) const;

    /// Canonical form: faces sorted internally and lexicographically, duplicates
    /// and dominated faces removed.
    void canonicalize();

    bool operator==(const SimplicialComplex& o) const { return maximal_faces == o.maximal_faces; }
};

/// Face counts (f_0, ..., f_{dim}) via downward closure of the maximal faces.
std::vector<Int> f_vector(const SimplicialComplex& c);

/// h-polynomial computed from the f-vector with d = dimension + 1.
IntPolynomial h_polynomial(const SimplicialComplex& c);

/// Reduced Euler characteristic shifted: sum_i (-1)^i f_i.
Int euler_characteristic(const SimplicialComplex& c);

/// Join: faces are unions of faces. Vertex label sets must be disjoint.
SimplicialComplex simplicial_join(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace forge

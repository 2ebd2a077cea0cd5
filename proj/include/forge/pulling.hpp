#pragma once

#include <string>
#include <vector>

#include "forge/polytope.hpp"
#include "forge/simplicial.hpp"

namespace forge {

/// Pull order over a polytope's vertex indices. seq[0] is coned first: the
/// recursion cones seq[0] over the triangulated faces that avoid it, then
/// proceeds with seq[1] on what is left. The classical reverse-lexicographic
/// notation writes the same order with seq[0] last, so a simplex that must
/// appear in every maximal cell (it is coned innermost) goes at the front
/// here.
struct VertexOrder {
    std::vector<int> seq;
};

/// Downward-closed subset of a polytope's face lattice.
struct PolytopalComplex {
    const FaceLattice* lat = nullptr;
    std::vector<char> member;  // by face id

    bool has_vertex(int v) const { return member[static_cast<std::size_t>(lat->vertex_face_ids[static_cast<std::size_t>(v)])] != 0; }
    std::vector<int> maximal_faces() const;
};

PolytopalComplex face_complex(const FaceLattice& lat);
PolytopalComplex boundary_complex(const FaceLattice& lat);

/// Subcomplex of the faces containing no vertex of sigma.
PolytopalComplex restrict_complex(const PolytopalComplex& c, const std::vector<int>& sigma);

/// Reverse-lexicographic (pulling) triangulation by the recursive definition:
/// cone the front vertex of the order over the triangulations of the facets
/// (of maximal faces containing it) that avoid it, then recurse on the
/// subcomplex without that vertex. Deterministic in (complex, order); returns
/// the set of maximal simplices. The order must cover the complex's vertices.
SimplicialComplex pulling_triangulation(const PolytopalComplex& c, const VertexOrder& order);

/// Independent construction from the flag characterization: a maximal simplex
/// is the apex set of a maximal flag F_0 ⊂ ... ⊂ F_t in which each F_j's
/// front-most vertex is outside F_{j-1}. Used as a cross-check oracle.
SimplicialComplex pulling_triangulation_flags(const PolytopalComplex& c, const VertexOrder& order);

struct UnimodularityResult {
    bool ok = false;
    std::string message;
    std::vector<int> bad_simplex;
};

/// Every maximal simplex must be unimodular with respect to the saturated
/// lattice of the affine hull; also checks purity and vertex coverage.
UnimodularityResult is_unimodular_triangulation(const IntegerPolytope& p, const LatticeBasis& basis,
                                                const SimplicialComplex& tri);

struct CompressednessResult {
    bool ok = false;
    SimplicialComplex triangulation;  // of the full face complex
    UnimodularityResult detail;
};

CompressednessResult is_compressed_ordering(const IntegerPolytope& p, const FaceLattice& lat,
                                            const LatticeBasis& basis, const VertexOrder& order);

/// Decomposes the pulling triangulation of a polytope whose order starts with
/// a special simplex: checks that every maximal cell is (simplex ∪ s) for the
/// maximal cells s of the triangulation of the faces avoiding the simplex,
/// and that the latter complex matches the quotient polytope's boundary
/// (sphere certificate).
struct JoinDecomposition {
    bool ok = false;
    bool join_ok = false;
    bool sphere_ok = false;
    std::string message;
    SimplicialComplex delta;  // triangulation of the faces avoiding sigma
    IntPolynomial h_delta;
    QuotientPolytope quotient;
};

JoinDecomposition join_decomposition_check(const IntegerPolytope& p, const FaceLattice& lat,
                                           const std::vector<int>& sigma, const VertexOrder& order,
                                           const SimplicialComplex* precomputed_full = nullptr);

}  // namespace forge

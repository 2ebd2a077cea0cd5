#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forge/linalg.hpp"
#include "forge/numeric.hpp"
#include "forge/vset.hpp"

namespace forge {

struct LinearForm {
    std::vector<Int> normal;
    Int offset;
};

/// An integer polytope with both representations supplied by a builder or a
/// file. `facets` are inequalities normal.x <= offset, each tight exactly on
/// that facet's vertex set; `equalities` cut out the affine hull. No convex
/// hull computation happens anywhere: validate() cross-checks the two
/// representations instead.
struct IntegerPolytope {
    int ambient_dim = 0;
    std::vector<std::vector<Int>> vertices;
    std::vector<LinearForm> facets;
    std::vector<LinearForm> equalities;
    std::string id;

    // caches filled by validate_polytope
    int dim = -1;
    std::vector<VSet> facet_tight;  // vertex set on which facet i is tight
    bool validated = false;

    Int facet_slack(int facet, int vertex) const;
};

struct ValidationReport {
    bool ok = false;
    std::string message;
    int vertex = -1;
    int facet = -1;
    int dim = -1;
};

/// Checks every structural invariant and fills the dimension and incidence
/// caches. Returns the first violation found.
ValidationReport validate_polytope(IntegerPolytope& p);

/// Throws input_error unless the polytope validates.
void require_valid(IntegerPolytope& p);

/// Basis of the saturated lattice (affine hull - origin) intersected with Z^q.
/// Every vertex difference has integer coordinates in this basis.
struct LatticeBasis {
    std::vector<Int> origin;
    IntMat basis;  // m rows, each of length q

    int rank() const { return static_cast<int>(basis.size()); }
    /// Coordinates of an integer point of the affine hull relative to origin.
    /// Throws input_error when the point is outside the lattice or hull.
    std::vector<Int> coords(const std::vector<Int>& point) const;

    // cached solver state (pivot columns of basis and the inverse of that block)
    std::vector<int> pivot_cols;
    RatMat pivot_inverse;
};

LatticeBasis saturated_lattice_basis(const IntegerPolytope& p);

/// True iff the m+1 points (given by vertex index) span a simplex whose edge
/// vectors form a determinant +-1 matrix in lattice coordinates.
bool is_unimodular_simplex(const IntegerPolytope& p, const LatticeBasis& basis,
                           const std::vector<int>& simplex_vertices);

/// The full face lattice: all nonempty faces obtained by intersecting facet
/// tight sets, plus the polytope itself. Faces are vertex sets; `children`
/// lists the codimension-1 subfaces of each face.
struct FaceLattice {
    std::vector<VSet> faces;        // canonical order: by (dimension, vertex set)
    std::vector<int> dim;
    std::vector<std::vector<int>> children;          // codim-1 subfaces
    std::vector<std::vector<int>> containing_facets; // polytope facets containing the face
    int top = -1;                                    // index of the whole polytope
    int n_vertices = 0;

    std::unordered_map<VSet, int, VSetHash> index;
    std::vector<int> vertex_face_ids;  // face id of each singleton

    int index_of(const VSet& f) const {
        auto it = index.find(f);
        return it == index.end() ? -1 : it->second;
    }
};

FaceLattice build_face_lattice(const IntegerPolytope& p, std::size_t max_faces = 1000000);

struct SpecialSimplexCertificate {
    std::vector<int> vertex_indices;
    std::vector<Int> per_facet_counts;
    int n = 0;
    bool ok = false;
    int first_bad_facet = -1;
    std::string message;
};

/// Verifies that each facet of P contains exactly n-1 of the given vertices
/// (and that they are affinely independent).
SpecialSimplexCertificate verify_special_simplex(const IntegerPolytope& p,
                                                 const std::vector<int>& sigma);

enum class SearchOutcome { found, none, inconclusive };

struct SpecialSimplexSearch {
    SearchOutcome outcome = SearchOutcome::none;
    SpecialSimplexCertificate cert;
    std::string note;
};

/// With a hint vector beta: looks for vertices with pairwise disjoint supports
/// summing to beta. Without: exhaustive over vertex subsets up to size_bound.
SpecialSimplexSearch find_special_simplex(const IntegerPolytope& p,
                                          const std::vector<Int>* hint_beta = nullptr,
                                          int size_bound = 12, int vertex_bound = 64);

/// Exhaustive face-lattice scan: every face of codimension k (1 <= k <= n-1)
/// must contain at least n-k of the simplex vertices. Returns a witness face
/// description on failure.
struct FaceScanResult {
    bool ok = false;
    std::string witness;
};
FaceScanResult special_simplex_face_scan(const IntegerPolytope& p, const FaceLattice& lat,
                                         const SpecialSimplexCertificate& cert);

/// Quotient of P by the linear span of the simplex directions, with the
/// boundary complex recovered and checked against the faces of P avoiding the
/// simplex (inclusion-preserving vertex-set bijection).
struct QuotientPolytope {
    int dim = -1;                              // m - n + 1
    std::vector<std::vector<Rat>> vertices;    // images of the non-sigma vertices
    std::vector<int> vertex_map;               // P vertex -> Q vertex (-1 for sigma)
    std::vector<Rat> sigma_image;              // common image of the sigma vertices
    std::vector<VSet> boundary_faces;          // proper faces of Q, as Q-vertex sets
    bool iso_checked = false;
    bool iso_ok = false;
    std::string message;
};

QuotientPolytope quotient_polytope(const IntegerPolytope& p, const FaceLattice& lat,
                                   const std::vector<int>& sigma);

}  // namespace forge

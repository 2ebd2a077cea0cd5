#pragma once

#include <optional>
#include <vector>

#include "forge/graphs.hpp"
#include "forge/polytope.hpp"
#include "forge/poset.hpp"
#include "forge/pulling.hpp"
#include "forge/simplicial.hpp"

namespace forge {

/// Polytope of doubly stochastic n x n matrices: vertices are the permutation
/// matrices (sorted lexicographically, row-major coordinates), facets the
/// entrywise nonnegativity constraints that survive pruning, equalities the
/// 2n line sums. Validated on return.
IntegerPolytope birkhoff(int n);

/// Indices of the n powers of the full-cycle permutation matrix.
std::vector<int> birkhoff_cyclic_simplex(int n, const IntegerPolytope& p);

struct OrderPolytope {
    IntegerPolytope polytope;
    std::vector<std::uint32_t> ideal_masks;  // per vertex, the underlying ideal

    int vertex_of_ideal(std::uint32_t mask) const;
};

/// Order polytope in Z^{m+1} (coordinate 0 is the adjoined bottom, fixed to
/// 1). Vertices are the indicator vectors of ideals, sorted by (cardinality,
/// mask) — an order compatible with containment. Validated on return.
OrderPolytope order_polytope(const Poset& omega);

/// The rank-ideal vertices v_1..v_n (v_k = ideal of elements of rank <= k-2).
/// Requires a graded poset.
std::vector<int> rank_ideal_simplex(const Poset& omega, const OrderPolytope& op);

/// Equatorial complex: vertices are the nonempty proper ideals whose
/// indicator is equatorial, faces the chains of ideals whose indicator sum is
/// equatorial. Vertex labels are order-polytope vertex indices. Requires a
/// graded poset. When no ideal qualifies the result is the complex {∅}.
SimplicialComplex equatorial_complex(const Poset& omega, const OrderPolytope& op);

/// Perfect matching polytope of a connected regular bipartite loopless
/// multigraph, in Z^edges. Validated on return.
IntegerPolytope matching_polytope(const MultiGraph& g);

/// If the all-ones vector lies on the cone cut out by the equalities (scaled
/// consistently to some dilate r), it is the unique minimal strictly positive
/// solution; returns (all-ones, r). Otherwise nullopt.
std::optional<std::pair<std::vector<Int>, Int>> ones_minimal_element(const IntegerPolytope& p);

/// Every lattice point of every dilate r <= degree_bound must decompose as a
/// sum of r vertices.
bool monoid_generation_check(IntegerPolytope& p, int degree_bound);

/// Order with sigma first (coned innermost) and the remaining vertices by
/// ascending index. Builders sort vertices canonically, so for order
/// polytopes the tail is containment-compatible.
VertexOrder pipeline_order(const IntegerPolytope& p, const std::vector<int>& sigma);

}  // namespace forge

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/numeric.hpp"
#include "forge/polynomial.hpp"

namespace forge {

/// Finite poset on the ground set {1..m}, stored by its cover relations.
/// Elements are 1-indexed externally and 0-indexed internally via masks.
struct Poset {
    int m = 0;
    std::vector<std::pair<int, int>> covers;  // (i, j): i covered by j, 1-indexed

    // derived, filled by finalize()
    std::vector<std::uint32_t> below;  // below[i] = strict down-set mask of element i (0-indexed)
    std::vector<std::uint32_t> above;
    bool finalized = false;

    void finalize();  // throws input_error on cycles or bad covers

    bool less(int i, int j) const {  // strict order, 1-indexed
        return (below[static_cast<std::size_t>(j - 1)] >> (i - 1)) & 1;
    }

    /// true iff the identity permutation is a linear extension
    bool naturally_labeled() const;

    /// All maximal chains of the bounded extension have equal length; ranks
    /// start at 0 on the minimal elements.
    bool graded() const;
    /// rank per element (longest chain from a minimal element), 1-indexed input
    std::vector<int> ranks() const;
    /// number of rank levels (graded posets only)
    int rank_levels() const;

    /// All ideals (down-sets) of the poset as bitmasks, including the empty
    /// and full ideals, sorted by (popcount, mask).
    std::vector<std::uint32_t> ideals() const;

    bool is_ideal(std::uint32_t mask) const;
};

Poset chain_poset(int m);
Poset antichain_poset(int m);

/// Complete bipartite poset: elements 1..a below a+1..a+b.
Poset bipartite_poset(int a, int b);

/// All linear extensions as permutations (w_1..w_m of 1..m with order
/// compatibility). Enumeration stops with budget_error past the guard.
std::vector<std::vector<int>> linear_extensions(const Poset& p, std::size_t guard = 1000000);

/// Descent-generating polynomial over the linear extensions. Requires a
/// natural labeling.
IntPolynomial eulerian_polynomial(const Poset& p, std::size_t guard = 1000000);

/// Relabels elements along a linear extension so the result is naturally
/// labeled.
Poset relabel_naturally(const Poset& p);

/// All posets on m elements up to isomorphism (canonical representatives).
/// Sizes 1..7 are practical; counts for 1..6 are 1, 2, 5, 16, 63, 318.
std::vector<Poset> all_posets(int m);

}  // namespace forge

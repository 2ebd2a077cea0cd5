#pragma once

#include <string>
#include <vector>

#include "forge/graphs.hpp"
#include "forge/macaulay.hpp"
#include "forge/polynomial.hpp"
#include "forge/polytope.hpp"
#include "forge/poset.hpp"
#include "forge/pulling.hpp"

namespace forge {

struct Budgets {
    long max_dilate = 64;
    unsigned long long max_nodes = 200000000ULL;  // DFS nodes per count
    std::size_t max_faces = 1000000;
};

/// Exact number of lattice points of the r-th dilate. Backtracks over the
/// coordinates with interval pruning from the constraints; partitions the
/// first branching levels across OpenMP workers and sums the per-branch
/// counts in task order. EHRHART_FORGE_THREADS caps the worker count.
Int count_points(IntegerPolytope& p, long r, const Budgets& budgets = {});

/// Single-threaded reference enumeration; must agree with count_points.
Int count_points_serial(IntegerPolytope& p, long r, const Budgets& budgets = {});

/// The lattice points themselves (serial).
std::vector<std::vector<Int>> enumerate_points(IntegerPolytope& p, long r,
                                               const Budgets& budgets = {});

/// Numerator over (1-t)^{denom_exponent}.
struct EhrhartSeries {
    IntPolynomial numerator;
    int denom_exponent = 0;

    std::string to_string() const {
        return "(" + numerator.pretty() + ")/(1-t)^" + std::to_string(denom_exponent);
    }
};

struct CountingSeries {
    EhrhartSeries series;
    std::vector<Int> values;  // the counts that produced it
};

/// Numerator via counts of r = 0..m+1 (the extra value is an
/// overdetermination check inside numerator_from_values).
CountingSeries series_by_counting(IntegerPolytope& p, const Budgets& budgets = {});

/// Prefix h_0..h_{r_max} of the numerator from counts of r = 0..r_max only.
std::vector<Int> counting_numerator_prefix(IntegerPolytope& p, long r_max,
                                           const Budgets& budgets = {});

/// Numerator as the h-polynomial of the pulling triangulation; the order must
/// be compressed (verification_error otherwise, naming the offending cell).
EhrhartSeries series_by_triangulation(IntegerPolytope& p, const FaceLattice& lat,
                                      const LatticeBasis& basis, const VertexOrder& order);

/// Maps rho with i < j implying rho(i) >= rho(j), values in {0..r}.
Int order_reversing_count(const Poset& omega, long r);

/// Series for line-sum-r nonnegative square matrices of size n. Asserts the
/// denominator exponent (n-1)^2 + 1 and numerator degree n^2 - 3n + 2.
EhrhartSeries magic_square_series(int n, const Budgets& budgets = {});

struct GraphSeries {
    EhrhartSeries series;
    int m = 0;  // polytope dimension q - p + 1
    int n = 0;  // regularity degree
    int d = 0;  // m - n + 1
};

/// Series counting the magic labelings of a connected regular bipartite
/// graph by index.
GraphSeries magic_labeling_series(const MultiGraph& g, const Budgets& budgets = {});

struct PipelineStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PipelineReport {
    std::string polytope_id;
    int ambient_dim = 0;
    int num_vertices = 0;
    int m = 0;  // polytope dimension
    int n = 0;  // special simplex size
    int d = 0;  // m - n + 1
    std::vector<PipelineStage> stages;
    IntPolynomial h_triangulation;
    IntPolynomial h_counting;
    std::vector<Int> counts;
    GTheoremVerdict g;
    bool pass = false;

    const PipelineStage* find(const std::string& name) const;
};

/// End-to-end verification: special-simplex certificate, codimension face
/// scan, compressed ordering, both series routes and their agreement, the
/// join decomposition with its sphere certificate, the degree law
/// deg h = m-n+1, and the symmetry/M-vector/unimodality conclusions. All
/// stages run even after failures so the report lists everything.
PipelineReport run_pipeline(IntegerPolytope& p, const std::vector<int>& sigma,
                            const VertexOrder& order, const Budgets& budgets = {});

}  // namespace forge

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forge/numeric.hpp"

namespace forge {

using IntMat = std::vector<std::vector<Int>>;  // row-major
using RatMat = std::vector<std::vector<Rat>>;

IntMat identity_matrix(int n);

/// Rank over Q of an integer matrix (exact, fraction-free).
int int_rank(IntMat a);

/// Determinant of a square integer matrix (Bareiss, exact).
Int int_det(IntMat a);

/// Basis of {x in Z^n : A x = 0}, returned as rows. The basis spans the full
/// rational kernel intersected with Z^n (saturated), via unimodular column
/// reduction.
IntMat integer_kernel(const IntMat& a);

/// Row basis of the saturation of the row span: span_Q(rows) intersected with
/// Z^n. Computed as the integer kernel of the kernel.
IntMat saturate_rows(const IntMat& a);

struct TUResult {
    bool ok = false;
    // witness submatrix (row indices, column indices) when not TU
    std::vector<int> rows, cols;
    Int det;
};

/// Brute-force total unimodularity: every square submatrix has determinant in
/// {-1,0,1}. Entries outside {-1,0,1} fail immediately (they are 1x1
/// submatrices). size_bound guards the exponential enumeration.
TUResult is_totally_unimodular(const IntMat& a, int size_bound = 8);

/// Exact rational Gaussian elimination helpers.
std::optional<std::vector<Rat>> rat_solve(RatMat a, std::vector<Rat> b);
RatMat rat_nullspace(RatMat a);  // basis rows of {x : A x = 0}
std::optional<RatMat> rat_inverse(RatMat a);

/// Affine rank of a point set = rank of pairwise differences. Points are rows.
int affine_rank(const std::vector<std::vector<Int>>& pts);

}  // namespace forge

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forge/numeric.hpp"
#include "forge/polynomial.hpp"

namespace forge {

/// Greedy binomial representation n = C(k_i,i) + C(k_{i-1},i-1) + ... + C(k_j,j)
/// with k_i > k_{i-1} > ... > k_j >= j >= 1. Unique for n >= 1.
struct MacaulayRep {
    int i = 0;                              // top index of the expansion
    std::vector<std::pair<Int, int>> terms; // (k_s, s), s descending from i

    Int reconstruct() const {
        Int n = 0;
        for (const auto& [k, s] : terms) n += binomial(k, static_cast<unsigned long>(s));
        return n;
    }
};

MacaulayRep macaulay_rep(const Int& n, int i);

/// The bound n^(i): 0 for n = 0, else sum of C(k_s+1, s+1) over the greedy
/// representation of n at index i.
Int macaulay_bound(const Int& n, int i);

struct MVectorResult {
    bool ok = false;
    int violated_index = -1;  // first index whose entry breaks the conditions
};

/// A sequence (g_0,...,g_l) of integers is an M-vector iff g_0 = 1, entries are
/// nonnegative and g_{i+1} <= g_i^(i) for 1 <= i <= l-1.
MVectorResult is_m_vector(const std::vector<Int>& g);

/// h-vector: entries (h_0,...,h_d), all nonnegative.
struct HVector {
    std::vector<Int> entries;

    HVector() = default;
    explicit HVector(std::vector<Int> e) : entries(std::move(e)) {
        if (entries.empty()) throw input_error("h-vector must have at least one entry");
        for (const Int& x : entries)
            if (x < 0) throw input_error("h-vector entries must be nonnegative");
    }
    /// Pads a polynomial's coefficients with zeros out to degree d.
    static HVector from_polynomial(const IntPolynomial& h, int d);

    int d() const { return static_cast<int>(entries.size()) - 1; }
};

struct GTheoremVerdict {
    bool symmetric = false;
    bool g_is_m_vector = false;
    bool unimodal = false;
    int symmetric_fail = -1;  // witness indices when a condition fails
    int m_vector_fail = -1;
    int unimodal_fail = -1;

    bool all() const { return symmetric && g_is_m_vector && unimodal; }
};

/// Checks the three conditions on (h_0,...,h_d): symmetry h_i = h_{d-i}, the
/// difference vector (h_0, h_1-h_0, ..., h_{floor(d/2)}-h_{floor(d/2)-1}) being
/// an M-vector, and the unimodality chain h_0 <= h_1 <= ... <= h_{floor(d/2)}.
GTheoremVerdict g_theorem_check(const HVector& h);

/// Converts a face-count vector (f_0,...,f_{d-1}) to (h_0,...,h_d) by expanding
/// sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}, with f_{-1} = 1. The empty
/// complex (d = 0, no faces) yields h = (1).
HVector h_from_f(const std::vector<Int>& f, int d);

/// Recovers the series numerator h from counting-function values H(0..),
/// assuming the generating function h(t)/(1-t)^{m+1}. At least m+1 values are
/// required; surplus values act as consistency checks and any nonzero
/// coefficient they would force beyond index m raises input_error.
IntPolynomial numerator_from_values(const std::vector<Int>& values, int m);

/// Coefficient of t^r in h(t)/(1-t)^{denom_exponent}.
Int series_coefficient(const IntPolynomial& h, int denom_exponent, long r);

}  // namespace forge

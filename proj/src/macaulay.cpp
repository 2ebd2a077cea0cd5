#include "forge/macaulay.hpp"

namespace forge {

MacaulayRep macaulay_rep(const Int& n, int i) {
    if (n < 1) throw input_error("macaulay_rep: n must be positive");
    if (i < 1) throw input_error("macaulay_rep: i must be positive");
    MacaulayRep rep;
    rep.i = i;
    Int rest = n;
    int s = i;
    while (rest > 0) {
        // largest k with C(k, s) <= rest, by doubling then bisection
        const unsigned long us = static_cast<unsigned long>(s);
        Int lo = s, hi = s;
        while (binomial(hi + 1, us) <= rest) hi = hi * 2 + 1;
        while (lo < hi) {
            Int mid = (lo + hi + 1) / 2;
            if (binomial(mid, us) <= rest) lo = mid;
            else hi = mid - 1;
        }
        rep.terms.emplace_back(lo, s);
        rest -= binomial(lo, us);
        --s;
    }
    return rep;
}

Int macaulay_bound(const Int& n, int i) {
    if (i < 1) throw input_error("macaulay_bound: i must be positive");
    if (n < 0) throw input_error("macaulay_bound: n must be nonnegative");
    if (n == 0) return 0;
    Int bound = 0;
    for (const auto& [k, s] : macaulay_rep(n, i).terms)
        bound += binomial(k + 1, static_cast<unsigned long>(s) + 1);
    return bound;
}

MVectorResult is_m_vector(const std::vector<Int>& g) {
    if (g.empty()) return {false, -1};
    if (g[0] != 1) return {false, 0};
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i] < 0) return {false, static_cast<int>(i)};
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (g[i + 1] > macaulay_bound(g[i], static_cast<int>(i)))
            return {false, static_cast<int>(i) + 1};
    return {true, -1};
}

HVector HVector::from_polynomial(const IntPolynomial& h, int d) {
    if (h.degree() > d) throw input_error("polynomial degree exceeds d");
    std::vector<Int> e(static_cast<std::size_t>(d) + 1, Int(0));
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) e[i] = h.coeffs[i];
    return HVector(std::move(e));
}

GTheoremVerdict g_theorem_check(const HVector& h) {
    GTheoremVerdict v;
    const auto& e = h.entries;
    const int d = h.d();

    v.symmetric = true;
    for (int i = 0; i <= d; ++i)
        if (e[i] != e[d - i]) {
            v.symmetric = false;
            v.symmetric_fail = i;
            break;
        }

    std::vector<Int> g;
    g.push_back(e[0]);
    for (int i = 1; i <= d / 2; ++i) g.push_back(e[i] - e[i - 1]);
    MVectorResult m = is_m_vector(g);
    v.g_is_m_vector = m.ok;
    v.m_vector_fail = m.violated_index;

    v.unimodal = true;
    for (int i = 1; i <= d / 2; ++i)
        if (e[i] < e[i - 1]) {
            v.unimodal = false;
            v.unimodal_fail = i;
            break;
        }
    return v;
}

HVector h_from_f(const std::vector<Int>& f, int d) {
    if (d < 0) throw input_error("h_from_f: d must be nonnegative");
    if (static_cast<int>(f.size()) != d)
        throw input_error("h_from_f: expected exactly d face counts");
    // h_i = sum_{j<=i} (-1)^{i-j} C(d-j, i-j) f_{j-1}, with f_{-1} = 1
    std::vector<Int> h(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            const Int& fj = (j == 0) ? 1 : f[j - 1];
            Int term = binomial(Int(d - j), static_cast<unsigned long>(i - j)) * fj;
            if ((i - j) % 2) acc -= term;
            else acc += term;
        }
        h[static_cast<std::size_t>(i)] = acc;
    }
    return HVector(std::move(h));
}

IntPolynomial numerator_from_values(const std::vector<Int>& values, int m) {
    if (m < 0) throw input_error("numerator_from_values: m must be nonnegative");
    if (static_cast<int>(values.size()) < m + 1)
        throw input_error("numerator_from_values: need at least m+1 values");
    // h_i = sum_{j<=i} (-1)^{i-j} C(m+1, i-j) values[j]
    std::vector<Int> h(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Int term = binomial(Int(m + 1), static_cast<unsigned long>(i - j)) * values[j];
            if ((i - j) % 2) acc -= term;
            else acc += term;
        }
        h[i] = acc;
    }
    for (std::size_t i = static_cast<std::size_t>(m) + 1; i < h.size(); ++i)
        if (h[i] != 0)
            throw input_error("numerator_from_values: values are inconsistent with dimension " +
                              std::to_string(m) + " (extra coefficient at index " +
                              std::to_string(i) + ")");
    h.resize(static_cast<std::size_t>(m) + 1);
    return IntPolynomial(std::move(h));
}

Int series_coefficient(const IntPolynomial& h, int denom_exponent, long r) {
    if (denom_exponent < 1) throw input_error("series_coefficient: denominator exponent must be >= 1");
    if (r < 0) return 0;
    // [t^r] h(t)/(1-t)^M = sum_j h_j C(M-1 + r-j, M-1)
    Int acc = 0;
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
        long rj = r - static_cast<long>(j);
        if (rj < 0) break;
        acc += h.coeffs[j] * binomial(Int(denom_exponent - 1 + rj),
                                      static_cast<unsigned long>(denom_exponent - 1));
    }
    return acc;
}

}  // namespace forge

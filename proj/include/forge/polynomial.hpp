#pragma once

#include <vector>

#include "forge/numeric.hpp"

namespace forge {

/// Integer-coefficient polynomial in one variable t. coeffs[i] is the
/// coefficient of t^i; trailing zeros are trimmed, so the zero polynomial
/// has an empty coefficient vector and degree() == -1.
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

    static IntPolynomial constant(Int c) {
        IntPolynomial p;
        p.coeffs.push_back(std::move(c));
        p.trim();
        return p;
    }
    static IntPolynomial one() { return constant(1); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }

    const Int& at(std::size_t i) const {
        static const Int zero = 0;
        return i < coeffs.size() ? coeffs[i] : zero;
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Int(0));
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return IntPolynomial(std::move(c));
    }

    /// Space-separated coefficient list, "1 14 87"; "0" for the zero polynomial.
    std::string coeff_string() const {
        if (coeffs.empty()) return "0";
        return join_ints(coeffs);
    }

    /// Human form, e.g. "1 + 4t + t^2".
    std::string pretty() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += coeffs[i] < 0 ? " - " : " + ";
            else if (coeffs[i] < 0) s += "-";
            Int a = abs(coeffs[i]);
            if (a != 1 || i == 0) s += a.get_str();
            if (i == 1) s += "t";
            if (i > 1) s += "t^" + std::to_string(i);
        }
        return s;
    }
};

}  // namespace forge

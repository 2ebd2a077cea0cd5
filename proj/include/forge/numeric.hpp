#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

// All exact arithmetic runs on GMP. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Malformed or out-of-contract input (files, preconditions). CLI exit 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource limit was exceeded (dilate, nodes, faces). CLI exit 2.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical check failed on otherwise well-formed input. CLI exit 1.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw input_error("binomial: negative n");
    if (n < static_cast<long>(k)) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) { return binomial(Int(static_cast<long>(n)), k); }

inline long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw budget_error("integer does not fit in a machine word");
    return v.get_si();
}

inline std::string join_ints(const std::vector<Int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i].get_str();
    }
    return s;
}

}  // namespace forge
